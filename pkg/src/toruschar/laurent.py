"""Sparse Laurent polynomials on products of maximal tori.

The coordinate ring worked in is C[x_ij^{+-1}] with 1 <= i <= n (torus rank)
and 1 <= j <= N (number of Z-factors).  A monomial is an n x N matrix of
exponents; row i is the exponent vector of the i-th eigenvalue coordinate.
Exponents are stored *doubled* so the half-integer weights that occur for
even special orthogonal groups remain plain hashable integers: a stored
entry 2k means exponent k, an odd entry 2k+1 means k + 1/2.  Odd entries are
rejected for every family except SOeven.

For SL the ring is the quotient by the relations prod_i x_ij = 1; monomial
keys are normalized by ``canonical_mod_relations`` at construction time, so
polynomial equality is equality in the quotient ring.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DomainError, StructureError
from .groups import GroupSpec
from .scalars import GaussRat, ONE, ZERO

ExponentMatrix = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# exponent-matrix helpers
# ---------------------------------------------------------------------------

def exponents(rows: Iterable[Iterable[int]], halves: bool = False) -> ExponentMatrix:
    """Build a doubled-integer exponent matrix from true integer exponents.

    With ``halves=True`` the input entries are interpreted as already
    doubled (so odd values encode half-integers).
    """
    if halves:
        return tuple(tuple(int(e) for e in row) for row in rows)
    return tuple(tuple(2 * int(e) for e in row) for row in rows)


def check_exponents(m: ExponentMatrix, group: GroupSpec) -> None:
    if len(m) != group.rank or any(len(row) != group.factors for row in m):
        raise StructureError(
            f"exponent matrix shape {len(m)}x? does not match {group}"
        )
    if not group.allows_half_weights:
        for row in m:
            for e in row:
                if e & 1:
                    raise DomainError(
                        f"half-integer exponent not allowed for family {group.family}"
                    )


def true_exponents(m: ExponentMatrix) -> list[list]:
    """Exponents as true values: ints where integral, floats (k+0.5) otherwise."""
    out = []
    for row in m:
        out.append([e // 2 if e % 2 == 0 else e / 2 for e in row])
    return out


def canonical_mod_relations(m: ExponentMatrix, group: GroupSpec) -> ExponentMatrix:
    """Canonical representative of a monomial modulo the SL relations.

    The relations identify monomials differing by adding one vector c to
    every row.  The representative shifts the most frequent row value to
    zero; frequency ties are broken by the lexicographically smallest row
    value.  Families other than SL are returned unchanged.
    """
    if group.family != "SL":
        return m
    counts: dict[tuple[int, ...], int] = {}
    for row in m:
        counts[row] = counts.get(row, 0) + 1
    best = max(counts.values())
    c = min(row for row, k in counts.items() if k == best)
    if not any(c):
        return m
    return tuple(tuple(e - ce for e, ce in zip(row, c)) for row in m)


def zero_exponents(group: GroupSpec) -> ExponentMatrix:
    return tuple((0,) * group.factors for _ in range(group.rank))


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Sparse exact Laurent polynomial over GaussRat coefficients.

    Instances are treated as immutable; every operation returns a new
    polynomial.  Zero coefficients are never stored and SL keys are always
    in canonical form.
    """

    __slots__ = ("group", "terms")

    def __init__(self, group: GroupSpec, terms: Mapping[ExponentMatrix, GaussRat] = (),
                 _trusted: bool = False):
        self.group = group
        if _trusted:
            self.terms = dict(terms)
            return
        clean: dict[ExponentMatrix, GaussRat] = {}
        for m, coeff in dict(terms).items():
            check_exponents(m, group)
            if not isinstance(coeff, GaussRat):
                coeff = GaussRat(coeff)
            if not coeff:
                continue
            key = canonical_mod_relations(m, group)
            acc = clean.get(key)
            acc = coeff if acc is None else acc + coeff
            if acc:
                clean[key] = acc
            else:
                clean.pop(key, None)
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, group: GroupSpec) -> "LaurentPoly":
        return cls(group, {}, _trusted=True)

    @classmethod
    def constant(cls, group: GroupSpec, value) -> "LaurentPoly":
        return cls(group, {zero_exponents(group): GaussRat(value) if not isinstance(value, GaussRat) else value})

    @classmethod
    def monomial(cls, group: GroupSpec, m: ExponentMatrix, coeff=ONE) -> "LaurentPoly":
        return cls(group, {m: coeff if isinstance(coeff, GaussRat) else GaussRat(coeff)})

    @classmethod
    def variable(cls, group: GroupSpec, i: int, j: int, power: int = 1) -> "LaurentPoly":
        """The monomial x_ij^power (1-based indices, integer power)."""
        rows = [[0] * group.factors for _ in range(group.rank)]
        rows[i - 1][j - 1] = power
        return cls.monomial(group, exponents(rows))

    # -- ring operations -------------------------------------------------

    def _require_same_group(self, other: "LaurentPoly") -> None:
        if self.group != other.group:
            raise StructureError(f"group mismatch: {self.group} vs {other.group}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._require_same_group(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            acc = c if acc is None else acc + c
            if acc:
                terms[m] = acc
            else:
                terms.pop(m, None)
        return LaurentPoly(self.group, terms, _trusted=True)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.group, {m: -c for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.scaled(other)
        self._require_same_group(other)
        group = self.group
        canon = canonical_mod_relations if group.family == "SL" else None
        out: dict[ExponentMatrix, GaussRat] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(
                    tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(m1, m2)
                )
                if canon is not None:
                    key = canon(key, group)
                c = c1 * c2
                acc = out.get(key)
                acc = c if acc is None else acc + c
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return LaurentPoly(group, out, _trusted=True)

    __rmul__ = __mul__

    def scaled(self, factor) -> "LaurentPoly":
        if not isinstance(factor, GaussRat):
            factor = GaussRat(factor)
        if not factor:
            return LaurentPoly.zero(self.group)
        return LaurentPoly(
            self.group, {m: c * factor for m, c in self.terms.items()}, _trusted=True
        )

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise DomainError("negative polynomial powers are not defined")
        out = LaurentPoly.constant(self.group, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- calculus / evaluation -------------------------------------------

    def partial(self, i: int, j: int) -> "LaurentPoly":
        """Logarithmic derivative x_ij * d/dx_ij (1-based indices), exact.

        Each term is multiplied by its true (possibly half-integer)
        exponent in variable (i, j).
        """
        out: dict[ExponentMatrix, GaussRat] = {}
        for m, c in self.terms.items():
            e = m[i - 1][j - 1]
            if e:
                out[m] = c * GaussRat(Fraction(e, 2))
        return LaurentPoly(self.group, out, _trusted=True)

    def evaluate(self, point):
        """Substitution homomorphism at a torus point.

        ``point`` must provide ``monomial_value(exponent_matrix)``; the
        result type follows the point (complex in float mode, GaussRat in
        exact mode).
        """
        total = None
        for m, c in sorted(self.terms.items()):
            v = point.monomial_value(m)
            term = c * v if isinstance(v, GaussRat) else complex(c) * v
            total = term if total is None else total + term
        if total is None:
            return point.zero_value()
        return total

    # -- structure queries -------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.group == other.group and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list[tuple[ExponentMatrix, GaussRat]]:
        return sorted(self.terms.items())

    def coefficient(self, m: ExponentMatrix) -> GaussRat:
        return self.terms.get(canonical_mod_relations(m, self.group), ZERO)

    def constant_coefficient(self) -> GaussRat:
        return self.terms.get(zero_exponents(self.group), ZERO)

    def is_constant(self) -> bool:
        return all(not any(any(r) for r in m) for m in self.terms)

    def has_half_weights(self) -> bool:
        return any(e & 1 for m in self.terms for row in m for e in row)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "terms": [
                {"coeff": str(c), "exps": true_exponents(m)}
                for m, c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(obj: dict) -> "LaurentPoly":
        group = GroupSpec.from_json(obj["group"])
        terms: dict[ExponentMatrix, GaussRat] = {}
        for entry in obj.get("terms", []):
            rows = []
            for row in entry["exps"]:
                doubled = []
                for e in row:
                    d = 2 * Fraction(e) if not isinstance(e, float) else Fraction(e) * 2
                    if d.denominator != 1:
                        raise DomainError(f"exponent {e} is not a half-integer")
                    doubled.append(int(d))
                rows.append(tuple(doubled))
            m = tuple(rows)
            coeff = GaussRat.parse(entry["coeff"])
            terms[m] = terms.get(m, ZERO) + coeff
        return LaurentPoly(group, terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for i, row in enumerate(m, start=1):
                for j, e in enumerate(row, start=1):
                    if e:
                        p = e // 2 if e % 2 == 0 else f"{e}/2"
                        factors.append(f"x{i}{j}^{p}" if p != 1 else f"x{i}{j}")
            mono = "*".join(factors) if factors else "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly[{self.group}]({self})"
