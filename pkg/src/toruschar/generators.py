"""Trace generators and the level-reduction decomposition.

The coordinate ring of the torus quotient is generated by the trace
functions tau(alpha) (all families) together with, for even SO, the
Pfaffian-flavoured generators Q(alpha_1..alpha_n).  This module computes
their Laurent images and, in the other direction, rewrites any Weyl-
invariant integer-weight Laurent polynomial as a polynomial in the
generator symbols.  The rewriting proceeds by strictly decreasing level:
a level-l orbit sum is recovered from the product of a level-1 image with
a level-(l-1) orbit sum, after subtracting the lower-level remainder and
dividing by a multiplicity constant that is computed from the expansion
itself rather than assumed.

A note on the Q image: the alternating sum

    i^n * sum_{s in S_n} prod_i (x_{s(i)}^{a_i} - x_{s(i)}^{-a_i})

is taken *without* a sign character on s.  With the sign the expression
would change sign under plain transpositions of the eigenvalue indices and
so could not lie in the invariant ring, and the antisymmetrized half of a
level-n orbit sum (which is exactly what the top-level reduction produces)
carries no sign either.  Consequently Q is symmetric under permuting its
alpha arguments and flips sign when a single argument is negated.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional

from .errors import DomainError, InternalCheckError, UnsupportedInputError
from .groups import GroupSpec
from .laurent import (
    ExponentMatrix,
    LaurentPoly,
    canonical_mod_relations,
)
from .scalars import GaussRat, I, ONE, ZERO
from .weyl import (
    act_monomial,
    invariance_violation,
    level_of_monomial,
    level_of_poly,
    orbit_sum,
    pattern_elements,
    pattern_order,
    pattern_sum,
)

TauSymbol = tuple[str, tuple[int, ...]]
QSymbol = tuple[str, tuple[tuple[int, ...], ...]]
Symbol = TauSymbol | QSymbol


# ---------------------------------------------------------------------------
# symbols
# ---------------------------------------------------------------------------

def _normalize_vector(alpha: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Flip the vector so its first nonzero entry is positive."""
    for e in alpha:
        if e > 0:
            return alpha, 1
        if e < 0:
            return tuple(-x for x in alpha), -1
    return alpha, 1


def tau_symbol(group: GroupSpec, alpha) -> TauSymbol:
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != group.factors:
        raise DomainError(f"alpha must have {group.factors} entries")
    if group.symmetric_traces:
        alpha, _ = _normalize_vector(alpha)
    return ("tau", alpha)


def q_symbol(group: GroupSpec, alphas) -> tuple[Optional[QSymbol], GaussRat]:
    """Canonical Q symbol and the scalar relating it to the raw arguments.

    Returns (None, 0) when any argument vanishes.  Arguments are sorted
    (the image is symmetric in them) and sign-normalized per vector, each
    flip contributing a factor -1.
    """
    if group.family != "SOeven":
        raise DomainError("Q generators exist only for even SO")
    alphas = tuple(tuple(int(a) for a in alpha) for alpha in alphas)
    if len(alphas) != group.rank:
        raise DomainError(f"Q takes exactly {group.rank} vectors")
    if any(len(a) != group.factors for a in alphas):
        raise DomainError(f"each alpha must have {group.factors} entries")
    sign = 1
    normed = []
    for alpha in alphas:
        if not any(alpha):
            return None, ZERO
        a, s = _normalize_vector(alpha)
        sign *= s
        normed.append(a)
    return ("q", tuple(sorted(normed))), GaussRat(sign)


# ---------------------------------------------------------------------------
# generator polynomials
# ---------------------------------------------------------------------------

class GeneratorPoly:
    """Polynomial in commuting generator symbols with GaussRat coefficients.

    Keys are sorted tuples of symbols (monomial multisets); the empty tuple
    is the constant term.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, GaussRat] = ()):
        self.terms = {k: v for k, v in dict(terms).items() if v}

    @classmethod
    def zero(cls) -> "GeneratorPoly":
        return cls()

    @classmethod
    def constant(cls, value) -> "GeneratorPoly":
        v = value if isinstance(value, GaussRat) else GaussRat(value)
        return cls({(): v} if v else {})

    @classmethod
    def symbol(cls, sym: Symbol, coeff=ONE) -> "GeneratorPoly":
        c = coeff if isinstance(coeff, GaussRat) else GaussRat(coeff)
        return cls({(sym,): c})

    def __add__(self, other: "GeneratorPoly") -> "GeneratorPoly":
        terms = dict(self.terms)
        for k, v in other.terms.items():
            acc = terms.get(k)
            acc = v if acc is None else acc + v
            if acc:
                terms[k] = acc
            else:
                terms.pop(k, None)
        return GeneratorPoly(terms)

    def __neg__(self) -> "GeneratorPoly":
        return GeneratorPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "GeneratorPoly") -> "GeneratorPoly":
        return self + (-other)

    def __mul__(self, other) -> "GeneratorPoly":
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.scaled(other)
        out: dict[tuple, GaussRat] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                key = tuple(sorted(k1 + k2))
                v = v1 * v2
                acc = out.get(key)
                acc = v if acc is None else acc + v
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return GeneratorPoly(out)

    __rmul__ = __mul__

    def scaled(self, factor) -> "GeneratorPoly":
        f = factor if isinstance(factor, GaussRat) else GaussRat(factor)
        if not f:
            return GeneratorPoly()
        return GeneratorPoly({k: v * f for k, v in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeneratorPoly):
            return NotImplemented
        return self.terms == other.terms

    def sorted_terms(self):
        return sorted(self.terms.items())

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        entries = []
        for key, coeff in self.sorted_terms():
            factors = []
            for kind, payload in key:
                if kind == "tau":
                    factors.append({"tau": list(payload)})
                else:
                    factors.append({"q": [list(a) for a in payload]})
            entries.append({"coeff": str(coeff), "factors": factors})
        return {"terms": entries}

    @staticmethod
    def from_json(obj: dict, group: Optional[GroupSpec] = None) -> "GeneratorPoly":
        terms: dict[tuple, GaussRat] = {}
        for entry in obj.get("terms", []):
            coeff = GaussRat.parse(entry["coeff"])
            syms: list[Symbol] = []
            for factor in entry.get("factors", []):
                if "tau" in factor:
                    alpha = tuple(int(a) for a in factor["tau"])
                    if group is not None:
                        syms.append(tau_symbol(group, alpha))
                    else:
                        syms.append(("tau", alpha))
                elif "q" in factor:
                    alphas = tuple(tuple(int(a) for a in v) for v in factor["q"])
                    if group is not None:
                        sym, s = q_symbol(group, alphas)
                        if sym is None:
                            coeff = ZERO
                            break
                        coeff = coeff * s
                        syms.append(sym)
                    else:
                        syms.append(("q", alphas))
                else:
                    raise DomainError(f"unknown generator factor {factor}")
            if not coeff:
                continue
            key = tuple(sorted(syms))
            acc = terms.get(key, ZERO) + coeff
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)
        return GeneratorPoly(terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, coeff in self.sorted_terms():
            factors = []
            for kind, payload in key:
                if kind == "tau":
                    factors.append("T(" + ",".join(map(str, payload)) + ")")
                else:
                    body = ";".join(",".join(map(str, a)) for a in payload)
                    factors.append(f"Q({body})")
            mono = "*".join(factors) if factors else "1"
            parts.append(f"({coeff})*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"GeneratorPoly({self})"


# ---------------------------------------------------------------------------
# generator images
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def tau_image(group: GroupSpec, alpha: tuple[int, ...]) -> LaurentPoly:
    """Laurent image of the trace generator tau(alpha).

    GL/SL: sum_i x_i^alpha.  Sp and even SO: sum_i (x_i^alpha +
    x_i^-alpha).  Odd SO additionally picks up the constant 1 from the
    fixed eigenvalue.  alpha = 0 yields the matrix size.
    """
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != group.factors:
        raise DomainError(f"alpha must have {group.factors} entries")
    n, N = group.rank, group.factors
    doubled = tuple(2 * a for a in alpha)
    neg = tuple(-e for e in doubled)
    zero_row = (0,) * N
    terms: dict[ExponentMatrix, GaussRat] = {}

    def add(m: ExponentMatrix):
        key = canonical_mod_relations(m, group)
        terms[key] = terms.get(key, ZERO) + ONE

    for i in range(n):
        rows = [zero_row] * n
        rows[i] = doubled
        add(tuple(rows))
        if group.symmetric_traces:
            rows[i] = neg
            add(tuple(rows))
    poly = LaurentPoly(group, terms)
    if group.family == "SOodd":
        poly = poly + LaurentPoly.constant(group, 1)
    return poly


@lru_cache(maxsize=None)
def _q_image_cached(group: GroupSpec, alphas: tuple[tuple[int, ...], ...]) -> LaurentPoly:
    n, N = group.rank, group.factors
    zero_row = (0,) * N
    i_pow_n = I ** n
    terms: dict[ExponentMatrix, GaussRat] = {}
    for perm in itertools.permutations(range(n)):
        for deltas in itertools.product((1, -1), repeat=n):
            rows = [zero_row] * n
            for i in range(n):
                rows[perm[i]] = tuple(2 * deltas[i] * a for a in alphas[i])
            key = tuple(rows)
            coeff = i_pow_n if _prod(deltas) == 1 else -i_pow_n
            acc = terms.get(key, ZERO) + coeff
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)
    return LaurentPoly(group, terms)


def q_image(group: GroupSpec, alphas) -> LaurentPoly:
    """Laurent image of Q(alpha_1..alpha_n) on the even SO torus:
    i^n * sum over permutations s of prod_i (x_{s(i)}^{a_i} - x_{s(i)}^{-a_i}).
    """
    sym, sign = q_symbol(group, alphas)
    if sym is None:
        return LaurentPoly.zero(group)
    return _q_image_cached(group, sym[1]).scaled(sign)


def _prod(vals) -> int:
    out = 1
    for v in vals:
        out *= v
    return out


def symbol_image(group: GroupSpec, sym: Symbol) -> LaurentPoly:
    kind, payload = sym
    if kind == "tau":
        return tau_image(group, payload)
    return q_image(group, payload)


def expand(p: GeneratorPoly, group: GroupSpec) -> LaurentPoly:
    """Substitute generator images and multiply out, exactly."""
    total = LaurentPoly.zero(group)
    for key, coeff in p.sorted_terms():
        part = LaurentPoly.constant(group, coeff)
        for sym in key:
            part = part * symbol_image(group, sym)
        total = total + part
    return total


# ---------------------------------------------------------------------------
# decomposition
# ---------------------------------------------------------------------------

def _true_row(row: tuple[int, ...]) -> tuple[int, ...]:
    if any(e & 1 for e in row):
        raise UnsupportedInputError("half-integer weight in decomposition")
    return tuple(e // 2 for e in row)


def _peel_key(group: GroupSpec):
    return lambda m: (level_of_monomial(m, group), m)


def decompose(f: LaurentPoly, group: GroupSpec) -> GeneratorPoly:
    """Express a W-invariant integer-weight polynomial in the generators.

    Raises DomainError (with the violating generator) on non-invariant
    input and UnsupportedInputError on half-integer weights.  The result P
    satisfies expand(P, group) == f exactly; this is verified before
    returning.
    """
    if f.group != group:
        raise DomainError("polynomial belongs to a different group")
    if f.has_half_weights():
        raise UnsupportedInputError(
            "decomposition supports integer-weight invariants only"
        )
    witness = invariance_violation(f, group)
    if witness is not None:
        raise DomainError(f"input is not W-invariant; moved by {witness.describe()}")

    result = GeneratorPoly.zero()
    work = f
    rank_key = _peel_key(group)
    last_level = None
    while work:
        m = max(work.terms, key=rank_key)
        level = level_of_monomial(m, group)
        if last_level is not None and level > last_level:
            raise InternalCheckError("orbit peeling level increased")
        last_level = level
        orb = orbit_sum(m, group)
        coeff = work.terms[m] / orb.terms[m]
        work = work - orb.scaled(coeff)
        result = result + _reduce_orbit(m, group).scaled(coeff)

    check = expand(result, group)
    if check != f:
        raise InternalCheckError("decomposition failed its expand round trip")
    return result


def _reduce_orbit(m: ExponentMatrix, group: GroupSpec) -> GeneratorPoly:
    """GeneratorPoly equal to orbit_sum(m, group)."""
    level = level_of_monomial(m, group)
    if group.family != "SOeven":
        return _reduce_pattern_monomial(m, group, bound=level + 1)
    # Even SO: the Weyl sum is half the full signed sum plus half the
    # antisymmetrized part, which is Q up to the factor i^n (and vanishes
    # unless every row is nonzero).
    half = GaussRat(Fraction(1, 2))
    out = _reduce_pattern_monomial(m, group, bound=level + 1).scaled(half)
    if level == group.rank:
        alphas = tuple(_true_row(row) for row in m)
        sym, sign = q_symbol(group, alphas)
        if sym is not None:
            coeff = half * sign / (I ** group.rank)
            out = out + GeneratorPoly.symbol(sym, coeff)
    return out


_REDUCE_CACHE: dict = {}


def _memo_key(m: ExponentMatrix, group: GroupSpec):
    rows = []
    for row in m:
        if any(row):
            if group.signed:
                row, _ = _normalize_vector(row)
            rows.append(row)
    return (group, tuple(sorted(rows)))


def _reduce_pattern_monomial(m: ExponentMatrix, group: GroupSpec, bound: int) -> GeneratorPoly:
    """GeneratorPoly equal to pattern_sum(m, group).

    ``bound`` is a strict upper bound on the level still allowed; every
    recursive call decreases it, which is asserted.
    """
    level = level_of_monomial(m, group)
    if level >= bound:
        raise InternalCheckError("level reduction failed to descend")
    key = _memo_key(m, group)
    cached = _REDUCE_CACHE.get(key)
    if cached is not None:
        return cached

    result = _reduce_pattern_monomial_uncached(m, group, level)
    _REDUCE_CACHE[key] = result
    return result


def _reduce_pattern_monomial_uncached(
    m: ExponentMatrix, group: GroupSpec, level: int
) -> GeneratorPoly:
    if level == 0:
        return GeneratorPoly.constant(pattern_order(group))

    if level == 1:
        alpha_row = next(row for row in m if any(row))
        alpha = _true_row(alpha_row)
        if group.symmetric_traces:
            alpha, _ = _normalize_vector(alpha)
        timg = tau_image(group, alpha)
        psum = pattern_sum(m, group)
        probe = next(k for k in timg.terms if any(any(r) for r in k))
        lam = psum.coefficient(probe) / timg.terms[probe]
        resid = psum - timg.scaled(lam)
        if not resid.is_constant():
            raise InternalCheckError("level-1 reduction left a nonconstant residue")
        out = GeneratorPoly.symbol(tau_symbol(group, alpha), lam)
        const = resid.constant_coefficient()
        if const:
            out = out + GeneratorPoly.constant(const)
        return out

    # level >= 2: multiply a level-1 image against the sum one level down,
    # subtract the lower-level remainder A, divide by the computed constant.
    n = group.rank
    pos, alpha_row = max(
        ((i, row) for i, row in enumerate(m) if any(row)), key=lambda t: t[1]
    )
    alpha = _true_row(alpha_row)
    sub_rows = list(m)
    sub_rows[pos] = (0,) * group.factors
    m_sub = tuple(sub_rows)
    if level_of_monomial(m_sub, group) != level - 1:
        raise InternalCheckError("peeled monomial level did not drop by one")

    timg = tau_image(group, alpha)
    level_one = (
        timg - LaurentPoly.constant(group, 1) if group.family == "SOodd" else timg
    )
    gen_one = GeneratorPoly.symbol(tau_symbol(group, alpha))
    if group.family == "SOodd":
        gen_one = gen_one + GeneratorPoly.constant(GaussRat(-1))

    sub_sum = pattern_sum(m_sub, group)
    expanded = level_one * sub_sum

    # A: the terms of the product whose new variable lands on an already
    # occupied row; they have strictly lower level.
    doubled = tuple(2 * a for a in alpha)
    deltas = (1,) if group.family in ("GL", "SL") else (1, -1)
    a_terms: dict[ExponentMatrix, GaussRat] = {}
    for w in pattern_elements(group):
        mw = act_monomial(w, m_sub)
        for k in range(n):
            if not any(mw[k]):
                continue
            for delta in deltas:
                rows = list(mw)
                rows[k] = tuple(
                    e + delta * d for e, d in zip(rows[k], doubled)
                )
                key = canonical_mod_relations(tuple(rows), group)
                acc = a_terms.get(key, ZERO) + ONE
                if acc:
                    a_terms[key] = acc
                else:
                    a_terms.pop(key, None)
    lower = LaurentPoly(group, a_terms, _trusted=True)

    remainder = expanded - lower
    full_sum = pattern_sum(m, group)
    beta = remainder.coefficient(m) / full_sum.coefficient(m)
    if not beta or remainder != full_sum.scaled(beta):
        # The multiplicity constant is (n - l + 1) (times 2 for signed
        # families) in the sum-over-all-elements convention, hence never
        # zero; reaching this branch indicates a bug, not degeneracy.
        raise InternalCheckError("reduction constant mismatch")

    if lower and level_of_poly(lower, group) >= level:
        raise InternalCheckError("lower-level remainder has full level")

    gen_sub = _reduce_pattern_monomial(m_sub, group, bound=level)
    gen_lower = _reduce_pattern_poly(lower, group, bound=level)
    inv_beta = ONE / beta
    return (gen_one * gen_sub - gen_lower).scaled(inv_beta)


def _reduce_pattern_poly(f: LaurentPoly, group: GroupSpec, bound: int) -> GeneratorPoly:
    """Reduce a pattern-group-invariant polynomial of level < bound."""
    result = GeneratorPoly.zero()
    work = f
    rank_key = _peel_key(group)
    while work:
        m = max(work.terms, key=rank_key)
        psum = pattern_sum(m, group)
        coeff = work.terms[m] / psum.terms[m]
        work = work - psum.scaled(coeff)
        result = result + _reduce_pattern_monomial(m, group, bound).scaled(coeff)
    return result
