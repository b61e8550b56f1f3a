"""Symbolic Poisson algebra on torus trace symbols.

Polynomials in the symbols tau(p, q), (p, q) in Z^2, carry the bracket

    {tau_a, tau_b} = det(a, b)/c * (tau_{a+b} - tau_a tau_b / n)      (SL)
    {tau_a, tau_b} = det(a, b)/(2c) * (tau_{a+b} - tau_{a-b})         (Sp, SO)

extended to products by Leibniz and to sums bilinearly.  The scalar c is
the multiple of the trace form used for the underlying symplectic
structure.  For Sp/SO the symbols tau(-a) and tau(a) coincide and keys
are normalized accordingly at construction; no such identification is
made for GL/SL.

There is no GL formula in this scheme; an extrapolated rule
{tau_a, tau_b} = det(a,b)/c * tau_{a+b} is available behind an explicit
flag, validated only by agreement with the numeric oracle.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .errors import DomainError, StructureError
from .generators import tau_image
from .groups import GroupSpec
from .scalars import GaussRat, ONE, ZERO

LatticeVec = tuple[int, int]


def _norm_symbol(group: GroupSpec, a) -> LatticeVec:
    p, q = int(a[0]), int(a[1])
    if group.symmetric_traces:
        if p < 0 or (p == 0 and q < 0):
            return (-p, -q)
    return (p, q)


class TauPoly:
    """Polynomial in trace symbols over GaussRat, tied to a group and a
    trace-form multiple c."""

    __slots__ = ("group", "c", "terms")

    def __init__(self, group: GroupSpec, c: Fraction, terms: Mapping[tuple, GaussRat] = ()):
        if group.factors != 2:
            raise StructureError("trace symbols need exactly two factors")
        c = Fraction(c)
        if c == 0:
            raise StructureError("c must be nonzero")
        self.group = group
        self.c = c
        clean: dict[tuple, GaussRat] = {}
        for key, coeff in dict(terms).items():
            if not isinstance(coeff, GaussRat):
                coeff = GaussRat(coeff)
            if not coeff:
                continue
            norm = tuple(sorted(_norm_symbol(group, a) for a in key))
            acc = clean.get(norm)
            acc = coeff if acc is None else acc + coeff
            if acc:
                clean[norm] = acc
            else:
                clean.pop(norm, None)
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, group: GroupSpec, c: Fraction = Fraction(1)) -> "TauPoly":
        return cls(group, c)

    @classmethod
    def constant(cls, group: GroupSpec, c: Fraction, value) -> "TauPoly":
        return cls(group, c, {(): value})

    @classmethod
    def symbol(cls, group: GroupSpec, c: Fraction, a) -> "TauPoly":
        return cls(group, c, {(tuple(a),): ONE})

    # -- arithmetic --------------------------------------------------------

    def _require_compatible(self, other: "TauPoly"):
        if self.group != other.group or self.c != other.c:
            raise StructureError("mismatched group or c parameter")

    def __add__(self, other: "TauPoly") -> "TauPoly":
        self._require_compatible(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            acc = terms.get(k)
            acc = v if acc is None else acc + v
            if acc:
                terms[k] = acc
            else:
                terms.pop(k, None)
        out = TauPoly(self.group, self.c)
        out.terms = terms
        return out

    def __neg__(self) -> "TauPoly":
        out = TauPoly(self.group, self.c)
        out.terms = {k: -v for k, v in self.terms.items()}
        return out

    def __sub__(self, other: "TauPoly") -> "TauPoly":
        return self + (-other)

    def __mul__(self, other) -> "TauPoly":
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.scaled(other)
        self._require_compatible(other)
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
        res = TauPoly(self.group, self.c)
        res.terms = out
        return res

    __rmul__ = __mul__

    def scaled(self, factor) -> "TauPoly":
        f = factor if isinstance(factor, GaussRat) else GaussRat(factor)
        out = TauPoly(self.group, self.c)
        out.terms = {} if not f else {k: v * f for k, v in self.terms.items()}
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TauPoly):
            return NotImplemented
        return (
            self.group == other.group
            and self.c == other.c
            and self.terms == other.terms
        )

    def sorted_terms(self):
        return sorted(self.terms.items())

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, point):
        """Substitute tau(a) by the trace of the corresponding torus
        element at the point (via the Laurent image of the generator)."""
        cache: dict[LatticeVec, object] = {}

        def value(a: LatticeVec):
            v = cache.get(a)
            if v is None:
                v = tau_image(self.group, a).evaluate(point)
                cache[a] = v
            return v

        total = None
        for key, coeff in self.sorted_terms():
            term = coeff if point.exact else complex(coeff)
            for a in key:
                term = term * value(a)
            total = term if total is None else total + term
        if total is None:
            return point.zero_value()
        return total

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "c": str(self.c),
            "terms": [
                {"coeff": str(v), "factors": [list(a) for a in k]}
                for k, v in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(obj: dict) -> "TauPoly":
        group = GroupSpec.from_json(obj["group"])
        c = Fraction(obj.get("c", "1"))
        terms: dict[tuple, GaussRat] = {}
        for entry in obj.get("terms", []):
            key = tuple(tuple(int(x) for x in a) for a in entry.get("factors", []))
            coeff = GaussRat.parse(entry["coeff"])
            terms[key] = terms.get(key, ZERO) + coeff
        return TauPoly(group, c, terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, coeff in self.sorted_terms():
            mono = "*".join(f"tau({a[0]},{a[1]})" for a in key) if key else "1"
            parts.append(f"({coeff})*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TauPoly[{self.group}, c={self.c}]({self})"


# ---------------------------------------------------------------------------
# brackets
# ---------------------------------------------------------------------------

def bracket_symbols(
    a,
    b,
    group: GroupSpec,
    c: Fraction = Fraction(1),
    extrapolated_gl: bool = False,
) -> TauPoly:
    """Poisson bracket of two trace symbols."""
    c = Fraction(c)
    if c == 0:
        raise DomainError("c must be nonzero")
    p, q = int(a[0]), int(a[1])
    r, s = int(b[0]), int(b[1])
    det = p * s - q * r
    out = TauPoly.zero(group, c)
    if det == 0:
        return out
    plus = (p + r, q + s)
    if group.family == "SL":
        n = group.rank
        scale = GaussRat(Fraction(det) / c)
        return TauPoly(
            group,
            c,
            {
                (plus,): scale,
                ((p, q), (r, s)): -scale * GaussRat(Fraction(1, n)),
            },
        )
    if group.family == "GL":
        if not extrapolated_gl:
            raise DomainError(
                "no GL bracket formula; pass extrapolated_gl=True for the "
                "oracle-validated extrapolation"
            )
        scale = GaussRat(Fraction(det) / c)
        return TauPoly(group, c, {(plus,): scale})
    minus = (p - r, q - s)
    scale = GaussRat(Fraction(det) / (2 * c))
    return TauPoly(group, c, {(plus,): scale, (minus,): -scale})


def bracket_poly(
    f: TauPoly, h: TauPoly, extrapolated_gl: bool = False
) -> TauPoly:
    """Bilinear, Leibniz extension of the symbol bracket."""
    if f.group != h.group or f.c != h.c:
        raise StructureError("mismatched group or c parameter")
    group, c = f.group, f.c
    total = TauPoly.zero(group, c)
    for k1, v1 in f.terms.items():
        for k2, v2 in h.terms.items():
            scale = v1 * v2
            for i1 in range(len(k1)):
                rest1 = k1[:i1] + k1[i1 + 1 :]
                for i2 in range(len(k2)):
                    rest2 = k2[:i2] + k2[i2 + 1 :]
                    br = bracket_symbols(k1[i1], k2[i2], group, c, extrapolated_gl)
                    if not br:
                        continue
                    shifted: dict[tuple, GaussRat] = {}
                    extra = rest1 + rest2
                    for key, v in br.terms.items():
                        nk = tuple(sorted(key + extra))
                        acc = shifted.get(nk, ZERO) + v * scale
                        if acc:
                            shifted[nk] = acc
                        else:
                            shifted.pop(nk, None)
                    piece = TauPoly(group, c)
                    piece.terms = shifted
                    total = total + piece
    return total


def jacobi_defect(
    a, b, c3, group: GroupSpec, c: Fraction = Fraction(1), extrapolated_gl: bool = False
) -> TauPoly:
    """{{a,b},c3} + {{b,c3},a} + {{c3,a},b} as a TauPoly; the Poisson
    structure is valid precisely when this collects to zero."""
    def sym(v):
        return TauPoly.symbol(group, c, v)

    total = TauPoly.zero(group, c)
    for x, y, z in ((a, b, c3), (b, c3, a), (c3, a, b)):
        inner = bracket_symbols(x, y, group, c, extrapolated_gl)
        total = total + bracket_poly(inner, sym(z), extrapolated_gl)
    return total


def symbol_window(group: GroupSpec, cutoff: int) -> list[LatticeVec]:
    """Distinct canonical symbols with |p|, |q| <= cutoff, sorted."""
    seen = set()
    for p in range(-cutoff, cutoff + 1):
        for q in range(-cutoff, cutoff + 1):
            seen.add(_norm_symbol(group, (p, q)))
    return sorted(seen)


def structure_constants(
    group: GroupSpec, c: Fraction, cutoff: int, extrapolated_gl: bool = False
) -> dict:
    """All brackets of distinct symbol pairs in the cutoff window, as a
    JSON-ready table sorted by (a, b); diagonal pairs vanish identically
    and are omitted."""
    if cutoff < 1:
        raise DomainError("cutoff must be >= 1")
    syms = symbol_window(group, cutoff)
    entries = []
    for i, a in enumerate(syms):
        for b in syms[i + 1 :]:
            br = bracket_symbols(a, b, group, c, extrapolated_gl)
            entries.append({"a": list(a), "b": list(b), "bracket": br.to_json()})
    return {
        "group": group.to_json(),
        "c": str(Fraction(c)),
        "cutoff": cutoff,
        "entries": entries,
    }
