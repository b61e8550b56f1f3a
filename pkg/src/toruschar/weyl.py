"""Weyl groups of the classical families as signed permutation groups.

Elements are pairs (permutation, sign vector).  An element w sends the
monomial with exponent rows r_1..r_n to the monomial whose row w(i) is
signs[i] * r_i: variables are permuted by their first index and exponents
are negated where the sign is -1.  Membership: GL/SL take the plain
symmetric group, Sp and odd SO the full signed group, even SO the subgroup
with an even number of sign changes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import DomainError, ResourceLimitError
from .groups import GroupSpec
from .laurent import ExponentMatrix, LaurentPoly
from .scalars import ONE

WEYL_CAP = 10 ** 6


@dataclass(frozen=True)
class SignedPerm:
    perm: tuple[int, ...]   # 0-based images: position i maps to perm[i]
    signs: tuple[int, ...]  # sign applied to row i as it moves

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.signs) != n:
            raise DomainError("invalid signed permutation")
        if any(s not in (1, -1) for s in self.signs):
            raise DomainError("signs must be +-1")

    @staticmethod
    def identity(n: int) -> "SignedPerm":
        return SignedPerm(tuple(range(n)), (1,) * n)

    def __matmul__(self, other: "SignedPerm") -> "SignedPerm":
        """Composition: (self @ other) acts as other first, then self."""
        perm = tuple(self.perm[other.perm[i]] for i in range(len(self.perm)))
        signs = tuple(
            self.signs[other.perm[i]] * other.signs[i] for i in range(len(self.perm))
        )
        return SignedPerm(perm, signs)

    def inverse(self) -> "SignedPerm":
        n = len(self.perm)
        perm = [0] * n
        signs = [1] * n
        for i in range(n):
            perm[self.perm[i]] = i
            signs[self.perm[i]] = self.signs[i]
        return SignedPerm(tuple(perm), tuple(signs))

    def sign_change_count(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    def valid_for(self, group: GroupSpec) -> bool:
        if len(self.perm) != group.rank:
            return False
        if group.family in ("GL", "SL"):
            return all(s == 1 for s in self.signs)
        if group.family == "SOeven":
            return self.sign_change_count() % 2 == 0
        return True

    def describe(self) -> str:
        one_based = [p + 1 for p in self.perm]
        flips = [i + 1 for i, s in enumerate(self.signs) if s < 0]
        txt = f"perm {one_based}"
        if flips:
            txt += f", sign flips at {flips}"
        return txt


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _iter_signed(n: int, even_only: bool) -> Iterator[SignedPerm]:
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            if even_only and sum(1 for s in signs if s < 0) % 2:
                continue
            yield SignedPerm(perm, signs)


def weyl_elements(group: GroupSpec, cap: int = WEYL_CAP) -> Iterator[SignedPerm]:
    """All Weyl group elements, each exactly once."""
    if group.weyl_order > cap:
        raise ResourceLimitError(
            f"|W| = {group.weyl_order} exceeds enumeration cap {cap}"
        )
    n = group.rank
    if group.family in ("GL", "SL"):
        for perm in itertools.permutations(range(n)):
            yield SignedPerm(perm, (1,) * n)
    elif group.family in ("Sp", "SOodd"):
        yield from _iter_signed(n, even_only=False)
    else:
        yield from _iter_signed(n, even_only=True)


def pattern_elements(group: GroupSpec, cap: int = WEYL_CAP) -> Iterator[SignedPerm]:
    """The ambient pattern group used by the level reduction: the symmetric
    group for GL/SL and the full signed group for the other families
    (including even SO, whose Weyl sums at level < n are half of these)."""
    n = group.rank
    if group.family in ("GL", "SL"):
        yield from weyl_elements(group, cap)
        return
    if (2 ** n) * _factorial(n) > cap:
        raise ResourceLimitError("pattern group exceeds enumeration cap")
    yield from _iter_signed(n, even_only=False)


def pattern_order(group: GroupSpec) -> int:
    n = group.rank
    if group.family in ("GL", "SL"):
        return _factorial(n)
    return _factorial(n) << n


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def weyl_generators(group: GroupSpec) -> list[SignedPerm]:
    """A generating set: adjacent transpositions plus one sign generator
    (a single flip for Sp/SOodd, a flip pair for SOeven)."""
    n = group.rank
    gens = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append(SignedPerm(tuple(perm), (1,) * n))
    if group.family in ("Sp", "SOodd"):
        signs = [1] * n
        signs[n - 1] = -1
        gens.append(SignedPerm(tuple(range(n)), tuple(signs)))
    elif group.family == "SOeven" and n >= 2:
        signs = [1] * n
        signs[n - 1] = signs[n - 2] = -1
        gens.append(SignedPerm(tuple(range(n)), tuple(signs)))
    return gens


# ---------------------------------------------------------------------------
# action
# ---------------------------------------------------------------------------

def act_monomial(w: SignedPerm, m: ExponentMatrix) -> ExponentMatrix:
    n = len(m)
    rows: list = [None] * n
    for i in range(n):
        row = m[i]
        rows[w.perm[i]] = row if w.signs[i] == 1 else tuple(-e for e in row)
    return tuple(rows)


def act(w: SignedPerm, f: LaurentPoly) -> LaurentPoly:
    if not w.valid_for(f.group):
        raise DomainError(f"element invalid for {f.group}: {w.describe()}")
    return LaurentPoly(f.group, {act_monomial(w, m): c for m, c in f.terms.items()})


def orbit_sum(m: ExponentMatrix, group: GroupSpec, cap: int = WEYL_CAP) -> LaurentPoly:
    """Sum of w . m over every Weyl element, multiplicities included, so
    the coefficient of each orbit monomial equals the stabilizer order."""
    terms: dict[ExponentMatrix, object] = {}
    acc = LaurentPoly(group, {m: ONE})  # validates + canonicalizes the key
    (key,) = acc.terms
    for w in weyl_elements(group, cap):
        k = act_monomial(w, key)
        terms[k] = terms.get(k, 0) + 1
    return LaurentPoly(group, {k: ONE * v for k, v in terms.items()})


def pattern_sum(m: ExponentMatrix, group: GroupSpec, cap: int = WEYL_CAP) -> LaurentPoly:
    """Sum of w . m over the ambient pattern group (see pattern_elements)."""
    terms: dict[ExponentMatrix, object] = {}
    acc = LaurentPoly(group, {m: ONE})
    (key,) = acc.terms
    for w in pattern_elements(group, cap):
        k = act_monomial(w, key)
        terms[k] = terms.get(k, 0) + 1
    return LaurentPoly(group, {k: ONE * v for k, v in terms.items()})


def invariance_violation(f: LaurentPoly, group: GroupSpec) -> Optional[SignedPerm]:
    """A Weyl generator moving f, or None if f is invariant.

    Checking generators suffices because the action is a group action.
    """
    if f.group != group:
        raise DomainError("polynomial belongs to a different group")
    for w in weyl_generators(group):
        if act(w, f) != f:
            return w
    return None


def is_invariant(f: LaurentPoly, group: GroupSpec) -> bool:
    return invariance_violation(f, group) is None


# ---------------------------------------------------------------------------
# levels
# ---------------------------------------------------------------------------

def level_of_monomial(m: ExponentMatrix, group: GroupSpec) -> int:
    """Minimal number of nonvanishing exponent rows over all presentations.

    Presentations are unique except for SL, where adding one vector to all
    rows does not change the monomial; there the level is n minus the top
    multiplicity among row values.
    """
    if group.family == "SL":
        counts: dict[tuple[int, ...], int] = {}
        for row in m:
            counts[row] = counts.get(row, 0) + 1
        return group.rank - max(counts.values())
    return sum(1 for row in m if any(row))


def level_of_poly(f: LaurentPoly, group: GroupSpec) -> int:
    if not f:
        raise DomainError("the zero polynomial has no level")
    return max(level_of_monomial(m, group) for m in f.terms)
