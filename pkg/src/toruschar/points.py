"""Torus points: places where Laurent polynomials are evaluated.

A point assigns a nonzero value to every coordinate x_ij.  Points come in
two flavours: exact (GaussRat coordinates) and float (complex).  Half-
integer exponents need a square-root branch; exact points must therefore be
constructed from the square roots themselves when half weights will be
evaluated, while float points take the principal branch automatically.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

from .errors import DomainError, StructureError
from .groups import GroupSpec
from .laurent import ExponentMatrix
from .scalars import GaussRat, ONE, ZERO


class TorusPoint:
    """Evaluation point on the N-fold product of the maximal torus.

    ``coords[j][i]`` is the value of x_{i+1, j+1}.  ``sqrts`` (same layout)
    optionally fixes the square-root branch used for half-integer weights;
    when absent, float points use the principal square root and exact
    points refuse odd exponents.
    """

    __slots__ = ("group", "coords", "sqrts", "exact", "_powers")

    def __init__(self, group: GroupSpec, coords, sqrts=None):
        self.group = group
        n, N = group.rank, group.factors
        coords = tuple(tuple(row) for row in coords)
        if len(coords) != N or any(len(row) != n for row in coords):
            raise StructureError(f"expected {N} coordinate vectors of length {n}")
        exact = all(
            isinstance(v, (GaussRat, int, Fraction)) for row in coords for v in row
        )
        if exact:
            coords = tuple(
                tuple(v if isinstance(v, GaussRat) else GaussRat(v) for v in row)
                for row in coords
            )
            if any(not v for row in coords for v in row):
                raise DomainError("torus point has a zero coordinate")
        else:
            coords = tuple(tuple(complex(v) for v in row) for row in coords)
            if any(v == 0 for row in coords for v in row):
                raise DomainError("torus point has a zero coordinate")
        if sqrts is not None:
            if exact:
                sqrts = tuple(
                    tuple(v if isinstance(v, GaussRat) else GaussRat(v) for v in row)
                    for row in sqrts
                )
                ok = all(
                    s * s == x
                    for xr, sr in zip(coords, sqrts)
                    for x, s in zip(xr, sr)
                )
            else:
                sqrts = tuple(tuple(complex(v) for v in row) for row in sqrts)
                ok = all(
                    abs(s * s - x) <= 1e-9 * (1 + abs(x))
                    for xr, sr in zip(coords, sqrts)
                    for x, s in zip(xr, sr)
                )
            if not ok:
                raise DomainError("sqrts are not square roots of coords")
        self.coords = coords
        self.sqrts = sqrts
        self.exact = exact
        self._powers: dict = {}

    @classmethod
    def from_sqrt(cls, group: GroupSpec, sqrts) -> "TorusPoint":
        """Build a point from square-root coordinates (fixes the branch)."""
        sq = tuple(tuple(row) for row in sqrts)
        if all(isinstance(v, (GaussRat, int, Fraction)) for row in sq for v in row):
            sq = tuple(
                tuple(v if isinstance(v, GaussRat) else GaussRat(v) for v in row)
                for row in sq
            )
            coords = tuple(tuple(v * v for v in row) for row in sq)
        else:
            sq = tuple(tuple(complex(v) for v in row) for row in sq)
            coords = tuple(tuple(v * v for v in row) for row in sq)
        return cls(group, coords, sq)

    # -- evaluation -----------------------------------------------------

    def zero_value(self):
        return ZERO if self.exact else 0j

    def _sqrt(self, j: int, i: int):
        if self.sqrts is not None:
            return self.sqrts[j][i]
        if self.exact:
            raise DomainError(
                "half-integer exponent at an exact point without sqrt data"
            )
        return cmath.sqrt(self.coords[j][i])

    def coordinate_power(self, i: int, j: int, doubled: int):
        """x_{ij}^(doubled/2) with 1-based i, j."""
        key = (i, j, doubled)
        cached = self._powers.get(key)
        if cached is not None:
            return cached
        jj, ii = j - 1, i - 1
        if doubled % 2 == 0:
            base = self.coords[jj][ii]
            val = base ** (doubled // 2)
        else:
            val = self._sqrt(jj, ii) ** doubled
        self._powers[key] = val
        return val

    def monomial_value(self, m: ExponentMatrix):
        total = ONE if self.exact else (1 + 0j)
        for i, row in enumerate(m, start=1):
            for j, e in enumerate(row, start=1):
                if e:
                    total = total * self.coordinate_power(i, j, e)
        return total

    # -- structure -------------------------------------------------------

    def column(self, j: int):
        """Eigenvalue parameters of the j-th generator (1-based)."""
        return self.coords[j - 1]

    def sl_consistent(self, tol: float = 1e-9) -> bool:
        """Whether each factor satisfies the SL relation prod_i x_ij = 1."""
        if self.group.family != "SL":
            return True
        for row in self.coords:
            prod = ONE if self.exact else (1 + 0j)
            for v in row:
                prod = prod * v
            if self.exact:
                if prod != ONE:
                    return False
            elif abs(prod - 1) > tol:
                return False
        return True

    def __repr__(self):
        mode = "exact" if self.exact else "float"
        return f"TorusPoint({self.group}, {mode}, {self.coords})"
