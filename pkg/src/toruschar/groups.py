"""Descriptors for the classical group families.

A ``GroupSpec`` pins down a classical group G together with the number N of
commuting generators under consideration: ``family`` in {GL, SL, Sp, SOodd,
SOeven}, ``rank`` the torus rank n, ``factors`` the number N of Z-factors.
All derived quantities (matrix size, Lie-algebra dimension, Weyl order) live
here so the rest of the library never hard-codes them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import StructureError

FAMILIES = ("GL", "SL", "Sp", "SOodd", "SOeven")

_CLI_NAMES = {
    "gl": "GL",
    "sl": "SL",
    "sp": "Sp",
    "so-odd": "SOodd",
    "so-even": "SOeven",
}


@dataclass(frozen=True, order=True)
class GroupSpec:
    family: str
    rank: int
    factors: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise StructureError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise StructureError("rank must be >= 1")
        if self.factors < 1:
            raise StructureError("factors must be >= 1")

    # -- derived quantities -------------------------------------------

    @property
    def matrix_size(self) -> int:
        n = self.rank
        if self.family in ("GL", "SL"):
            return n
        if self.family == "Sp":
            return 2 * n
        if self.family == "SOodd":
            return 2 * n + 1
        return 2 * n  # SOeven

    @property
    def lie_dim(self) -> int:
        n = self.rank
        if self.family == "GL":
            return n * n
        if self.family == "SL":
            return n * n - 1
        if self.family == "Sp":
            return n * (2 * n + 1)
        m = self.matrix_size
        return m * (m - 1) // 2  # SO(m)

    @property
    def lie_rank(self) -> int:
        """Dimension of the maximal torus (n - 1 for SL, n otherwise)."""
        return self.rank - 1 if self.family == "SL" else self.rank

    @property
    def weyl_order(self) -> int:
        n = self.rank
        if self.family in ("GL", "SL"):
            return math.factorial(n)
        if self.family in ("Sp", "SOodd"):
            return math.factorial(n) << n
        return math.factorial(n) << (n - 1)  # SOeven

    @property
    def signed(self) -> bool:
        """Whether the Weyl group contains sign changes."""
        return self.family not in ("GL", "SL")

    @property
    def symmetric_traces(self) -> bool:
        """Whether trace symbols satisfy tau(-a) = tau(a) (eigenvalues come
        in inverse pairs)."""
        return self.family in ("Sp", "SOodd", "SOeven")

    @property
    def allows_half_weights(self) -> bool:
        return self.family == "SOeven"

    # -- (de)serialization helpers --------------------------------------

    def to_json(self) -> dict:
        return {"family": self.family, "rank": self.rank, "factors": self.factors}

    @staticmethod
    def from_json(obj: dict) -> "GroupSpec":
        return GroupSpec(obj["family"], int(obj["rank"]), int(obj["factors"]))

    @staticmethod
    def from_cli(family: str, rank: int, factors: int = 1) -> "GroupSpec":
        key = family.lower()
        if key not in _CLI_NAMES:
            raise StructureError(
                f"unknown family {family!r}; expected one of {sorted(_CLI_NAMES)}"
            )
        return GroupSpec(_CLI_NAMES[key], rank, factors)

    def __str__(self) -> str:
        return f"{self.family}(rank={self.rank}, N={self.factors})"
