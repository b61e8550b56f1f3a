"""Small exact matrix toolkit over GaussRat, plus rank computations.

Matrices are tuples of tuples of GaussRat (dense, immutable).  Sizes stay
tiny (at most a few dozen rows), so plain Gauss-Jordan elimination with
exact arithmetic is entirely adequate.  Sparse exact rank is provided for
the cohomology constraint systems, and a float rank via numpy singular
values for the float verification path.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import DomainError
from .scalars import GaussRat, ONE, ZERO

Mat = tuple[tuple[GaussRat, ...], ...]


def mat_from(rows: Iterable[Iterable]) -> Mat:
    return tuple(
        tuple(v if isinstance(v, GaussRat) else GaussRat(v) for v in row)
        for row in rows
    )


def identity(n: int) -> Mat:
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
    )


def zeros(n: int, m: int | None = None) -> Mat:
    m = n if m is None else m
    return tuple((ZERO,) * m for _ in range(n))


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = tuple(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = ZERO
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_scale(a: Mat, c) -> Mat:
    c = c if isinstance(c, GaussRat) else GaussRat(c)
    return tuple(tuple(x * c for x in row) for row in a)


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def trace(a: Mat) -> GaussRat:
    acc = ZERO
    for i, row in enumerate(a):
        acc = acc + row[i]
    return acc


def mat_inv(a: Mat) -> Mat:
    """Gauss-Jordan inverse; raises DomainError on singular input."""
    n = len(a)
    work = [list(row) + list(identity(n)[i]) for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            raise DomainError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = ONE / work[col][col]
        work[col] = [v * inv for v in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [v - factor * w for v, w in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def mat_det(a: Mat) -> GaussRat:
    n = len(a)
    work = [list(row) for row in a]
    det = ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det = det * work[col][col]
        inv = ONE / work[col][col]
        for r in range(col + 1, n):
            if work[r][col]:
                factor = work[r][col] * inv
                work[r] = [v - factor * w for v, w in zip(work[r], work[col])]
    return det


def mat_eq(a: Mat, b: Mat) -> bool:
    return all(x == y for r, s in zip(a, b) for x, y in zip(r, s))


def to_numpy(a: Mat) -> np.ndarray:
    return np.array([[complex(v) for v in row] for row in a], dtype=complex)


# ---------------------------------------------------------------------------
# ranks
# ---------------------------------------------------------------------------

def exact_rank(rows: Iterable[dict[int, GaussRat]]) -> int:
    """Rank of a matrix given as sparse rows (column -> coefficient)."""
    pivots: dict[int, dict[int, GaussRat]] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = ONE / row[c]
                pivots[c] = {k: v * inv for k, v in row.items()}
                break
            factor = row.pop(c)
            for k, v in piv.items():
                if k == c:
                    continue
                acc = row.get(k, ZERO) - factor * v
                if acc:
                    row[k] = acc
                else:
                    row.pop(k, None)
    return len(pivots)


def float_rank(matrix: np.ndarray, tol: float = 1e-10) -> int:
    if matrix.size == 0:
        return 0
    svals = np.linalg.svd(matrix, compute_uv=False)
    if svals.size == 0:
        return 0
    cutoff = tol * max(1.0, float(svals[0]))
    return int(np.sum(svals > cutoff))


def cayley(s: Mat) -> Mat:
    """(I - S)(I + S)^{-1}; maps skew/Hamiltonian matrices into the
    corresponding classical group when I + S is invertible."""
    n = len(s)
    return mat_mul(mat_sub(identity(n), s), mat_inv(mat_add(identity(n), s)))
