"""Matrix models of the classical groups and the numeric oracle.

Everything the symbolic layers claim is independently checkable here:
explicit Lie-algebra bases, torus matrices (diagonal for GL/SL/Sp, the
2x2 rotation-like blocks over C for SO), Killing/trace form ratios,
variation functions, twisted Z^N cohomology dimensions, and the Poisson
bracket obtained from the two-form B(v1,w2) - B(v2,w1) on pairs of Cartan
vectors in eigenvalue coordinates.

Exact mode (GaussRat matrices and points) is authoritative; float mode
(numpy) exists for Monte-Carlo style verification at scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, InternalCheckError, StructureError
from .groups import GroupSpec
from .laurent import LaurentPoly
from .linalg import (
    Mat,
    cayley,
    exact_rank,
    float_rank,
    identity,
    mat_det,
    mat_eq,
    mat_inv,
    mat_mul,
    mat_scale,
    mat_sub,
    to_numpy,
    trace,
    transpose,
    zeros,
)
from .points import TorusPoint
from .scalars import GaussRat, I, ONE, ZERO

HALF = GaussRat(Fraction(1, 2))
HALF_I = GaussRat(0, Fraction(1, 2))


# ---------------------------------------------------------------------------
# Lie algebra bases
# ---------------------------------------------------------------------------

def _unit(m: int, r: int, c: int, v=ONE) -> list[list[GaussRat]]:
    out = [[ZERO] * m for _ in range(m)]
    out[r][c] = v if isinstance(v, GaussRat) else GaussRat(v)
    return out


def _freeze(rows: list[list[GaussRat]]) -> Mat:
    return tuple(tuple(r) for r in rows)


@lru_cache(maxsize=None)
def lie_basis(group: GroupSpec) -> tuple[Mat, ...]:
    """Basis of the Lie algebra in the defining matrix representation.

    GL: all units E_ij.  SL: off-diagonal units and E_ii - E_{i+1,i+1}.
    Sp: block matrices [[A, B], [C, -A^T]] with B, C symmetric.  SO: the
    antisymmetric units E_ab - E_ba.
    """
    n = group.rank
    m = group.matrix_size
    basis: list[Mat] = []
    if group.family == "GL":
        for i in range(n):
            for j in range(n):
                basis.append(_freeze(_unit(m, i, j)))
    elif group.family == "SL":
        for i in range(n):
            for j in range(n):
                if i != j:
                    basis.append(_freeze(_unit(m, i, j)))
        for i in range(n - 1):
            rows = _unit(m, i, i)
            rows[i + 1][i + 1] = -ONE
            basis.append(_freeze(rows))
    elif group.family == "Sp":
        for i in range(n):
            for j in range(n):
                rows = _unit(m, i, j)
                rows[n + j][n + i] = -ONE
                basis.append(_freeze(rows))
        for i in range(n):
            for j in range(i, n):
                rows = _unit(m, i, n + j)
                if i != j:
                    rows[j][n + i] = ONE
                basis.append(_freeze(rows))
        for i in range(n):
            for j in range(i, n):
                rows = _unit(m, n + i, j)
                if i != j:
                    rows[n + j][i] = ONE
                basis.append(_freeze(rows))
    else:  # SO(m)
        for a in range(m):
            for b in range(a + 1, m):
                rows = _unit(m, a, b)
                rows[b][a] = -ONE
                basis.append(_freeze(rows))
    if len(basis) != group.lie_dim:
        raise InternalCheckError("basis size does not match the dimension formula")
    return tuple(basis)


def basis_coords(group: GroupSpec, entry: Callable[[int, int], GaussRat]) -> list[GaussRat]:
    """Coordinates of a Lie-algebra element in lie_basis order, read off
    entrywise (closed form per family, no linear solve needed)."""
    n = group.rank
    coords: list[GaussRat] = []
    if group.family == "GL":
        for i in range(n):
            for j in range(n):
                coords.append(entry(i, j))
    elif group.family == "SL":
        for i in range(n):
            for j in range(n):
                if i != j:
                    coords.append(entry(i, j))
        acc = ZERO
        for i in range(n - 1):
            acc = acc + entry(i, i)
            coords.append(acc)
    elif group.family == "Sp":
        for i in range(n):
            for j in range(n):
                coords.append(entry(i, j))
        for i in range(n):
            for j in range(i, n):
                coords.append(entry(i, n + j))
        for i in range(n):
            for j in range(i, n):
                coords.append(entry(n + i, j))
    else:
        m = group.matrix_size
        for a in range(m):
            for b in range(a + 1, m):
                coords.append(entry(a, b))
    return coords


def symplectic_form(n: int) -> Mat:
    rows = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        rows[i][n + i] = ONE
        rows[n + i][i] = -ONE
    return _freeze(rows)


def in_lie_algebra(group: GroupSpec, x: Mat) -> bool:
    """Exact defining-condition check for the family."""
    if group.family == "GL":
        return True
    if group.family == "SL":
        return trace(x) == ZERO
    if group.family == "Sp":
        j = symplectic_form(group.rank)
        return mat_eq(mat_mul(transpose(x), j), mat_scale(mat_mul(j, x), -1))
    return mat_eq(transpose(x), mat_scale(x, -1))


def in_group(group: GroupSpec, a: Mat) -> bool:
    """Exact membership check for the matrix model of the family."""
    m = group.matrix_size
    if group.family == "GL":
        return mat_det(a) != ZERO
    if group.family == "SL":
        return mat_det(a) == ONE
    if group.family == "Sp":
        j = symplectic_form(group.rank)
        return mat_eq(mat_mul(transpose(a), mat_mul(j, a)), j)
    return mat_eq(mat_mul(transpose(a), a), identity(m)) and mat_det(a) == ONE


# ---------------------------------------------------------------------------
# torus matrices
# ---------------------------------------------------------------------------

def torus_matrix(group: GroupSpec, eigvals: Sequence):
    """Torus element with the given eigenvalue parameters.

    Exact GaussRat parameters produce an exact matrix; complex ones a
    numpy array.  GL/SL: diag(x_1..x_n) with the SL product-one condition
    enforced.  Sp: diag(x, x^{-1}).  SO: per-parameter 2x2 blocks
    [[(x+1/x)/2, i(x-1/x)/2], [-i(x-1/x)/2, (x+1/x)/2]], odd SO appending
    a fixed eigenvalue 1.
    """
    n = group.rank
    if len(eigvals) != n:
        raise DomainError(f"expected {n} eigenvalue parameters")
    exact = all(isinstance(v, (GaussRat, int, Fraction)) for v in eigvals)
    if exact:
        vals = [v if isinstance(v, GaussRat) else GaussRat(v) for v in eigvals]
        if any(not v for v in vals):
            raise DomainError("eigenvalue parameters must be nonzero")
        if group.family == "SL":
            prod = ONE
            for v in vals:
                prod = prod * v
            if prod != ONE:
                raise DomainError("SL eigenvalues must multiply to 1")
        return _torus_matrix_exact(group, vals)
    vals = [complex(v) for v in eigvals]
    if any(v == 0 for v in vals):
        raise DomainError("eigenvalue parameters must be nonzero")
    if group.family == "SL" and abs(np.prod(vals) - 1) > 1e-9:
        raise DomainError("SL eigenvalues must multiply to 1")
    return _torus_matrix_float(group, vals)


def _torus_matrix_exact(group: GroupSpec, vals: list[GaussRat]) -> Mat:
    n = group.rank
    m = group.matrix_size
    rows = [[ZERO] * m for _ in range(m)]
    if group.family in ("GL", "SL"):
        for i, v in enumerate(vals):
            rows[i][i] = v
    elif group.family == "Sp":
        for i, v in enumerate(vals):
            rows[i][i] = v
            rows[n + i][n + i] = ONE / v
    else:
        for j, v in enumerate(vals):
            w = ONE / v
            c = (v + w) * HALF
            s = (v - w) * HALF_I
            rows[2 * j][2 * j] = c
            rows[2 * j][2 * j + 1] = s
            rows[2 * j + 1][2 * j] = -s
            rows[2 * j + 1][2 * j + 1] = c
        if group.family == "SOodd":
            rows[m - 1][m - 1] = ONE
    return _freeze(rows)


def _torus_matrix_float(group: GroupSpec, vals: list[complex]) -> np.ndarray:
    n = group.rank
    m = group.matrix_size
    out = np.zeros((m, m), dtype=complex)
    if group.family in ("GL", "SL"):
        for i, v in enumerate(vals):
            out[i, i] = v
    elif group.family == "Sp":
        for i, v in enumerate(vals):
            out[i, i] = v
            out[n + i, n + i] = 1 / v
    else:
        for j, v in enumerate(vals):
            c = (v + 1 / v) / 2
            s = 1j * (v - 1 / v) / 2
            out[2 * j, 2 * j] = c
            out[2 * j, 2 * j + 1] = s
            out[2 * j + 1, 2 * j] = -s
            out[2 * j + 1, 2 * j + 1] = c
        if group.family == "SOodd":
            out[m - 1, m - 1] = 1.0
    return out


# ---------------------------------------------------------------------------
# Killing / trace ratio
# ---------------------------------------------------------------------------

def _sparse_of(mat: Mat) -> dict[tuple[int, int], GaussRat]:
    return {
        (r, c): v for r, row in enumerate(mat) for c, v in enumerate(row) if v
    }


def _sparse_bracket(a: dict, b: dict) -> dict:
    out: dict[tuple[int, int], GaussRat] = {}

    def mul_into(x: dict, y: dict, sign: int):
        for (r, c), v in x.items():
            for (r2, c2), w in y.items():
                if c == r2:
                    key = (r, c2)
                    acc = out.get(key, ZERO) + (v * w if sign > 0 else -(v * w))
                    if acc:
                        out[key] = acc
                    else:
                        out.pop(key, None)

    mul_into(a, b, 1)
    mul_into(b, a, -1)
    return out


@lru_cache(maxsize=None)
def killing_ratio(group: GroupSpec) -> Fraction:
    """Ratio kappa / trace-form, computed from the adjoint representation
    and verified entrywise to be a single scalar."""
    if group.family == "GL":
        raise DomainError("GL is not semisimple; the Killing form degenerates")
    if group.family == "SL" and group.rank < 2:
        raise DomainError("SL(1) is trivial")
    if group.family == "SOeven" and group.rank < 2:
        raise DomainError("SO(2) is abelian; the Killing form vanishes")
    basis = lie_basis(group)
    d = len(basis)
    sparse = [_sparse_of(b) for b in basis]

    ad: list[dict[tuple[int, int], GaussRat]] = []
    for a in range(d):
        entries: dict[tuple[int, int], GaussRat] = {}
        for b in range(d):
            br = _sparse_bracket(sparse[a], sparse[b])
            if not br:
                continue
            coords = basis_coords(group, lambda r, c: br.get((r, c), ZERO))
            for cidx, v in enumerate(coords):
                if v:
                    entries[(cidx, b)] = v
        ad.append(entries)

    ratio: GaussRat | None = None
    pairs = []
    for a in range(d):
        for b in range(a, d):
            kappa = ZERO
            for (l, k), v in ad[a].items():
                w = ad[b].get((k, l))
                if w is not None:
                    kappa = kappa + v * w
            tr = ZERO
            for (r, c), v in sparse[a].items():
                w = sparse[b].get((c, r))
                if w is not None:
                    tr = tr + v * w
            pairs.append((kappa, tr))
            if ratio is None and tr:
                ratio = kappa / tr
    if ratio is None:
        raise InternalCheckError("trace form vanished identically")
    for kappa, tr in pairs:
        if kappa != ratio * tr:
            raise InternalCheckError("Killing form is not proportional to the trace form")
    if not ratio.is_rational():
        raise InternalCheckError("Killing ratio is not rational")
    return ratio.as_fraction()


# ---------------------------------------------------------------------------
# variation function
# ---------------------------------------------------------------------------

def variation(group: GroupSpec, a, c: Fraction = Fraction(1)):
    """Variation function for the bilinear form c * trace form.

    SL: (A - tr(A)/n * I)/c.  SO/Sp: (A - A^{-1})/(2c).  GL: A/c (the
    trace-form orthogonal projection onto gl is the identity).
    """
    if c == 0:
        raise DomainError("c must be nonzero")
    if isinstance(a, np.ndarray):
        n = a.shape[0]
        if group.family == "SL":
            return (a - np.trace(a) / n * np.eye(n)) / float(c)
        if group.family == "GL":
            return a / float(c)
        return (a - np.linalg.inv(a)) / (2 * float(c))
    m = len(a)
    inv_c = GaussRat(Fraction(1, 1) / c)
    if group.family == "SL":
        t = trace(a) * GaussRat(Fraction(1, m))
        return mat_scale(mat_sub(a, mat_scale(identity(m), t)), inv_c)
    if group.family == "GL":
        return mat_scale(a, inv_c)
    return mat_scale(mat_sub(a, mat_inv(a)), inv_c * HALF)


# ---------------------------------------------------------------------------
# adjoint action and cohomology
# ---------------------------------------------------------------------------

def ad_operator(group: GroupSpec, a) -> Mat | np.ndarray:
    """Matrix of X -> A X A^{-1} in lie_basis coordinates."""
    basis = lie_basis(group)
    d = len(basis)
    if isinstance(a, np.ndarray):
        ainv = np.linalg.inv(a)
        pinv, np_basis = _flat_basis_pinv(group)
        cols = [pinv @ (a @ mat @ ainv).reshape(-1) for mat in np_basis]
        return np.column_stack(cols)
    ainv = mat_inv(a)
    cols = []
    for x in basis:
        y = mat_mul(a, mat_mul(x, ainv))
        cols.append(basis_coords(group, lambda r, c: y[r][c]))
    rows = [[cols[b][r] for b in range(d)] for r in range(d)]
    return _freeze(rows)


@lru_cache(maxsize=None)
def _flat_basis_pinv(group: GroupSpec):
    np_basis = [to_numpy(mat) for mat in lie_basis(group)]
    flat = np.column_stack([m.reshape(-1) for m in np_basis])
    return np.linalg.pinv(flat), np_basis


def cocycle_space_dims(action_mats: Sequence, tol: float = 1e-10) -> tuple[int, int, int]:
    """(dim Z^1, dim B^1, dim H^1) for the Z^N module defined by commuting
    operators on a finite-dimensional space.

    A cocycle is determined by its values u_1..u_N on the generators,
    constrained pairwise by (A_j - 1) u_i = (A_i - 1) u_j; coboundaries are
    the tuples ((A_i - 1) v)_i.
    """
    mats = list(action_mats)
    if not mats:
        raise DomainError("need at least one generator")
    exact = not isinstance(mats[0], np.ndarray)
    n_gen = len(mats)
    d = len(mats[0]) if exact else mats[0].shape[0]

    if exact:
        diffs = [mat_sub(m, identity(d)) for m in mats]
        brows = []
        for dm in diffs:
            for r in range(d):
                brows.append({c: dm[r][c] for c in range(d) if dm[r][c]})
        b_rank = exact_rank(brows)
        zrows = []
        for i, j in itertools.combinations(range(n_gen), 2):
            # (A_j - 1) u_i - (A_i - 1) u_j = 0; u_k sits in columns k*d..
            for r in range(d):
                row: dict[int, GaussRat] = {}
                for c in range(d):
                    v = diffs[j][r][c]
                    if v:
                        row[i * d + c] = v
                    w = diffs[i][r][c]
                    if w:
                        key = j * d + c
                        acc = row.get(key, ZERO) - w
                        if acc:
                            row[key] = acc
                        else:
                            row.pop(key, None)
                if row:
                    zrows.append(row)
        z_rank = exact_rank(zrows)
    else:
        eye = np.eye(d)
        diffs = [np.asarray(m, dtype=complex) - eye for m in mats]
        b_rank = float_rank(np.vstack(diffs), tol)
        blocks = []
        for i, j in itertools.combinations(range(n_gen), 2):
            row = [np.zeros((d, d), dtype=complex) for _ in range(n_gen)]
            row[i] = diffs[j]
            row[j] = -diffs[i]
            blocks.append(np.hstack(row))
        z_rank = float_rank(np.vstack(blocks), tol) if blocks else 0
    dim_z1 = n_gen * d - z_rank
    dim_b1 = b_rank
    return dim_z1, dim_b1, dim_z1 - dim_b1


def cohomology_dims(
    group: GroupSpec, generators: Sequence, tol: float = 1e-10
) -> tuple[int, int, int]:
    """Twisted cohomology dimensions of Z^N acting on the Lie algebra
    through Ad of the given commuting group elements."""
    gens = list(generators)
    if not gens:
        raise DomainError("need at least one generator")
    exact = not isinstance(gens[0], np.ndarray)
    for a, b in itertools.combinations(gens, 2):
        if exact:
            if not mat_eq(mat_mul(a, b), mat_mul(b, a)):
                raise DomainError("generators do not commute")
        else:
            if np.max(np.abs(a @ b - b @ a)) > tol:
                raise DomainError("generators do not commute")
    ads = [ad_operator(group, a) for a in gens]
    return cocycle_space_dims(ads, tol)


# ---------------------------------------------------------------------------
# Cartan metric and the symplectic oracle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CartanMetric:
    """Restriction of c * trace-form to the Cartan in eigenvalue
    coordinates: a single diagonal multiplier, plus the traceless
    projection for SL."""

    group: GroupSpec
    c: Fraction
    multiplier: Fraction

    def project(self, vec: list):
        if self.group.family != "SL":
            return list(vec)
        n = len(vec)
        if isinstance(vec[0], GaussRat):
            mean = ZERO
            for v in vec:
                mean = mean + v
            mean = mean * GaussRat(Fraction(1, n))
        else:
            mean = sum(vec) / n
        return [v - mean for v in vec]

    def pair(self, u: list, v: list):
        pu, pv = self.project(u), self.project(v)
        if isinstance(pu[0], GaussRat):
            acc = ZERO
            for x, y in zip(pu, pv):
                acc = acc + x * y
            return acc * GaussRat(self.c * self.multiplier)
        return sum(x * y for x, y in zip(pu, pv)) * float(self.c * self.multiplier)

    def dual_pair(self, xi: list, eta: list):
        """Inverse form on functionals given by coordinate vectors."""
        pu, pv = self.project(xi), self.project(eta)
        if isinstance(pu[0], GaussRat):
            acc = ZERO
            for x, y in zip(pu, pv):
                acc = acc + x * y
            return acc * GaussRat(Fraction(1, 1) / (self.c * self.multiplier))
        return sum(x * y for x, y in zip(pu, pv)) / float(self.c * self.multiplier)


def cartan_tangent(group: GroupSpec, u: Sequence) -> Mat:
    """Lie-algebra element generating the torus direction with coordinate
    vector u (exact)."""
    n = group.rank
    vals = [v if isinstance(v, GaussRat) else GaussRat(v) for v in u]
    m = group.matrix_size
    rows = [[ZERO] * m for _ in range(m)]
    if group.family in ("GL", "SL"):
        for i, v in enumerate(vals):
            rows[i][i] = v
    elif group.family == "Sp":
        for i, v in enumerate(vals):
            rows[i][i] = v
            rows[n + i][n + i] = -v
    else:
        for j, v in enumerate(vals):
            rows[2 * j][2 * j + 1] = v * I
            rows[2 * j + 1][2 * j] = -(v * I)
    return _freeze(rows)


@lru_cache(maxsize=None)
def cartan_metric(group: GroupSpec, c: Fraction = Fraction(1)) -> CartanMetric:
    """Derive the diagonal multiplier by evaluating the trace form on the
    explicit Cartan tangent matrices (never assumed)."""
    if c == 0:
        raise DomainError("c must be nonzero")
    n = group.rank
    basis_vecs = [
        [ONE if k == i else ZERO for k in range(n)] for i in range(n)
    ]
    tangents = [cartan_tangent(group, v) for v in basis_vecs]
    mult: GaussRat | None = None
    for i in range(n):
        for j in range(i, n):
            val = trace(mat_mul(tangents[i], tangents[j]))
            if i == j:
                if mult is None:
                    mult = val
                elif val != mult:
                    raise InternalCheckError("Cartan metric is not a single multiple")
            elif val:
                raise InternalCheckError("Cartan metric is not diagonal")
    if mult is None or not mult or not mult.is_rational():
        raise InternalCheckError("degenerate Cartan metric")
    return CartanMetric(group, Fraction(c), mult.as_fraction())


def omega_prime(group: GroupSpec, c: Fraction, pair1, pair2):
    """The two-form B(v1, w2) - B(v2, w1) on pairs of Cartan vectors."""
    v1, w1 = pair1
    v2, w2 = pair2
    metric = cartan_metric(group, Fraction(c))
    return metric.pair(list(v1), list(w2)) - metric.pair(list(v2), list(w1))


def log_gradient(f: LaurentPoly, point: TorusPoint, j: int) -> list:
    """Vector of x_ij d f / d x_ij evaluated at the point (1-based j)."""
    return [
        f.partial(i, j).evaluate(point) for i in range(1, f.group.rank + 1)
    ]


def numeric_bracket(
    f: LaurentPoly, h: LaurentPoly, point: TorusPoint, c: Fraction = Fraction(1)
):
    """Poisson bracket of two invariant functions computed from the
    symplectic pairing in eigenvalue coordinates.

    The bracket is B^{-1}(d_1 f, d_2 h) - B^{-1}(d_2 f, d_1 h), where d_j
    is the logarithmic gradient along the j-th torus factor (projected to
    the traceless part for SL).  The orientation is pinned once against
    the SL(2) bracket formula at the reference point (2, 3) and is part of
    the test suite.
    """
    group = f.group
    if group != h.group or group != point.group:
        raise StructureError("mismatched groups")
    if group.factors != 2:
        raise DomainError("the symplectic oracle needs exactly two factors")
    metric = cartan_metric(group, Fraction(c))
    gf1, gf2 = log_gradient(f, point, 1), log_gradient(f, point, 2)
    gh1, gh2 = log_gradient(h, point, 1), log_gradient(h, point, 2)
    return metric.dual_pair(gf1, gh2) - metric.dual_pair(gf2, gh1)


# ---------------------------------------------------------------------------
# roots and random sampling
# ---------------------------------------------------------------------------

def positive_roots(group: GroupSpec) -> list[tuple[int, ...]]:
    """Positive roots as integer exponent vectors on eigenvalue
    coordinates; the root value at a torus point is prod_i x_i^{r_i}."""
    n = group.rank
    roots: list[tuple[int, ...]] = []

    def vec(pairs) -> tuple[int, ...]:
        out = [0] * n
        for idx, val in pairs:
            out[idx] += val
        return tuple(out)

    for i in range(n):
        for k in range(i + 1, n):
            roots.append(vec([(i, 1), (k, -1)]))
    if group.family in ("Sp", "SOodd", "SOeven"):
        for i in range(n):
            for k in range(i + 1, n):
                roots.append(vec([(i, 1), (k, 1)]))
    if group.family == "Sp":
        for i in range(n):
            roots.append(vec([(i, 2)]))
    if group.family == "SOodd":
        for i in range(n):
            roots.append(vec([(i, 1)]))
    return roots


def root_value(root: tuple[int, ...], coords: Sequence):
    acc = ONE if isinstance(coords[0], GaussRat) else (1 + 0j)
    for x, e in zip(coords, root):
        if e:
            acc = acc * x ** e
    return acc


def is_generic_tuple(group: GroupSpec, columns: Sequence[Sequence], tol: float = 1e-9) -> bool:
    """Each root must be nontrivial on at least one generator column."""
    for root in positive_roots(group):
        ok = False
        for col in columns:
            v = root_value(root, col)
            if isinstance(v, GaussRat):
                if v != ONE:
                    ok = True
                    break
            elif abs(v - 1) > tol:
                ok = True
                break
        if not ok:
            return False
    return True


def random_rational(rng, lo: int = -5, hi: int = 5) -> Fraction:
    """Nonzero random rational in [lo, hi] with small denominator."""
    while True:
        den = rng.randint(1, 3)
        num = rng.randint(lo * den, hi * den)
        if num:
            return Fraction(num, den)


def random_eigenvalues(group: GroupSpec, rng, exact: bool = True) -> list:
    n = group.rank
    vals = [GaussRat(random_rational(rng)) for _ in range(n)]
    if group.family == "SL":
        prod = ONE
        for v in vals[:-1]:
            prod = prod * v
        vals[-1] = ONE / prod
    if exact:
        return vals
    return [complex(v) for v in vals]


def random_torus_point(
    group: GroupSpec, rng, exact: bool = True, generic: bool = True, max_tries: int = 500
) -> TorusPoint:
    """Random torus point; with generic=True, resampled until every root
    is nontrivial on some factor."""
    for _ in range(max_tries):
        cols = [random_eigenvalues(group, rng, exact) for _ in range(group.factors)]
        if not generic or is_generic_tuple(group, cols):
            return TorusPoint(group, cols)
    raise InternalCheckError("failed to sample a generic torus point")


def random_conjugator(group: GroupSpec, rng, max_tries: int = 100) -> Mat:
    """Random exact element of the group, away from the torus: shear
    products for GL/SL, Cayley transforms of random algebra elements for
    Sp/SO."""
    m = group.matrix_size
    if group.family in ("GL", "SL"):
        out = identity(m)
        for _ in range(3):
            i = rng.randrange(m)
            j = rng.randrange(m)
            if i == j:
                continue
            shear = [list(row) for row in identity(m)]
            shear[i][j] = GaussRat(Fraction(rng.randint(-2, 2), rng.randint(1, 2)))
            out = mat_mul(out, _freeze(shear))
        return out
    basis = lie_basis(group)
    for _ in range(max_tries):
        s = zeros(m)
        for _ in range(3):
            x = basis[rng.randrange(len(basis))]
            lam = GaussRat(Fraction(rng.randint(-1, 1), rng.randint(2, 3)))
            s = mat_add_scaled(s, x, lam)
        try:
            cand = cayley(s)
        except DomainError:
            continue
        if in_group(group, cand):
            return cand
    raise InternalCheckError("failed to sample a conjugator")


def mat_add_scaled(a: Mat, b: Mat, lam: GaussRat) -> Mat:
    return tuple(
        tuple(x + lam * y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def random_group_element(group: GroupSpec, rng, conjugate: bool = True) -> Mat:
    """Random exact group element: a torus matrix, optionally conjugated
    off the torus."""
    t = torus_matrix(group, random_eigenvalues(group, rng, exact=True))
    if not conjugate:
        return t
    g = random_conjugator(group, rng)
    return mat_mul(g, mat_mul(t, mat_inv(g)))
