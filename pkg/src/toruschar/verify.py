"""Cross-checking suites tying the symbolic and numeric layers together.

Each suite samples reproducibly from an explicit seed and returns a plain
dict summarizing what was run and the worst deviation observed, so the
command line and the test suite share one implementation.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .errors import InternalCheckError
from .generators import decompose, expand, q_image, tau_image
from .groups import GroupSpec
from .laurent import LaurentPoly, exponents
from .lie import (
    cohomology_dims,
    in_lie_algebra,
    killing_ratio,
    lie_basis,
    numeric_bracket,
    random_group_element,
    random_rational,
    random_torus_point,
    torus_matrix,
    variation,
)
from .linalg import mat_eq, mat_mul, trace
from .points import TorusPoint
from .poisson import TauPoly, bracket_symbols, jacobi_defect, symbol_window
from .scalars import GaussRat, ONE
from .weyl import orbit_sum

KILLING_CASES = (
    [("SL", n, Fraction(2 * n)) for n in (2, 3, 4)]
    + [
        ("SOodd", 1, Fraction(1)),   # SO(3)
        ("SOeven", 2, Fraction(2)),  # SO(4)
        ("SOodd", 2, Fraction(3)),   # SO(5)
        ("SOeven", 3, Fraction(4)),  # SO(6)
        ("SOodd", 3, Fraction(5)),   # SO(7)
    ]
    + [("Sp", n, Fraction(2 * n + 2)) for n in (1, 2, 3)]
)

BRACKET_GROUPS = (
    GroupSpec("SL", 2, 2),
    GroupSpec("SL", 3, 2),
    GroupSpec("Sp", 1, 2),
    GroupSpec("Sp", 2, 2),
    GroupSpec("SOodd", 1, 2),
    GroupSpec("SOodd", 2, 2),
    GroupSpec("SOeven", 2, 2),
)


def killing_table() -> dict:
    rows = []
    ok = True
    for family, rank, expected in KILLING_CASES:
        group = GroupSpec(family, rank, 1)
        got = killing_ratio(group)
        good = got == expected
        ok = ok and good
        rows.append(
            {
                "family": family,
                "rank": rank,
                "matrix_size": group.matrix_size,
                "ratio": got,
                "expected": expected,
                "ok": good,
            }
        )
    return {"rows": rows, "ok": ok}


# ---------------------------------------------------------------------------
# cohomology dimensions
# ---------------------------------------------------------------------------

def cohomology_suite(
    trials: int = 20,
    seed: int = 0,
    max_rank: int = 3,
    factor_choices: tuple[int, ...] = (2, 3),
) -> dict:
    """Exact Z^1/B^1/H^1 dimensions on random generic torus tuples versus
    the counts N*r + d - r, d - r, N*r."""
    rng = random.Random(seed)
    rows = []
    ok = True
    for family in ("GL", "SL", "Sp", "SOodd", "SOeven"):
        min_rank = 2 if family == "SL" else 1
        for rank in range(min_rank, max_rank + 1):
            for n_factors in factor_choices:
                group = GroupSpec(family, rank, n_factors)
                d, r = group.lie_dim, group.lie_rank
                expected = (n_factors * r + d - r, d - r, n_factors * r)
                bad = 0
                for _ in range(trials):
                    pt = random_torus_point(group, rng, exact=True)
                    gens = [
                        torus_matrix(group, pt.column(j))
                        for j in range(1, n_factors + 1)
                    ]
                    dims = cohomology_dims(group, gens)
                    if dims != expected:
                        bad += 1
                good = bad == 0
                ok = ok and good
                rows.append(
                    {
                        "group": str(group),
                        "expected": expected,
                        "trials": trials,
                        "failures": bad,
                        "ok": good,
                    }
                )
    return {"rows": rows, "ok": ok}


# ---------------------------------------------------------------------------
# decomposition round trips
# ---------------------------------------------------------------------------

def random_invariant(group: GroupSpec, rng, max_exp: int = 3, max_summands: int = 4,
                     force_full_level: bool = False) -> LaurentPoly:
    """Random integer-weight W-invariant: a combination of orbit sums with
    random Gaussian-rational coefficients."""
    n, N = group.rank, group.factors
    total = LaurentPoly.zero(group)
    k = rng.randint(1, max_summands)
    for idx in range(k):
        while True:
            rows = [
                [rng.randint(-max_exp, max_exp) for _ in range(N)] for _ in range(n)
            ]
            if force_full_level and idx == 0:
                for row in rows:
                    if not any(row):
                        row[rng.randrange(N)] = rng.choice((-1, 1)) * rng.randint(1, max_exp)
            if any(any(r) for r in rows) or rng.random() < 0.1:
                break
        coeff = GaussRat(
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
            Fraction(rng.randint(-2, 2), 2),
        )
        if not coeff:
            coeff = ONE
        total = total + orbit_sum(exponents(rows), group).scaled(coeff)
    return total


def roundtrip_suite(trials: int = 200, seed: int = 0, max_rank: int = 3) -> dict:
    """expand(decompose(f)) == f on random invariants, all five families."""
    rng = random.Random(seed)
    rows = []
    ok = True
    for family in ("GL", "SL", "Sp", "SOodd", "SOeven"):
        failures = 0
        q_top_cases = 0
        for t in range(trials):
            min_rank = 2 if family == "SL" else 1
            rank = rng.randint(min_rank, max_rank)
            n_factors = rng.randint(1, 2)
            group = GroupSpec(family, rank, n_factors)
            force = family == "SOeven" and t % 2 == 0
            f = random_invariant(group, rng, force_full_level=force)
            if not f:
                continue
            try:
                p = decompose(f, group)
            except InternalCheckError:
                failures += 1
                continue
            if expand(p, group) != f:
                failures += 1
            if any(sym[0] == "q" for key in p.terms for sym in key):
                q_top_cases += 1
        good = failures == 0
        ok = ok and good
        row = {"family": family, "trials": trials, "failures": failures, "ok": good}
        if family == "SOeven":
            row["q_generator_cases"] = q_top_cases
        rows.append(row)
    return {"rows": rows, "ok": ok}


# ---------------------------------------------------------------------------
# bracket oracle agreement
# ---------------------------------------------------------------------------

def bracket_agreement(
    group: GroupSpec,
    trials: int = 100,
    seed: int = 0,
    window: int = 2,
    tol: float = 1e-9,
    c: Fraction = Fraction(1),
    extrapolated_gl: bool = False,
) -> dict:
    """Symbolic bracket versus the symplectic-form oracle at random
    generic float points, every symbol pair in the window."""
    rng = random.Random(seed)
    syms = symbol_window(group, window)
    pairs = [(a, b) for i, a in enumerate(syms) for b in syms[i:]]
    images = {a: tau_image(group, a) for a in syms}
    brackets = {
        (a, b): bracket_symbols(a, b, group, c, extrapolated_gl) for a, b in pairs
    }
    worst = 0.0
    checked = 0
    for _ in range(trials):
        pt = random_torus_point(group, rng, exact=False)
        for (a, b), br in brackets.items():
            num = numeric_bracket(images[a], images[b], pt, c)
            sym = br.evaluate(pt)
            err = abs(sym - num) / (1 + abs(num))
            if err > worst:
                worst = err
            checked += 1
    return {
        "group": str(group),
        "pairs": len(pairs),
        "points": trials,
        "checked": checked,
        "max_rel_err": worst,
        "tol": tol,
        "ok": worst < tol,
    }


def bracket_agreement_all(trials: int = 100, seed: int = 0, tol: float = 1e-9) -> dict:
    rows = [
        bracket_agreement(g, trials=trials, seed=seed + i, tol=tol)
        for i, g in enumerate(BRACKET_GROUPS)
    ]
    return {"rows": rows, "ok": all(r["ok"] for r in rows)}


# ---------------------------------------------------------------------------
# Poisson axioms
# ---------------------------------------------------------------------------

def random_taupoly(group: GroupSpec, c: Fraction, rng, max_terms: int = 3,
                   max_degree: int = 2, span: int = 3) -> TauPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        deg = rng.randint(0, max_degree)
        key = tuple(
            (rng.randint(-span, span), rng.randint(-span, span)) for _ in range(deg)
        )
        coeff = GaussRat(Fraction(rng.randint(-3, 3), rng.randint(1, 2)),
                         Fraction(rng.randint(-1, 1)))
        terms[key] = coeff if coeff else ONE
    return TauPoly(group, c, terms)


def jacobi_suite(
    group: GroupSpec,
    trials: int = 100,
    seed: int = 0,
    span: int = 3,
    points_per_defect: int = 50,
    tol: float = 1e-9,
    c: Fraction = Fraction(1),
) -> dict:
    """Jacobi defect on random symbol triples.

    Records whether every defect vanished identically in the free symbol
    algebra or only numerically at sampled points (the distinction the
    bracket's validity rests on)."""
    rng = random.Random(seed)
    identical = True
    worst = 0.0
    for _ in range(trials):
        a = (rng.randint(-span, span), rng.randint(-span, span))
        b = (rng.randint(-span, span), rng.randint(-span, span))
        c3 = (rng.randint(-span, span), rng.randint(-span, span))
        defect = jacobi_defect(a, b, c3, group, c)
        if not defect:
            continue
        identical = False
        for _ in range(points_per_defect):
            pt = random_torus_point(group, rng, exact=False, generic=False)
            val = abs(defect.evaluate(pt))
            if val > worst:
                worst = val
    return {
        "group": str(group),
        "trials": trials,
        "mode": "identical" if identical else "numeric",
        "max_defect": worst,
        "tol": tol,
        "ok": identical or worst < tol,
    }


def sl2_sp1_suite(trials: int = 100, seed: int = 0, tol: float = 1e-9, span: int = 3) -> dict:
    """The SL(2) and Sp(1) bracket formulas agree under evaluation: the
    trace identity tau_a tau_b = tau_{a+b} + tau_{a-b} in disguise."""
    rng = random.Random(seed)
    sl2 = GroupSpec("SL", 2, 2)
    sp1 = GroupSpec("Sp", 1, 2)
    worst = 0.0
    for _ in range(trials):
        s = complex(GaussRat(random_rational(rng)))
        t = complex(GaussRat(random_rational(rng)))
        pt_sl = TorusPoint(sl2, [[s, 1 / s], [t, 1 / t]])
        pt_sp = TorusPoint(sp1, [[s], [t]])
        a = (rng.randint(-span, span), rng.randint(-span, span))
        b = (rng.randint(-span, span), rng.randint(-span, span))
        v1 = bracket_symbols(a, b, sl2).evaluate(pt_sl)
        v2 = bracket_symbols(a, b, sp1).evaluate(pt_sp)
        err = abs(v1 - v2) / (1 + abs(v2))
        if err > worst:
            worst = err
    return {"trials": trials, "max_rel_err": worst, "tol": tol, "ok": worst < tol}


# ---------------------------------------------------------------------------
# Q generator versus torus block matrices
# ---------------------------------------------------------------------------

def q_block_suite(trials: int = 50, seed: int = 0, tol: float = 1e-9, span: int = 2) -> dict:
    """q_image versus direct evaluation on torus block matrices.

    For each argument vector alpha_k the actual SO(4) block matrix of the
    torus element with parameters x_i^{alpha_k} is built; the differences
    x - 1/x are read back off the matrix entries and combined by the
    alternating product, independent of the polynomial expansion."""
    rng = random.Random(seed)
    group = GroupSpec("SOeven", 2, 2)
    n = group.rank
    worst = 0.0
    for _ in range(trials):
        alphas = [
            (rng.randint(-span, span), rng.randint(-span, span)) for _ in range(n)
        ]
        pt = random_torus_point(group, rng, exact=False, generic=False)
        # eigenvalue parameters of rho(alpha_k): z_{k,i} = prod_j x_ij^{alpha_kj}
        diffs = []
        for alpha in alphas:
            z = []
            for i in range(1, n + 1):
                acc = 1 + 0j
                for j in range(1, group.factors + 1):
                    acc *= pt.coordinate_power(i, j, 2 * alpha[j - 1])
                z.append(acc)
            mat = torus_matrix(group, z)
            # block j has entry (2j, 2j+1) = i (z_j - z_j^{-1}) / 2
            diffs.append([-2j * mat[2 * i, 2 * i + 1] for i in range(n)])
        direct = 0j
        for perm in itertools.permutations(range(n)):
            prod = 1 + 0j
            for i in range(n):
                prod *= diffs[i][perm[i]]
            direct += prod
        direct *= 1j ** n
        symbolic = q_image(group, alphas).evaluate(pt)
        err = float(abs(direct - symbolic) / (1 + abs(direct)))
        if err > worst:
            worst = err
    return {"trials": trials, "max_rel_err": worst, "tol": tol, "ok": bool(worst < tol)}


# ---------------------------------------------------------------------------
# variation contracts
# ---------------------------------------------------------------------------

def variation_suite(group: GroupSpec, trials: int = 100, seed: int = 0) -> dict:
    """Membership, trace duality against the whole basis, and commutation
    for the variation function, exactly, on torus elements and random
    conjugates."""
    rng = random.Random(seed)
    basis = lie_basis(group)
    n = group.matrix_size
    failures = 0
    for t in range(trials):
        c = Fraction(rng.randint(1, 4), rng.randint(1, 3))
        a = random_group_element(group, rng, conjugate=(t % 2 == 1))
        f = variation(group, a, c)
        ok = in_lie_algebra(group, f)
        inv_c = GaussRat(1 / c)
        for v in basis:
            lhs = trace(mat_mul(f, v))
            rhs = trace(mat_mul(a, v)) * inv_c
            if lhs != rhs:
                ok = False
                break
        if not mat_eq(mat_mul(a, f), mat_mul(f, a)):
            ok = False
        if not ok:
            failures += 1
    return {
        "group": str(group),
        "trials": trials,
        "failures": failures,
        "ok": failures == 0,
    }
