import json
import random

import pytest

from toruschar.errors import DomainError, UnsupportedInputError
from toruschar.generators import (
    GeneratorPoly,
    decompose,
    expand,
    q_image,
    q_symbol,
    tau_image,
    tau_symbol,
)
from toruschar.groups import GroupSpec
from toruschar.laurent import LaurentPoly, exponents
from toruschar.scalars import GaussRat, I, ONE
from toruschar.verify import random_invariant
from toruschar.weyl import is_invariant, orbit_sum

SL22 = GroupSpec("SL", 2, 2)
SO3 = GroupSpec("SOodd", 1, 1)
SO4 = GroupSpec("SOeven", 2, 2)
SO2 = GroupSpec("SOeven", 1, 1)


def test_tau_image_examples():
    f = tau_image(SL22, (1, 0))
    expected = LaurentPoly(
        SL22,
        {
            exponents([[1, 0], [0, 0]]): ONE,
            exponents([[0, 0], [1, 0]]): ONE,
        },
    )
    assert f == expected
    g = tau_image(SO3, (1,))
    x = LaurentPoly.variable(SO3, 1, 1)
    assert g == x + LaurentPoly.variable(SO3, 1, 1, -1) + LaurentPoly.constant(SO3, 1)
    # alpha = 0 gives the matrix size
    for group, size in [
        (GroupSpec("GL", 3, 1), 3),
        (GroupSpec("Sp", 2, 1), 4),
        (GroupSpec("SOodd", 2, 1), 5),
        (GroupSpec("SOeven", 3, 1), 6),
    ]:
        assert tau_image(group, (0,)) == LaurentPoly.constant(group, size)


def test_tau_image_invariant():
    rng = random.Random(0)
    for fam in ("GL", "SL", "Sp", "SOodd", "SOeven"):
        for n in (1, 2, 3):
            g = GroupSpec(fam, n, 2)
            for _ in range(5):
                alpha = (rng.randint(-3, 3), rng.randint(-3, 3))
                assert is_invariant(tau_image(g, alpha), g)


def test_q_image_rank_one():
    f = q_image(SO2, ((1,),))
    x = LaurentPoly.variable(SO2, 1, 1)
    assert f == (x - LaurentPoly.variable(SO2, 1, 1, -1)).scaled(I)


def test_q_image_invariant_and_alpha_symmetries():
    # Q is invariant (it lies in the image of the invariant ring), is
    # symmetric under permuting its arguments, changes sign when one
    # argument is negated, and vanishes when an argument is zero.
    rng = random.Random(4)
    for n, N in ((2, 2), (3, 1)):
        g = GroupSpec("SOeven", n, N)
        for _ in range(5):
            alphas = [
                tuple(rng.randint(-2, 2) for _ in range(N)) for _ in range(n)
            ]
            f = q_image(g, alphas)
            assert is_invariant(f, g)
            swapped = [alphas[1], alphas[0]] + list(alphas[2:])
            assert q_image(g, swapped) == f
            negated = [tuple(-a for a in alphas[0])] + list(alphas[1:])
            assert q_image(g, negated) == f.scaled(-1)
        zeroed = [(0,) * N] + [
            tuple(rng.randint(-2, 2) for _ in range(N)) for _ in range(n - 1)
        ]
        assert not q_image(g, zeroed)


def test_q_image_explicit_n2():
    # Direct expansion of the closed form for alpha1=(1,0), alpha2=(0,1):
    # i^2 [ (x1^(1,0)-x1^-(1,0))(x2^(0,1)-x2^-(0,1))
    #       + (x2^(1,0)-x2^-(1,0))(x1^(0,1)-x1^-(0,1)) ].
    # The two summands carry the same sign; an alternating sign would break
    # Weyl invariance (see the module docstring in generators.py).
    f = q_image(SO4, ((1, 0), (0, 1)))

    def diff(row_idx, vec):
        rows_pos = [[0, 0], [0, 0]]
        rows_pos[row_idx] = list(vec)
        rows_neg = [[0, 0], [0, 0]]
        rows_neg[row_idx] = [-a for a in vec]
        return LaurentPoly.monomial(SO4, exponents(rows_pos)) - LaurentPoly.monomial(
            SO4, exponents(rows_neg)
        )

    term_id = diff(0, (1, 0)) * diff(1, (0, 1))
    term_swap = diff(1, (1, 0)) * diff(0, (0, 1))
    assert f == (term_id + term_swap).scaled(I * I)


def test_q_symbol_canonicalization():
    sym, sign = q_symbol(SO4, ((0, 1), (1, 0)))
    sym2, sign2 = q_symbol(SO4, ((1, 0), (0, 1)))
    assert sym == sym2 and sign == sign2 == ONE
    sym3, sign3 = q_symbol(SO4, ((-1, 0), (0, 1)))
    assert sym3 == sym and sign3 == -ONE
    sym4, sign4 = q_symbol(SO4, ((0, 0), (0, 1)))
    assert sym4 is None and not sign4


def test_q_image_wrong_family_or_count():
    with pytest.raises(DomainError):
        q_image(GroupSpec("Sp", 2, 1), ((1,), (1,)))
    with pytest.raises(DomainError):
        q_image(SO4, ((1, 0),))


def test_decompose_gl2_example():
    gl2 = GroupSpec("GL", 2, 1)
    f = LaurentPoly.monomial(gl2, exponents([[1], [1]]), GaussRat(2))
    p = decompose(f, gl2)
    t1 = tau_symbol(gl2, (1,))
    t2 = tau_symbol(gl2, (2,))
    assert p.terms == {(t1, t1): ONE, (t2,): -ONE}
    assert expand(p, gl2) == f


def test_decompose_tau_images_are_base_cases():
    rng = random.Random(8)
    for fam in ("GL", "SL", "Sp", "SOodd", "SOeven"):
        for n in (1, 2, 3):
            if fam == "SL" and n == 1:
                continue
            g = GroupSpec(fam, n, 2)
            alpha = (rng.randint(-2, 2), rng.randint(-2, 2))
            f = tau_image(g, alpha)
            p = decompose(f, g)
            assert expand(p, g) == f
            if any(alpha):
                # a single tau symbol with coefficient 1, plus at most an
                # explicit constant (the odd-SO "+1")
                tau_keys = [k for k in p.terms if k != ()]
                assert len(tau_keys) == 1
                (key,) = tau_keys
                assert len(key) == 1 and key[0][0] == "tau"
                assert p.terms[key] == ONE
                # the chosen representative has the same image (e.g. for
                # SL(2) the symbols tau(a) and tau(-a) coincide as functions)
                assert tau_image(g, key[0][1]) == f


def test_decompose_q_image_rank1():
    f = q_image(SO2, ((1,),))
    p = decompose(f, SO2)
    sym, _ = q_symbol(SO2, ((1,),))
    assert p.terms == {(sym,): ONE}


def test_decompose_rejects_non_invariant():
    gl2 = GroupSpec("GL", 2, 1)
    with pytest.raises(DomainError) as err:
        decompose(LaurentPoly.variable(gl2, 1, 1), gl2)
    assert "perm" in str(err.value)


def test_decompose_rejects_half_weights():
    g = GroupSpec("SOeven", 2, 1)
    f = orbit_sum(((1,), (1,)), g)  # doubled entries 1 encode exponent 1/2
    assert f.has_half_weights()
    with pytest.raises(UnsupportedInputError):
        decompose(f, g)


def test_decompose_linear():
    rng = random.Random(12)
    for fam in ("GL", "Sp", "SOeven"):
        g = GroupSpec(fam, 2, 2)
        for _ in range(5):
            f = random_invariant(g, rng)
            h = random_invariant(g, rng)
            lhs = decompose(f + h, g)
            rhs = decompose(f, g) + decompose(h, g)
            assert lhs == rhs


def test_roundtrip_all_families_small():
    rng = random.Random(13)
    for fam in ("GL", "SL", "Sp", "SOodd", "SOeven"):
        for _ in range(8):
            n = rng.randint(2 if fam == "SL" else 1, 3)
            g = GroupSpec(fam, n, rng.randint(1, 2))
            f = random_invariant(g, rng)
            if not f:
                continue
            p = decompose(f, g)
            assert expand(p, g) == f


def test_reduction_constant_convention():
    # The multiplicity constant in the level reduction, with orbit sums
    # taken over all group elements (stabilizers included), is n - l + 1
    # for the symmetric-group pattern and 2(n - l + 1) for the signed one.
    # Witnessed here directly: the product of a level-1 image with the
    # level-(l-1) sum minus that multiple of the level-l sum drops level.
    from toruschar.weyl import level_of_poly, pattern_sum

    gl3 = GroupSpec("GL", 3, 1)
    m_sub = exponents([[1], [0], [0]])
    m_full = exponents([[1], [2], [0]])
    lhs = tau_image(gl3, (2,)) * pattern_sum(m_sub, gl3)
    n_min_l_plus_1 = 2  # n = 3, l = 2
    diff = lhs - pattern_sum(m_full, gl3).scaled(GaussRat(n_min_l_plus_1))
    assert level_of_poly(diff, gl3) < 2

    sp2 = GroupSpec("Sp", 2, 1)
    m_sub = exponents([[1], [0]])
    m_full = exponents([[1], [2]])
    lhs = tau_image(sp2, (2,)) * pattern_sum(m_sub, sp2)
    doubled_const = 2 * (2 - 2 + 1)  # 2(n - l + 1), n = l = 2
    diff = lhs - pattern_sum(m_full, sp2).scaled(GaussRat(doubled_const))
    assert level_of_poly(diff, sp2) < 2


def test_soeven_top_level_uses_q():
    g = GroupSpec("SOeven", 2, 1)
    f = orbit_sum(exponents([[1], [2]]), g)
    p = decompose(f, g)
    assert any(sym[0] == "q" for key in p.terms for sym in key)
    assert expand(p, g) == f


def test_generator_poly_json_round_trip():
    g = SO4
    f = orbit_sum(exponents([[1, 0], [0, 1]]), g)
    p = decompose(f, g)
    blob = json.dumps(p.to_json(), sort_keys=True)
    back = GeneratorPoly.from_json(json.loads(blob), g)
    assert back == p
    assert expand(back, g) == f


def test_expand_examples():
    g = GroupSpec("Sp", 2, 2)
    t = tau_symbol(g, (1, 0))
    s = tau_symbol(g, (0, 1))
    p = GeneratorPoly.symbol(t)
    assert expand(p, g) == tau_image(g, (1, 0))
    p2 = GeneratorPoly({(t, s): ONE})
    assert expand(p2, g) == tau_image(g, (1, 0)) * tau_image(g, (0, 1))
    assert expand(GeneratorPoly.zero(), g) == LaurentPoly.zero(g)
