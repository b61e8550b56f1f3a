"""Walkthrough: Weyl-invariant Laurent polynomials and their decomposition
into trace generators.

Run as:  python demos/01_invariants_and_trace_generators.py
"""

import random

from toruschar import (
    GroupSpec,
    LaurentPoly,
    decompose,
    expand,
    exponents,
    is_invariant,
    level_of_poly,
    orbit_sum,
    q_image,
    tau_image,
)

# The coordinate ring lives on N copies of the maximal torus; monomials are
# n x N exponent matrices.  Take Sp(2) with two commuting generators.
g = GroupSpec("Sp", 2, 2)
m = exponents([[1, 0], [0, 1]])

print("== Weyl orbit sums ==")
f = orbit_sum(m, g)
print(f"orbit sum of x1^(1,0) x2^(0,1) under W(C2)  ({len(f)} monomials)")
print("invariant:", is_invariant(f, g), "| level:", level_of_poly(f, g))

# Trace generators: tau(alpha) is the trace of the torus element attached
# to the lattice vector alpha.
print()
print("== trace generator images ==")
print("tau(1,0) =", tau_image(g, (1, 0)))
print("tau(0,0) =", tau_image(g, (0, 0)), "(the matrix size)")

# Any invariant of integer weight is a polynomial in the tau's; decompose
# finds it by peeling orbit sums level by level.
print()
print("== decomposition ==")
p = decompose(f, g)
print("decompose(orbit sum) =", p)
print("expand(decompose(f)) == f:", expand(p, g) == f)

# Mixing several orbits with rational coefficients works the same way.
rng = random.Random(1)
h = f.scaled(3) + orbit_sum(exponents([[2, 0], [0, 0]]), g).scaled(-1)
ph = decompose(h, g)
print("a mixed invariant decomposes into", len(ph.terms), "generator terms;",
      "round trip:", expand(ph, g) == h)

# Even special orthogonal groups need a second family of generators at top
# level: the Q's, whose torus image is an antisymmetrized product.
print()
print("== even SO and the Q generators ==")
so4 = GroupSpec("SOeven", 2, 1)
top = orbit_sum(exponents([[1], [2]]), so4)
ptop = decompose(top, so4)
print("SO(4) level-2 orbit decomposes as:", ptop)
print("Q image for alphas (1),(2):", q_image(so4, ((1,), (2,))))
print("round trip:", expand(ptop, so4) == top)

# SL works modulo the product-one relation; note how the ring collapses.
print()
print("== SL and its relations ==")
sl2 = GroupSpec("SL", 2, 1)
x1 = LaurentPoly.variable(sl2, 1, 1)
x2 = LaurentPoly.variable(sl2, 2, 1)
prod = x1 * x2
print("x1 * x2 in SL(2):", prod, "(the relation x1 x2 = 1 at work)")
f_sl = (x1 + x2) ** 2 - (x1 * x1 + x2 * x2)
print("(x1+x2)^2 - (x1^2+x2^2) =", f_sl)
print("decompose:", decompose(f_sl, sl2))
