"""Walkthrough: the Poisson algebra of trace symbols on two commuting
generators.

Run as:  python demos/02_goldman_brackets.py
"""

from fractions import Fraction

from toruschar import (
    GroupSpec,
    TauPoly,
    TorusPoint,
    GaussRat,
    bracket_poly,
    bracket_symbols,
    jacobi_defect,
    structure_constants,
)

c = Fraction(1)

# The bracket of two trace symbols is determined by the lattice
# determinant and a family-specific combination of symbols.
print("== symbol brackets ==")
sl2 = GroupSpec("SL", 2, 2)
sl3 = GroupSpec("SL", 3, 2)
sp1 = GroupSpec("Sp", 1, 2)
so5 = GroupSpec("SOodd", 2, 2)

print("SL(2): {tau(1,0), tau(0,1)} =", bracket_symbols((1, 0), (0, 1), sl2, c))
print("SL(3): {tau(1,0), tau(0,1)} =", bracket_symbols((1, 0), (0, 1), sl3, c))
print("Sp(1): {tau(1,0), tau(0,1)} =", bracket_symbols((1, 0), (0, 1), sp1, c))
print("SO(5): {tau(2,0), tau(0,1)} =", bracket_symbols((2, 0), (0, 1), so5, c))
print("parallel vectors commute:", bracket_symbols((2, 2), (1, 1), sl2, c))

# Products follow the Leibniz rule; constants are central.
print()
print("== Leibniz extension ==")
t10 = TauPoly.symbol(sl2, c, (1, 0))
t01 = TauPoly.symbol(sl2, c, (0, 1))
t11 = TauPoly.symbol(sl2, c, (1, 1))
print("{tau(1,0) tau(0,1), tau(1,1)} =", bracket_poly(t10 * t01, t11))

# The Jacobi identity holds identically in the free symbol algebra:
# the defect polynomial collects to zero before any evaluation.
print()
print("== Jacobi ==")
for g in (sl3, sp1, so5):
    d = jacobi_defect((1, 0), (0, 1), (1, 1), g, c)
    print(f"{g.family}: defect {{(1,0),(0,1),(1,1)}} =", d)

# SL(2) and Sp(1) are the same group; the two different-looking bracket
# formulas agree once evaluated on traces.
print()
print("== SL(2) = Sp(1) ==")
s, t = GaussRat(2), GaussRat(3)
pt_sl = TorusPoint(sl2, [[s, 1 / s], [t, 1 / t]])
pt_sp = TorusPoint(sp1, [[s], [t]])
v_sl = bracket_symbols((1, 0), (0, 1), sl2, c).evaluate(pt_sl)
v_sp = bracket_symbols((1, 0), (0, 1), sp1, c).evaluate(pt_sp)
print("SL(2) value:", v_sl, "| Sp(1) value:", v_sp, "| equal:", v_sl == v_sp)

# A structure-constant table over a lattice window, ready for export.
print()
print("== structure constants ==")
table = structure_constants(sp1, c, 1)
print(f"Sp(1), cutoff 1: {len(table['entries'])} distinct pairs;")
for e in table["entries"][:3]:
    print(f"  {{tau{tuple(e['a'])}, tau{tuple(e['b'])}}} ->",
          TauPoly.from_json(e["bracket"]))
