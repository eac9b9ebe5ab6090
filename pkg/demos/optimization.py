"""Univariate and quadratic optimization over signed tropical numbers."""

from fractions import Fraction

from troposign import Neg, Pos, minimize_poly, poly_roots, solve_quadratic
from troposign.lift import lift_quadratic_value, sval_extract
from troposign.opt import eval_poly

f = (Pos(0), Pos(4), Pos(4))  # 4x² ⊕ 4x ⊕ 0, lowest degree first
print("roots:", poly_roots(f))
res = minimize_poly(f)
print("infimum:", res.value, "|", res.attainment, "from the", res.side)
for m in (Fraction(-1, 2), Fraction(-1, 8), Fraction(-1, 64)):
    print(f"  f(⊖{m}) = {eval_poly(f, Neg(m))}")

a = ((Pos(0), Neg(-1)), (Neg(-1), Pos(0)))
for theta in (0, Fraction(1, 2), 2):
    b = (Pos(0), Pos(theta))
    sol = solve_quadratic(a, b)
    lifted = sval_extract(lift_quadratic_value(a, b))
    print(f"theta={theta}: value {sol.value}, xbar {sol.xbar}, x* {sol.xstar}; "
          f"lifted exponent {lifted.exponent} (raw {lifted.raw:.3f})")
