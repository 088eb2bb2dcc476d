"""
Lichnerowicz formula and the vanishing constant
===============================================
"""

from fractions import Fraction

from twisted_rham import catalog
from twisted_rham.liealg import h_norm_squared, rho, scalar_curvature
from twisted_rham.lichnerowicz import VERIFIED_S, lichnerowicz_residual, vanishing_verdict

for name in ("su2", "su2_x_su2", "su2_x_u1", "torus_2"):
    L = catalog.get(name)
    value, bound = rho(L)
    print(f"{name:<10} kappa={scalar_curvature(L)}  |H|^2={h_norm_squared(L)}  "
          f"rho={value}  bound={bound}")

L = catalog.get("su2_x_su2")
for s in VERIFIED_S + (Fraction(2, 7),):
    print(f"s = {s}: residual zero = {lichnerowicz_residual(L, s).is_zero()}")

for name in ("su2", "su2_cubed", "torus_3"):
    rep = vanishing_verdict(catalog.get(name))
    print(f"{name:<10} kernel of D^2 = {rep.kernel_dims}  verdict: {rep.verdict}")
