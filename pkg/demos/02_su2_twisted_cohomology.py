"""
Twisted cohomology of su(2)
===========================

The Cartan 3-form kills the cohomology of d + H.
"""

from twisted_rham import catalog
from twisted_rham.exalg import Multivector
from twisted_rham.liealg import cartan_three_form
from twisted_rham.twisted import (apply, ce_differential, dirac_from_clifford, dirac_operator,
                                  harmonic_dimensions, ordinary_betti, twisted_betti,
                                  twisted_differential)

L = catalog.su2()
H = cartan_three_form(L)
print("H =", H)

d = ce_differential(L)
for i in range(3):
    print(f"d e{i + 1} =", apply(d, Multivector.vector(3, i)))

print("ordinary betti:", ordinary_betti(L))

td = twisted_differential(L).twisted_d
print("(d + H)^2 = 0:", (td @ td).is_zero())
print("twisted betti (even, odd):", twisted_betti(L))
print("harmonic (even, odd):", harmonic_dimensions(L))

# same operator two ways
print("Clifford formula matches d + H + adjoint:", dirac_from_clifford(L) == dirac_operator(L))

# the torus is the opposite extreme
T = catalog.abelian(3)
print("torus_3 twisted betti:", twisted_betti(T))
