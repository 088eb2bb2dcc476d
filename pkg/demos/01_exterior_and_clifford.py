"""
Exterior algebra and the two Clifford actions
==============================================

Blades are bitmasks, coefficients are exact fractions.
"""

from fractions import Fraction

from twisted_rham.exalg import (Multivector, clifford_form_action, contract, hodge_star,
                                left_clifford, right_clifford, three_h_residual,
                                clifford_identity_residual)

n = 4
e1, e2, e3, e4 = (Multivector.vector(n, i) for i in range(n))

a = e1 ^ e2
b = e3 + Fraction(1, 2) * e4
print("a =", a)
print("a ^ b =", a ^ b)
print("e1 contract (e1 ^ e2) =", contract(0, a))
print("*(e1 ^ e2) =", hodge_star(a))

# left and right Clifford multiplication by e1 on e1: -1 on both sides
print("e1 . e1 =", left_clifford(0, e1))
print("e1 . e1 (right) =", right_clifford(0, e1))

# a 3-form acting by Clifford multiplication
H = Multivector.basis(n, 0, 1, 2) + 2 * Multivector.basis(n, 1, 2, 3)
print("H . 1 =", clifford_form_action(H, Multivector.scalar(n), "left"))

# both identities hold exactly, so the residual matrices are zero
print("3H residual zero:", three_h_residual(H).is_zero())
print("Clifford identity residual zero:", clifford_identity_residual(H).is_zero())
