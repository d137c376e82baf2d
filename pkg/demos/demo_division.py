"""Dividing harmonic polynomials exactly.

A homogeneous harmonic polynomial Q divides P exactly whenever the zero set
of Q sits inside the zero set of P.  The division below is leading-term
reduction in exact rational arithmetic: either it terminates with a quotient
that multiplies back to P, or it certifies that no quotient exists.
"""

from harmonic_ratios import Polynomial, divide_by_harmonic, harmonic_basis
from harmonic_ratios.division import NotDivisible

x = Polynomial.variable(2, 0)
y = Polynomial.variable(2, 1)

print("P = x^3 y - x y^3, Q = x y")
out = divide_by_harmonic(x**3 * y - x * y**3, x * y)
print("quotient:", out.quotient)
print("multiplies back exactly:", out.residual_verified)
print()

print("P = x^2 + y^2, Q = x y  (zero sets differ, so division must fail)")
try:
    divide_by_harmonic(x * x + y * y, x * y)
except NotDivisible as exc:
    print("refused:", exc)
print()

print("A random round trip through the degree-4 harmonic basis in 3 variables:")
basis = harmonic_basis(3, 4)
q = basis[0] + basis[3].scale(2)
r = Polynomial.variable(3, 2) ** 2 - Polynomial.constant(3, 7)
out = divide_by_harmonic(q * r, q)
print("recovered factor:", out.quotient == r)
