"""Walk through the two pairings everything else is built on.

The bilinear map apply_diff(f, g) treats f as a constant-coefficient
differential operator and applies it to g.  Its constant term, the apolar
pairing, is a positive-definite inner product on real polynomials whose
monomial self-pairings are products of factorials.
"""

from canoninv import Polynomial, apolar_inner, apply_diff, differential, oneform_inner
from canoninv.scalars import QQ

x = Polynomial.variable(0, 2, QQ)
y = Polynomial.variable(1, 2, QQ)

print("f = x^2, g = x^4")
print("  f(d)g =", apply_diff(x**2, x**4), "        (12 x^2: differentiate twice)")
print("  <f, f> =", apolar_inner(x**2, x**2), "              (2! = 2)")
print("  <xy, xy> =", apolar_inner(x * y, x * y), "            (1! * 1! = 1)")
print("  <x^2, xy> =", apolar_inner(x**2, x * y), "            (distinct monomials)")
print()

q = x**2 + y**2
print("q = x^2 + y^2")
d = differential(q)
print("  dq =", d)
print("  (dq, dq) =", oneform_inner(d, d), "          (= deg q * <q, q> = 2 * 4)")
print()

# The polynomial-valued map is asymmetric; its constant term is symmetric.
print("asymmetry of the polynomial-valued map:")
print("  x(d)(x^2 y) =", apply_diff(x, x**2 * y), "   but   (x^2 y)(d)(x) =", apply_diff(x**2 * y, x))
f = 3 * x**2 * y - y**3
g = x**2 * y + x**3
print("symmetry of the inner product on an equal-degree pair:")
print("  <f, g> =", apolar_inner(f, g), " = <g, f> =", apolar_inner(g, f))
