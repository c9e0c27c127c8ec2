"""Free graded-commutative algebras over Q.

Even generators commute, odd ones anticommute and square to zero.  Every
coefficient is an exact Fraction.
"""

from fractions import Fraction

from branecalc import Generator, basis_of_degree, format_element
from branecalc.algebra import make_algebra

A = make_algebra([Generator("x", 4), Generator("sx", 3), Generator("s1x", 3), Generator("s2x", 2)])
x, sx, s1x, s2x = (A.gen(n) for n in A.names)

# odd generators anticommute
print("sx*s1x  =", format_element(sx * s1x))
print("s1x*sx  =", format_element(s1x * sx))
print("sx^2    =", format_element(sx * sx))

# rational arithmetic stays exact
a = Fraction(1, 3) * x + s2x ** 2
print("a^2     =", format_element(a * a))

# monomial bases, degree by degree
for n in range(9):
    basis = basis_of_degree(A, n)
    print(f"dim A^{n} = {len(basis)}")
