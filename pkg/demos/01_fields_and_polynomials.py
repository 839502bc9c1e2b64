"""
Exact fields and sparse polynomials
===================================

Arithmetic over GF(p) and Q, and polynomials under three monomial orders.
"""

from fractions import Fraction

from cohomdim import QQ, field, polynomial_ring
from cohomdim.poly import GREVLEX, LEX, elimination

# GF(7): raw values stay in [0, 7)
F = field(7)
a = F.element(2)
print("2^-1 in GF(7) =", a.inverse())
print("a^2 + a - 1 at a = 2:", a * a + a - 1)

# Q keeps exact fractions
print("1/2 * 2/3 =", QQ.element(Fraction(1, 2)) * QQ.element(Fraction(2, 3)))

# a ring in three variables; generators come back as polynomials
R = polynomial_ring(0, ["x", "y", "z"])
x, y, z = R.gens()
f = y**3 + x * z - Fraction(1, 2) * z**3 + x

# the leading term depends on the order
for name, order in [("grevlex", GREVLEX), ("lex", LEX), ("elim(1)", elimination(1))]:
    m, c = f.leading_term(order)
    print(f"{name:8s} leading exponents {m.exponents}  coefficient {c.value}   f = {f.to_str(order)}")

# Frobenius in characteristic 2
S = polynomial_ring(2, 2)
u, v = S.gens()
print("(u + v)^2 over GF(2) =", (u + v) ** 2)
