"""
Groebner bases, dimension and intersections
===========================================

Buchberger's algorithm drives every ideal question in the package:
membership, Krull dimension, m-primarity and intersections.
"""

from cohomdim import Ideal, buchberger, polynomial_ring
from cohomdim.ideals import ideal_intersection, is_m_primary, krull_dimension
from cohomdim.poly import GREVLEX, LEX

R = polynomial_ring(0, 3)
X1, X2, X3 = R.gens()

# a reduced basis is unique for a given order
G = buchberger([X1 - X2, X2 - X3], LEX)
print("lex basis of (X1 - X2, X2 - X3):", G)
print("X1 - X3 in the ideal?", X1 - X3 in G)

# the twisted-cubic style pair
T = polynomial_ring(0, ["x", "y", "z"])
x, y, z = T.gens()
print("grevlex basis:", buchberger([x * z - y**2, x**3 - z**2], GREVLEX))

# dimension from the leading-term ideal
planes = Ideal(R, [X1])
line = Ideal(R, [X1, X2])
print("dim R/(X1) =", krull_dimension(planes), "  dim R/(X1,X2) =", krull_dimension(line))
print("(X1,X2,X3) m-primary?", is_m_primary(Ideal(R, [X1, X2, X3])))
print("(X1^2,X2^2,X3^2) m-primary?", is_m_primary(Ideal(R, [X1**2, X2**2, X3**2])))

# intersection by eliminating an auxiliary variable
J = ideal_intersection(Ideal(R, [X1, X2]), Ideal(R, [X1, X3]))
print("(X1,X2) ∩ (X1,X3) =", J.basis())
