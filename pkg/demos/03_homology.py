"""
Reduced homology over different coefficient fields
==================================================

Stock complexes, their Betti numbers, and the six-vertex projective
plane whose first homology sees characteristic 2 only.
"""

from cohomdim.complexes import full_simplex, rp2_six_vertex, sphere_boundary
from cohomdim.homology import boundary_matrix, matrix_rank, reduced_betti, relative_betti_pair

for n in (3, 4, 5):
    prof = reduced_betti(sphere_boundary(n), 0)
    print(f"boundary of the {n - 1}-simplex:", prof.reduced)

print("full 4-simplex:", reduced_betti(full_simplex(4), 0).reduced)

rp2 = rp2_six_vertex()
print("simplex counts of RP^2:", rp2.counts()[:3])
for k in (0, 2, 3, 7):
    print(f"  char {k}: reduced Betti {reduced_betti(rp2, k, [0, 1, 2]).reduced}")

# where the difference comes from: the rank of the top boundary map
d2 = boundary_matrix(rp2, 2)
print("rank of the 15 x 10 boundary map: over Q", matrix_rank(d2, 0), " over GF(2)", matrix_rank(d2, 2))

# relative homology of (full simplex, complex) is reduced homology shifted by one
print("H_2(S, RP^2) over GF(2) =", relative_betti_pair(rp2, 2, 2))
