"""Icosahedral graphs: the icosahedron, the dodecahedron and buckminsterfullerene.

Non-bipartite planar graphs are counted with a Pfaffian of a signed adjacency
matrix, using an orientation with an odd number of clockwise edges around
every face.
"""
from perdet.embedded import edge_graph
from perdet.kasteleyn import count_matchings, flat_orientation, signed_adjacency_matrix, weighted_matching_sum
from perdet.laurent import Q, evaluate, format_poly
from perdet.linalg import pfaffian
from perdet.polyhedra import dodecahedron, icosahedron, truncated_icosahedron
from perdet.transforms import power_of_two_count

print("icosahedron matchings:", count_matchings(icosahedron()))

d = dodecahedron()
print("dodecahedron Pfaffian:", pfaffian(signed_adjacency_matrix(d, flat_orientation(d))))

# the edge graph of a cubic graph always has 0 or 2^k matchings
print("dodecahedron edge graph:", count_matchings(edge_graph(d)), "=", power_of_two_count(d), "from GF(2) rank")

# C60 with pentagon edges weighted q; the 30 edges between pentagons form
# the matching that counts as 1
c60 = truncated_icosahedron(pentagon_weight=Q)
poly = weighted_matching_sum(c60, reference=frozenset(range(60, 90)))
print("C60 by number of pentagon edges used:")
print(" ", format_poly(poly))
print("  total:", evaluate(poly, 1))
