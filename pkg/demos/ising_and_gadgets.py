"""Two reductions to matchings: the planar Ising model and crossing removal.

Ising: each spin configuration of a triangulated sphere corresponds to two
matchings of the edge graph of its subdivided dual, so the partition function
is a single Pfaffian.

Butterfly: a crossing between two edges of a drawn bipartite graph can be
replaced by a small planar gadget without changing the determinant of the
biadjacency matrix, up to sign.
"""
from fractions import Fraction

from perdet.laurent import Q, Laurent, format_poly
from perdet.oracle import ising_brute
from perdet.polyhedra import cube, octahedron
from perdet.transforms import (Drawing, bipartite_det, butterfly_planarize, drawing_det, find_crossings,
                               ising_partition_function, ising_reduce, triangulate)

g = octahedron()
agree, disagree = [Q] * g.edge_count, [Laurent({-1: 1})] * g.edge_count
red = ising_reduce(g, agree, disagree)
print(f"octahedron: {g.vertex_count} spins, matching graph with {red.graph.vertex_count} vertices")
print("  Pfaffian  :", format_poly(ising_partition_function(g, agree, disagree)))
print("  state sum :", format_poly(ising_brute(g, agree, disagree)))

# non-triangulated faces get diagonals whose weights do not depend on the spins
tri, a, b = triangulate(cube())
print("cube, triangulated:", tri.edge_count, "edges; Z at unit weights =", ising_partition_function(tri, a, b))

# K3,3 drawn with its two colour classes on parallel lines, so many edges cross
weights = [[2, 1, 1], [1, 3, 1], [1, 1, 4]]
pts = [(0, 0), (Fraction(101, 100), Fraction(1, 7)), (2, Fraction(1, 3)),
       (0, 2), (Fraction(99, 100), Fraction(21, 10)), (Fraction(203, 100), Fraction(19, 10))]
d = Drawing.build(pts, [(u, w, weights[u][w - 3]) for u in range(3) for w in range(3, 6)], "BBBWWW")
print("K3,3 crossings:", len(find_crossings(d)), " det:", drawing_det(d))
planar = butterfly_planarize(d)
print(f"after butterflies: {planar.vertex_count} vertices, planar, det {bipartite_det(planar)}")
