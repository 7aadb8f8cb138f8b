"""Plane partitions in a box, counted three ways.

A plane partition in an a x b x c box is a stack of unit cubes pushed into a
corner.  Seen from far away along the diagonal it is a lozenge tiling of a
hexagon, and a lozenge tiling is a perfect matching of the honeycomb graph
inside.  This script counts them by a determinant, by a product formula and
by listing every tiling, then weights each cube by q.

    python demos/plane_partitions.py
"""
from perdet.kasteleyn import cokernel_of, count_matchings
from perdet.laurent import Q, format_poly
from perdet.linalg import nontrivial_factors
from perdet.oracle import count_matchings_brute
from perdet.partitions import (CubeWeightScheme, all_plane_partitions, hexagon_graph, macmahon,
                               matching_to_plane_partition, plane_partition_heights, q_macmahon,
                               scheme_weighted_sum)

h = hexagon_graph(2, 2, 2)
print(f"Z(2,2,2): {h.graph.vertex_count} vertices, {h.graph.edge_count} edges, "
      f"{len(h.face_position)} inner hexagons")

print("determinant :", count_matchings(h.graph))
print("MacMahon    :", macmahon(2, 2, 2))
print("enumeration :", count_matchings_brute(h.graph))

# every matching is a stack of cubes; print a few as height maps
for p in all_plane_partitions((2, 2, 2))[:4]:
    print(plane_partition_heights(p, (2, 2, 2)))

# the reference matching is the empty box
print("reference matching is the empty partition:", matching_to_plane_partition(h, h.reference) == frozenset())

# curvature q in each inner hexagon turns the determinant into a generating function
uniform = CubeWeightScheme.uniform(Q)
print("sum q^|cubes| =", format_poly(scheme_weighted_sum(h, uniform)))
print("q-MacMahon    =", format_poly(q_macmahon(2, 2, 2)))

# q = -1 gives a square
for dims in [(2, 2, 2), (2, 2, 4), (4, 4, 2)]:
    half = tuple(d // 2 for d in dims)
    value = scheme_weighted_sum(hexagon_graph(*dims), CubeWeightScheme.minus_one())
    print(f"N{dims} at q=-1: {value}   N{half}^2 = {macmahon(*half) ** 2}")

print("cokernel of the Kasteleyn matrix:", nontrivial_factors(cokernel_of(h.graph)))
