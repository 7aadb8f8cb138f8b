"""Symmetric objects and their quotients.

The cube graph has 9 matchings, which is 3 squared: the antipodal map pairs
its vertices, the quotient is K4 drawn on the projective plane, and a
Pfaffian of the quotient counts 3.  The Rubik's cube surface works the same
way.  Symmetric plane partitions come from quotients of the hexagon graph.
"""
from perdet.embedded import quotient_by_free_automorphism, validate
from perdet.kasteleyn import antipodal_square_check, count_matchings
from perdet.oracle import invariant_matchings
from perdet.partitions import (CubeWeightScheme, box_symmetry, cyclic_quotient, hexagon_graph, penrose_graph,
                               scheme_weighted_sum, tcpp_graph, triangle_permutation)
from perdet.polyhedra import antipodal_map, cube, cube_points, rubik, rubik_points

print("cube:", antipodal_square_check(cube(), antipodal_map(cube_points())))
quotient = quotient_by_free_automorphism(cube(), antipodal_map(cube_points()), 2)
print("  quotient lives on the", validate(quotient))
print("rubik surface:", antipodal_square_check(rubik(), antipodal_map(rubik_points())))

h = hexagon_graph(2, 2, 2)
cq = cyclic_quotient(h)
print("cyclically symmetric partitions in 2x2x2:", count_matchings(cq.graph))

# transpose-complement partitions of a 4x2x2 box, from a half-size graph
print("transpose-complement in 4x2x2:", count_matchings(tcpp_graph(2, 2)))
h42 = hexagon_graph(4, 2, 2)
tc = triangle_permutation(h42, box_symmetry("transpose_complement", h42.dims))
print("  checked by listing:", invariant_matchings(h42.graph, [tc]))

# a weighting where the central column counts -1 squares the self-complementary count
sc = invariant_matchings(h.graph, [triangle_permutation(h, box_symmetry("complement", h.dims))])
print("strangeN(-1,1) on 2x2x2:", scheme_weighted_sum(h, CubeWeightScheme.strange_n(-1, 1)), " SC count^2:", sc ** 2)
print("3x3x3 with the centre diagonal at -1:",
      scheme_weighted_sum(hexagon_graph(3, 3, 3), CubeWeightScheme.strange_n(1, -1)),
      " 2 * Penrose^2:", 2 * count_matchings(penrose_graph(1, 1, 1)) ** 2)
