"""Non-intersecting lattice paths and the same count as a matching problem.

Gessel and Viennot count families of disjoint paths with a determinant of
path counts.  Splitting every inner vertex of the network into an in-node and
an out-node turns the path families into perfect matchings, and pivoting the
Kasteleyn matrix on the split edges gives back the path matrix.
"""
import random

from perdet.io import format_network
from perdet.kasteleyn import cokernel_of, count_matchings
from perdet.linalg import det, nontrivial_factors, smith_normal_form
from perdet.partitions import hexagon_graph
from perdet.transforms import carlitz_network, gv_matrix, gv_pivot_chain, gv_split, random_grid_network

p = carlitz_network(2, 2, 2)
print(format_network(p, "carlitz_2_2_2").splitlines()[:3], "...")
m = gv_matrix(p)
for row in m:
    print("   ", row)
print("det of path matrix:", det(m))
print("matchings of split graph:", count_matchings(gv_split(p)))

reduced, factor = gv_pivot_chain(p)
print("pivoting reaches the path matrix:", reduced == m, "with det factor", factor)

# the cokernel sees more than the determinant
print("SNF of path matrix:", nontrivial_factors(smith_normal_form(m)))
print("SNF of Kasteleyn matrix of Z(2,2,2):", nontrivial_factors(cokernel_of(hexagon_graph(2, 2, 2).graph)))

# one box, three ways to run the paths: all share the Kasteleyn cokernel
a, b, c = 3, 2, 1
print(f"Kasteleyn Z{(a, b, c)}:", nontrivial_factors(cokernel_of(hexagon_graph(a, b, c).graph)))
for dims in [(a, b, c), (b, a, c), (c, a, b)]:
    print(f"  Carlitz{dims}:", nontrivial_factors(smith_normal_form(gv_matrix(carlitz_network(*dims)))))

rng = random.Random(2)
q = random_grid_network(rng, 4, 5, 3, 0.9)
print("random 3-path network:", abs(det(gv_matrix(q))), "path families =", count_matchings(gv_split(q)), "matchings")
