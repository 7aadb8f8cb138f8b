import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from perdet.embedded import EmbeddingError, edge_graph
from perdet.kasteleyn import count_matchings, flat_weighting
from perdet.laurent import Q, Laurent, normalize
from perdet.linalg import det, nontrivial_factors, smith_normal_form
from perdet.oracle import count_matchings_brute, ising_brute
from perdet.partitions import hexagon_graph, macmahon
from perdet.polyhedra import (cube, cycle, dodecahedron, double_triangle, icosahedron, octahedron, path,
                              tetrahedron)
from perdet.transforms import (Drawing, PathNetwork, bipartite_det, butterfly_planarize, carlitz_network,
                               drawing_det, find_crossings, gv_kasteleyn_matrix, gv_matrix, gv_pivot_chain,
                               gv_split, ising_partition_function, ising_reduce, power_of_two_count,
                               random_drawing, random_grid_network, split_vertex, triangulate, triple_edge)


def weighted_hexagon(dims, seed):
    rng = random.Random(seed)
    g = hexagon_graph(*dims).graph
    flat = flat_weighting(g)
    return g.with_weights([s * rng.choice([1, 2, 3, Q]) for s in flat])


def same_up_to_sign(a, b):
    return normalize(a) == normalize(b) or normalize(a) == normalize(-b)


@pytest.mark.parametrize("seed", range(10))
def test_split_vertex_scales_det_by_unit(seed):
    g = weighted_hexagon((1, 2, 2), seed)
    rng = random.Random(seed)
    v = rng.randrange(g.vertex_count)
    cut = rng.randint(0, g.degree(v))
    split = split_vertex(g, v, cut, Q)
    assert same_up_to_sign(bipartite_det(split), Q * bipartite_det(g))
    assert count_matchings(split_vertex(hexagon_graph(1, 2, 2).graph, v, cut)) == macmahon(1, 2, 2)


@pytest.mark.parametrize("seed", range(10))
def test_triple_edge_keeps_det(seed):
    g = weighted_hexagon((2, 1, 2), seed)
    e = random.Random(seed).randrange(g.edge_count)
    w = g.edges[e].weight
    tripled = triple_edge(g, e, Q, normalize(w * Laurent({-1: 1})))
    assert same_up_to_sign(bipartite_det(tripled), bipartite_det(g))


def test_triple_edge_needs_factorization():
    g = cube()
    with pytest.raises(ValueError):
        triple_edge(g, 0, 2, 3)


@given(st.integers(1, 4), st.integers(0, 12), st.integers(0, 10 ** 6))
@settings(max_examples=80)
def test_butterfly_keeps_det(n, edge_count, seed):
    d = random_drawing(random.Random(seed), n, n, edge_count, weights=(1, -1, 2, Q))
    g = butterfly_planarize(d)
    assert not find_crossings(Drawing.build(d.points, d.edges, d.colors)) or g.vertex_count > 2 * n
    assert same_up_to_sign(bipartite_det(g), drawing_det(d))


def test_butterfly_on_k33():
    # K3,3 drawn with its usual single crossing, perturbed into general position
    pts = [(0, 0), (Fraction(101, 100), Fraction(1, 7)), (2, Fraction(1, 3)),
           (0, 2), (Fraction(99, 100), Fraction(21, 10)), (Fraction(203, 100), Fraction(19, 10))]
    edges = [(b, w, 1) for b in range(3) for w in range(3, 6)]
    d = Drawing.build(pts, edges, "BBBWWW")
    assert find_crossings(d)
    g = butterfly_planarize(d)
    assert abs(bipartite_det(g)) == abs(drawing_det(d))


@pytest.mark.parametrize("dims", list(itertools.product(range(3), repeat=3)))
def test_carlitz_network(dims):
    p = carlitz_network(*dims)
    m = gv_matrix(p)
    value = abs(det(m)) if m else 1
    assert value == count_matchings(gv_split(p)) == macmahon(*dims)
    chain, factor = gv_pivot_chain(p)
    assert chain == m
    kast, _, _ = gv_kasteleyn_matrix(p)
    if m:
        assert normalize(det(kast)) == normalize(factor * det(m))


@pytest.mark.parametrize("seed", range(15))
def test_random_networks(seed):
    rng = random.Random(seed)
    p = random_grid_network(rng, rng.randint(1, 4), 5, rng.randint(1, 5), 0.75)
    m = gv_matrix(p)
    g = gv_split(p)
    assert abs(det(m)) == count_matchings(g) == count_matchings_brute(g)


def test_gv_split_cokernel_matches_hexagon():
    p = carlitz_network(2, 2, 2)
    assert nontrivial_factors(smith_normal_form(gv_matrix(p))) == [2, 10]


def test_network_with_cycle_rejected():
    with pytest.raises(ValueError):
        PathNetwork.from_points([(0, 0), (1, 0), (1, 1)], [(0, 1), (1, 2), (2, 0)], [], []).check()


@pytest.mark.parametrize("make", [tetrahedron, octahedron, icosahedron, double_triangle])
def test_ising_matches_brute_on_triangulations(make):
    g = triangulate(make())[0]
    rng = random.Random(g.vertex_count)
    agree = [rng.choice([1, 2, Q]) for _ in g.edges]
    disagree = [rng.choice([1, 3, Laurent({-1: 1})]) for _ in g.edges]
    assert ising_partition_function(g, agree, disagree) == ising_brute(g, agree, disagree)


def test_ising_triangle_value():
    a, b = Q, Laurent({-1: 1})
    assert ising_partition_function(cycle(3), [a] * 3, [b] * 3) == normalize(2 * a ** 3 + 6 * a * b * b)


def test_ising_reference_is_a_matching_of_connectors():
    red = ising_reduce(tetrahedron(), [1] * 6, [1] * 6)
    assert len(red.reference) == 6
    assert red.scale in (1, -1)


@pytest.mark.parametrize("make", [cube, lambda: cycle(5)])
def test_triangulate_then_ising(make):
    g, agree, disagree = triangulate(make())
    assert all(len(f) == 3 for f in g.faces)
    agree[0], disagree[0] = 2, Q
    assert ising_partition_function(g, agree, disagree) == ising_brute(g, agree, disagree)


def test_triangulate_rejects_repeated_vertex():
    with pytest.raises(EmbeddingError):
        triangulate(path(4))


@pytest.mark.parametrize("g", [path(2), path(3), path(5), cycle(3), cycle(4), cycle(6), cycle(8),
                               tetrahedron(), cube(), dodecahedron()], ids=lambda g: g.name)
def test_power_of_two(g):
    count = power_of_two_count(g)
    assert count == count_matchings(edge_graph(g)) == count_matchings_brute(edge_graph(g))
    assert count == 0 or count & (count - 1) == 0
