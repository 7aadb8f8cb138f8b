import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from perdet.embedded import components
from perdet.kasteleyn import (UnsupportedGraph, antipodal_square_check, cokernel_of, count_matchings, curvature,
                              flat_orientation, flat_weighting, kasteleyn_matrix, loop_of, loop_ratio,
                              matching_term, prescribed_curvature_weighting, signed_adjacency_matrix,
                              total_curvature, weighted_matching_sum)
from perdet.laurent import Q, Laurent, normalize
from perdet.linalg import nontrivial_factors, pfaffian
from perdet.oracle import count_matchings_brute, enumerate_matchings
from perdet.partitions import hexagon_graph
from perdet.polyhedra import (antipodal_map, cube, cube_points, cycle, dodecahedron, icosahedron, k4_projective,
                              octahedron, path, planar_embedding, tetrahedron)

from conftest import WEIGHTINGS


@st.composite
def random_plane_graphs(draw, max_side=4):
    """A random subgraph of a triangulated grid, drawn with straight lines."""
    w = draw(st.integers(1, max_side))
    h = draw(st.integers(1, max_side))
    points = [(x, y) for y in range(h) for x in range(w)]
    idx = {p: i for i, p in enumerate(points)}
    candidates = []
    for (x, y), i in idx.items():
        for dx, dy in ((1, 0), (0, 1), (1, 1)):
            j = idx.get((x + dx, y + dy))
            if j is not None:
                candidates.append((i, j))
    keep = draw(st.lists(st.booleans(), min_size=len(candidates), max_size=len(candidates)))
    edges = [e for e, k in zip(candidates, keep) if k]
    return planar_embedding(points, edges, name="random_plane")


@given(random_plane_graphs())
@settings(max_examples=150)
def test_count_matches_brute_force_on_random_plane_graphs(g):
    assert count_matchings(g) == count_matchings_brute(g)


@given(random_plane_graphs())
@settings(max_examples=60)
def test_flat_orientation_makes_every_term_positive(g):
    if not g.edges or any(len(c) % 2 for c in components(g)):
        return
    o = flat_orientation(g)
    terms = {matching_term(g, m, [1] * g.edge_count, orientation=o) for m in enumerate_matchings(g)}
    assert len(terms) <= 1


@pytest.mark.parametrize("make,count", [
    (tetrahedron, 3), (cube, 9), (octahedron, 8), (icosahedron, 125), (dodecahedron, 36),
    (lambda: cycle(6), 2), (lambda: path(4), 1), (lambda: path(3), 0),
])
def test_polyhedron_counts(make, count):
    assert count_matchings(make()) == count


def test_dodecahedron_pfaffian_is_36():
    g = dodecahedron()
    assert abs(pfaffian(signed_adjacency_matrix(g, flat_orientation(g)))) == 36


@pytest.mark.parametrize("dims", [(1, 1, 1), (2, 2, 2), (1, 2, 3), (3, 2, 1)])
def test_flat_weighting_is_flat(dims):
    g = hexagon_graph(*dims).graph
    w = flat_weighting(g)
    assert all(curvature(g, w, f) == 1 for f in g.faces)


def test_curvature_of_a_square_with_all_ones():
    g = cycle(4).with_colors("BWBW")
    assert [curvature(g, [1] * 4, f) for f in g.faces] == [-1, -1]


def test_prescribed_curvature_is_realized():
    g = hexagon_graph(2, 2, 2).graph
    outer = max(range(len(g.faces)), key=lambda i: len(g.faces[i]))
    rng = random.Random(3)
    units = [Q, -1, Laurent({-2: 1}), -Q]
    for _ in range(20):
        prescription = {i: rng.choice(units) for i in range(len(g.faces)) if i != outer}
        w = prescribed_curvature_weighting(g, prescription, outer=outer)
        for i, target in prescription.items():
            assert curvature(g, w, g.faces[i]) == target
        assert total_curvature(g, w) == 1


def test_prescription_must_multiply_to_one():
    g = cycle(4).with_colors("BWBW")
    with pytest.raises(ValueError):
        prescribed_curvature_weighting(g, {0: Q, 1: Q})


@pytest.mark.parametrize("g", [hexagon_graph(1, 1, 2).graph, cube()], ids=["Z112", "cube"])
def test_loop_ratio_theorem_exhaustive(g):
    rng = random.Random(17)
    units = [1, -1, Q, -Q, Laurent({-1: 1})]
    weightings = [flat_weighting(g)] + [[rng.choice(units) for _ in g.edges] for _ in range(4)]
    pairs = 0
    for w in weightings:
        assert total_curvature(g, w) == 1
        for m1, m2 in itertools.permutations(enumerate_matchings(g), 2):
            try:
                loop_of(g, m1, m2)
            except ValueError:
                continue
            ratio, product = loop_ratio(g, w, m1, m2)
            assert ratio == product
            pairs += 1
    assert pairs > 0


def test_weighted_sum_with_reference_matching():
    h = hexagon_graph(1, 1, 1)
    w = prescribed_curvature_weighting(h.graph, {next(iter(h.face_position)): Q})
    assert weighted_matching_sum(h.graph, w, reference=h.reference) in (1 + Q, normalize(1 + Laurent({-1: 1})))


def test_cokernels():
    assert nontrivial_factors(cokernel_of(hexagon_graph(2, 2, 2).graph)) == [2, 10]
    assert nontrivial_factors(cokernel_of(hexagon_graph(1, 1, 1).graph)) == [2]
    with pytest.raises(UnsupportedGraph):
        cokernel_of(tetrahedron())


def test_antipodal_square():
    assert antipodal_square_check(cube(), antipodal_map(cube_points())) == (9, 3)


def test_projective_plane_pfaffian():
    assert count_matchings(k4_projective()) == count_matchings_brute(k4_projective()) == 3


def test_kasteleyn_matrix_shape():
    g = hexagon_graph(1, 1, 2).graph
    m, blacks, whites = kasteleyn_matrix(g, flat_weighting(g), g.colors)
    assert len(m) == len(blacks) == len(whites) == g.vertex_count // 2


def test_recorder_sees_weightings():
    before = WEIGHTINGS["checked"]
    flat_weighting(cube())
    assert WEIGHTINGS["checked"] == before + 1
