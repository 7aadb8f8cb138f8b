import itertools

import pytest
from hypothesis import given, settings, strategies as st

from perdet.embedded import is_perfect_matching
from perdet.kasteleyn import count_matchings
from perdet.laurent import Q, evaluate
from perdet.oracle import count_matchings_brute, invariant_matchings, pp_weighted_sum
from perdet.partitions import (CubeWeightScheme, Region, all_plane_partitions, box_symmetry, cstcpp_graph,
                               cyclic_quotient, deleted_quotient, hexagon_graph, hexagon_side_lengths,
                               is_plane_partition, macmahon, matching_to_plane_partition, penrose_graph,
                               plane_partition_heights, plane_partition_to_matching, q_macmahon,
                               remove_vestigial, scheme_weighted_sum, tcpp_graph, triangle_permutation)

small_dims = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))


@pytest.mark.parametrize("dims,value", [((1, 1, 1), 2), ((2, 2, 2), 20), ((2, 2, 3), 50), ((2, 3, 3), 175),
                                        ((3, 3, 3), 980), ((0, 5, 7), 1), ((1, 1, 4), 5)])
def test_macmahon_values(dims, value):
    assert macmahon(*dims) == value


def test_macmahon_is_symmetric():
    for dims in itertools.product(range(4), repeat=3):
        assert len({macmahon(*p) for p in itertools.permutations(dims)}) == 1


@given(small_dims)
def test_q_macmahon_specializes(dims):
    assert evaluate(q_macmahon(*dims), 1) == macmahon(*dims)


def test_z223_shape():
    h = hexagon_graph(2, 2, 3)
    assert h.graph.vertex_count == 32
    assert len(h.face_position) == 10
    assert count_matchings(h.graph) == 50


@given(small_dims)
@settings(max_examples=30)
def test_side_lengths_of_box_region(dims):
    a, b, c = dims
    assert sorted(hexagon_side_lengths(Region.box(a, b, c))) == sorted([a, a, b, b, c, c])


@given(small_dims)
@settings(max_examples=25)
def test_partition_matching_bijection(dims):
    h = hexagon_graph(*dims)
    partitions = all_plane_partitions(dims)
    assert len(partitions) == macmahon(*dims)
    for p in partitions:
        m = plane_partition_to_matching(h, p)
        assert is_perfect_matching(h.graph, m)
        assert matching_to_plane_partition(h, m) == p


def test_heights_and_validity():
    p = frozenset({(1, 1, 1), (1, 1, 2), (2, 1, 1)})
    assert is_plane_partition(p, (2, 2, 2))
    assert plane_partition_heights(p, (2, 2, 2)) == [[2, 0], [1, 0]]
    assert not is_plane_partition({(1, 1, 2)}, (2, 2, 2))


@pytest.mark.parametrize("dims", [(1, 1, 1), (1, 2, 2), (2, 2, 2), (2, 1, 3)])
def test_uniform_q_equals_brute(dims):
    h = hexagon_graph(*dims)
    scheme = CubeWeightScheme.uniform(Q)
    assert scheme_weighted_sum(h, scheme) == pp_weighted_sum(h, scheme) == q_macmahon(*dims)


def test_hexagon_111_uniform_q():
    assert scheme_weighted_sum(hexagon_graph(1, 1, 1), CubeWeightScheme.uniform(Q)) == 1 + Q


@pytest.mark.parametrize("scheme,dims", [
    (CubeWeightScheme.minus_one(), (2, 2, 2)),
    (CubeWeightScheme.minus_one(), (3, 2, 2)),
    (CubeWeightScheme.strange_n(1, -1), (2, 2, 2)),
    (CubeWeightScheme.strange_n(-1, 1), (2, 2, 2)),
    (CubeWeightScheme.strange_n(1, -1), (3, 3, 1)),
    (CubeWeightScheme.strange3(-1, 1, 1), (2, 2, 2)),
    (CubeWeightScheme.strange3(1, -1, 1), (3, 3, 3)),
    (CubeWeightScheme.strange3(-1, -1, -1), (2, 2, 2)),
])
def test_schemes_equal_brute(scheme, dims):
    h = hexagon_graph(*dims)
    assert scheme_weighted_sum(h, scheme) == pp_weighted_sum(h, scheme)


def test_scheme_box_checks():
    with pytest.raises(ValueError):
        CubeWeightScheme.strange3(1, 1, 1).check_box((2, 2, 3))
    with pytest.raises(ValueError):
        CubeWeightScheme.strange_n(1, 1).check_box((2, 3, 2))


def test_cyclic_quotient_counts_symmetric_tilings():
    for a in (1, 2, 3):
        h = hexagon_graph(a, a, a)
        cq = cyclic_quotient(h)
        perm = triangle_permutation(h, box_symmetry("cyclic", h.dims))
        assert count_matchings(cq.graph) == invariant_matchings(h.graph, [perm])


@pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3)])
def test_transpose_complement_graph(a, b):
    h = hexagon_graph(2 * a, b, b)
    perm = triangle_permutation(h, box_symmetry("transpose_complement", h.dims))
    assert count_matchings(tcpp_graph(a, b)) == invariant_matchings(h.graph, [perm])


@pytest.mark.parametrize("a", [1, 2])
def test_cyclic_transpose_complement_graph(a):
    h = hexagon_graph(2 * a, 2 * a, 2 * a)
    perms = [triangle_permutation(h, box_symmetry(n, h.dims)) for n in ("cyclic", "transpose_complement")]
    assert count_matchings(cstcpp_graph(a)) == invariant_matchings(h.graph, perms)


@pytest.mark.parametrize("name", ["complement", "transpose", "cyclic"])
def test_deleted_quotient_needs_the_forcing_mirror(name):
    h = hexagon_graph(2, 2, 2)
    with pytest.raises(ValueError):
        deleted_quotient(h, [box_symmetry(name, h.dims)])


def test_remove_vestigial_forces_pendant_edges():
    from perdet.polyhedra import path
    reduced, forced, ok = remove_vestigial(path(4))
    assert ok and reduced.vertex_count == 0 and len(forced) == 2
    _, _, ok = remove_vestigial(path(3))
    assert not ok


@pytest.mark.parametrize("dims", [(0, 0, 0), (1, 1, 1), (2, 0, 0), (2, 2, 0), (2, 2, 2)])
def test_penrose_graph_counts(dims):
    g = penrose_graph(*dims)
    assert count_matchings(g) == count_matchings_brute(g)


def test_penrose_parity():
    with pytest.raises(ValueError):
        penrose_graph(2, 1, 1)
