import itertools

import pytest

from perdet.laurent import Q, normalize
from perdet.oracle import (BudgetExceeded, EnumerationBudget, complement_orbit_signed_count,
                           count_matchings_brute, enumerate_matchings, invariant_matchings, ising_brute)
from perdet.partitions import box_symmetry, hexagon_graph, triangle_permutation
from perdet.polyhedra import cube, cycle, path, tetrahedron


def test_small_graphs():
    assert count_matchings_brute(cycle(6)) == 2
    assert count_matchings_brute(path(5)) == 0
    assert count_matchings_brute(tetrahedron()) == 3
    assert len(enumerate_matchings(cube())) == 9


def test_matchings_are_distinct_and_perfect():
    g = hexagon_graph(2, 2, 2).graph
    ms = enumerate_matchings(g)
    assert len(set(ms)) == len(ms) == 20
    for m in ms:
        ends = list(itertools.chain.from_iterable((g.edges[e].u, g.edges[e].v) for e in m))
        assert sorted(ends) == list(range(g.vertex_count))


def test_budgets():
    with pytest.raises(BudgetExceeded):
        count_matchings_brute(cube(), EnumerationBudget(max_vertices=4))
    with pytest.raises(BudgetExceeded):
        count_matchings_brute(hexagon_graph(2, 2, 2).graph, EnumerationBudget(max_matchings=5))
    with pytest.raises(BudgetExceeded):
        ising_brute(cube(), [1] * 12, [1] * 12, EnumerationBudget(max_states=16))


def test_invariant_matchings_identity_counts_everything():
    g = hexagon_graph(2, 2, 1).graph
    assert invariant_matchings(g, [list(range(g.vertex_count))]) == count_matchings_brute(g)


def test_invariant_matchings_rejects_non_automorphism():
    g = cycle(4)
    with pytest.raises(ValueError):
        invariant_matchings(g, [[0, 2, 1, 3]])


def test_ising_brute_triangle():
    a, b = Q, 2
    assert ising_brute(cycle(3), [a] * 3, [b] * 3) == normalize(2 * a ** 3 + 6 * a * b * b)


def test_signed_complement_count():
    h = hexagon_graph(2, 1, 1)
    sym = box_symmetry("transpose_complement", h.dims)
    signed = complement_orbit_signed_count(h, [sym])
    plain = invariant_matchings(h.graph, [triangle_permutation(h, sym)])
    assert abs(signed) <= plain
