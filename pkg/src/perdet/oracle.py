"""Brute-force ground truth, sharing no linear algebra with the Kasteleyn engine."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Sequence

from .embedded import EmbeddedGraph
from .laurent import RingElement, normalize

__all__ = [
    "BudgetExceeded",
    "EnumerationBudget",
    "iter_matchings",
    "enumerate_matchings",
    "count_matchings_brute",
    "invariant_matchings",
    "pp_weighted_sum",
    "ising_brute",
    "complement_orbit_signed_count",
]


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumerationBudget:
    max_vertices: int = 96
    max_matchings: int = 10 ** 6
    max_states: int = 2 ** 20


DEFAULT_BUDGET = EnumerationBudget()


def iter_matchings(g: EmbeddedGraph, budget: EnumerationBudget = DEFAULT_BUDGET) -> Iterator[frozenset]:
    """Perfect matchings by branching on the lowest uncovered vertex."""
    n = g.vertex_count
    if n > budget.max_vertices:
        raise BudgetExceeded(f"{n} vertices exceeds the budget of {budget.max_vertices}")
    if n % 2:
        return
    incident: List[List[tuple]] = [[] for _ in range(n)]
    for e, ed in enumerate(g.edges):
        if ed.u != ed.v:
            incident[ed.u].append((e, ed.v))
            incident[ed.v].append((e, ed.u))
    covered = [False] * n
    chosen: List[int] = []
    produced = 0

    def rec(start):
        nonlocal produced
        v = start
        while v < n and covered[v]:
            v += 1
        if v == n:
            produced += 1
            if produced > budget.max_matchings:
                raise BudgetExceeded(f"more than {budget.max_matchings} matchings")
            yield frozenset(chosen)
            return
        covered[v] = True
        for e, w in incident[v]:
            if not covered[w]:
                covered[w] = True
                chosen.append(e)
                yield from rec(v + 1)
                chosen.pop()
                covered[w] = False
        covered[v] = False

    yield from rec(0)


def enumerate_matchings(g: EmbeddedGraph, budget: EnumerationBudget = DEFAULT_BUDGET) -> List[frozenset]:
    return list(iter_matchings(g, budget))


def count_matchings_brute(g: EmbeddedGraph, budget: EnumerationBudget = DEFAULT_BUDGET) -> int:
    return sum(1 for _ in iter_matchings(g, budget))


def _pair_map(g: EmbeddedGraph, perm: Sequence[int]):
    pairs = {}
    for e, ed in enumerate(g.edges):
        pairs.setdefault(frozenset((ed.u, ed.v)), []).append(e)
    image = {}
    for e, ed in enumerate(g.edges):
        key = frozenset((perm[ed.u], perm[ed.v]))
        if key not in pairs:
            raise ValueError("permutation is not a graph automorphism")
        image[e] = key
    return image


def invariant_matchings(g: EmbeddedGraph, automorphisms: Sequence[Sequence[int]],
                        budget: EnumerationBudget = DEFAULT_BUDGET) -> int:
    """Number of perfect matchings fixed by every listed vertex permutation."""
    maps = [_pair_map(g, p) for p in automorphisms]
    total = 0
    for m in iter_matchings(g, budget):
        pairs = {frozenset((g.edges[e].u, g.edges[e].v)) for e in m}
        if all({mp[e] for e in m} == pairs for mp in maps):
            total += 1
    return total


def pp_weighted_sum(h, scheme, budget: EnumerationBudget = DEFAULT_BUDGET) -> RingElement:
    """Sum over matchings of the hexagon graph of the product of cube weights.

    For ``strange3`` only cyclically symmetric partitions take part.
    """
    from .partitions import matching_to_plane_partition

    total: RingElement = 0
    for m in iter_matchings(h.graph, budget):
        p = matching_to_plane_partition(h, m)
        if scheme.kind == "strange3" and any((j, k, i) not in p for i, j, k in p):
            continue
        total = total + scheme.partition_weight(p, h.dims)
    return normalize(total)


def complement_orbit_signed_count(h, symmetries, reference_partition=None,
                                  budget: EnumerationBudget = DEFAULT_BUDGET) -> int:
    """Signed count of partitions fixed by ``symmetries`` (some complementing).

    Each such partition holds exactly half of every orbit of cubes under the
    complementing symmetry; its sign is -1 to the number of orbits where its
    half differs from that of the first partition found.
    """
    from .partitions import matching_to_plane_partition

    comp = [s for s in symmetries if s.complementing]
    if len(comp) != 1:
        raise ValueError("exactly one complementing symmetry expected")
    sym = comp[0]
    orbits = []
    seen = set()
    for cube in h.cubes():
        if cube in seen:
            continue
        other = sym.cube(cube)
        seen.update((cube, other))
        orbits.append((cube, other))
    total = 0
    ref = reference_partition
    for m in iter_matchings(h.graph, budget):
        p = matching_to_plane_partition(h, m)
        if not all(s.fixes(p) for s in symmetries):
            continue
        if ref is None:
            ref = p
        flips = sum(1 for c, _ in orbits if (c in p) != (c in ref))
        total += -1 if flips % 2 else 1
    return total


def ising_brute(g: EmbeddedGraph, agree: Sequence[RingElement], disagree: Sequence[RingElement],
                budget: EnumerationBudget = DEFAULT_BUDGET) -> RingElement:
    """Sum over all +-1 spin states of the product of edge weights."""
    n = g.vertex_count
    if 2 ** n > budget.max_states:
        raise BudgetExceeded(f"2^{n} states exceeds the budget")
    total: RingElement = 0
    for spins in itertools.product((0, 1), repeat=n):
        term: RingElement = 1
        for e, ed in enumerate(g.edges):
            term = term * (agree[e] if spins[ed.u] == spins[ed.v] else disagree[e])
        total = total + term
    return normalize(total)
