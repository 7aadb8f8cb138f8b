"""Named verification suites: each check compares two independently computed values."""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from math import prod
from typing import Callable, Dict, Iterator, Tuple

from .embedded import edge_graph, quotient_by_free_automorphism
from .kasteleyn import (antipodal_square_check, cokernel_of, count_matchings, flat_weighting, loop_of,
                        loop_ratio, signed_adjacency_matrix, flat_orientation, total_curvature,
                        weighted_matching_sum)
from .laurent import Laurent, Q, evaluate, format_poly, normalize, parse_poly
from .linalg import det, nontrivial_factors, pfaffian, pfaffian_interpolated, smith_normal_form
from .oracle import (EnumerationBudget, complement_orbit_signed_count, count_matchings_brute,
                     enumerate_matchings, invariant_matchings, ising_brute, pp_weighted_sum)
from .partitions import (CubeWeightScheme, box_symmetry, hexagon_graph, macmahon, penrose_graph,
                         q_macmahon, scheme_weighted_sum, tcpp_graph, triangle_permutation)
from .polyhedra import (antipodal_map, cube, cube_points, cycle, dodecahedron, double_triangle, icosahedron,
                        k4_projective, octahedron, path, rubik, rubik_points, tetrahedron,
                        truncated_icosahedron)
from .transforms import (carlitz_network, gv_matrix, gv_pivot_chain, gv_split, ising_partition_function,
                         power_of_two_count, random_grid_network, triangulate)

__all__ = ["Check", "SUITES", "run_suite", "TESLER_PENTAGON_POLYNOMIAL"]

# (factor, power); the two conjugate quadratics over Q(sqrt 5) multiply to the first factor
_TESLER_FACTORS = [("1-4q+9q^2-10q^3+5q^4", 1), ("1+2q+2q^3+5q^4", 2), ("1+q^2+2q^3+q^4", 3)]
TESLER_PENTAGON_POLYNOMIAL = normalize(prod(parse_poly(f) ** k for f, k in _TESLER_FACTORS))

BIG_BUDGET = EnumerationBudget(max_vertices=128, max_matchings=10 ** 6)


@dataclass(frozen=True)
class Check:
    label: str
    left: object
    right: object

    @property
    def passed(self) -> bool:
        return self.left == self.right


def _text(x) -> str:
    if isinstance(x, (int, Laurent)):
        return format_poly(x)
    if isinstance(x, (tuple, list)):
        return "(" + ",".join(_text(y) for y in x) + ")"
    return str(x)


# -- suites ---------------------------------------------------------------------------

def suite_macmahon(n: int) -> Iterator[Check]:
    for a, b, c in itertools.product(range(n + 1), repeat=3):
        yield Check(f"N({a},{b},{c})", count_matchings(hexagon_graph(a, b, c).graph), macmahon(a, b, c))


def suite_qmacmahon(n: int) -> Iterator[Check]:
    for a, b, c in itertools.product(range(n + 1), repeat=3):
        h = hexagon_graph(a, b, c)
        value = scheme_weighted_sum(h, CubeWeightScheme.uniform(Q))
        yield Check(f"Nq({a},{b},{c}) det=formula", value, q_macmahon(a, b, c))
        if macmahon(a, b, c) <= 5000:
            yield Check(f"Nq({a},{b},{c}) det=brute", value, pp_weighted_sum(h, CubeWeightScheme.uniform(Q)))


def suite_loops(n: int) -> Iterator[Check]:
    rng = random.Random(20240601)
    graphs = [cube()] + [hexagon_graph(a, b, c).graph for a, b, c in itertools.product(range(1, n + 1), repeat=3)
                         if a <= b <= c and macmahon(a, b, c) <= 200]
    units = [1, -1, Q, -Q, Laurent({-1: 1}), Laurent({2: -1})]
    for g in graphs:
        matchings = enumerate_matchings(g)
        for trial, weights in enumerate([list(flat_weighting(g))] + [[rng.choice(units) for _ in g.edges]
                                                                     for _ in range(2)]):
            agree = total = 0
            for m1, m2 in itertools.permutations(matchings, 2):
                try:
                    loop_of(g, m1, m2)
                except ValueError:
                    continue
                ratio, product = loop_ratio(g, weights, m1, m2)
                total += 1
                agree += ratio == product
            yield Check(f"loops {g.name} weighting {trial}", agree, total)
            yield Check(f"total curvature {g.name} weighting {trial}", total_curvature(g, weights), 1)


def suite_antipodal(n: int) -> Iterator[Check]:
    for name, g, pts in (("cube", cube(), cube_points()), ("rubik", rubik(), rubik_points())):
        involution = antipodal_map(pts)
        whole, half = antipodal_square_check(g, involution)
        yield Check(f"{name} count = square", whole, half * half)
        if name == "cube":
            yield Check(f"{name} count brute", whole, count_matchings_brute(g, BIG_BUDGET))
        quotient = quotient_by_free_automorphism(g, involution, 2)
        yield Check(f"{name}/antipodal Pf=brute", half, count_matchings_brute(quotient, BIG_BUDGET))
    yield Check("K4 on projective plane", count_matchings(k4_projective()), 3)


def _power2_corpus(n: int):
    size = max(n, 8)
    out = [path(k) for k in range(2, size + 1)] + [cycle(k) for k in range(3, size + 1)]
    return out + [tetrahedron(), cube(), dodecahedron()]


def suite_power2(n: int) -> Iterator[Check]:
    for g in _power2_corpus(n):
        line = edge_graph(g)
        count = power_of_two_count(g)
        yield Check(f"{g.name} GF(2) = Pf", count, count_matchings(line))
        if line.vertex_count <= 40:
            yield Check(f"{g.name} GF(2) = brute", count, count_matchings_brute(line))
        yield Check(f"{g.name} is 0 or a power of 2", count == 0 or count & (count - 1) == 0, True)


def _ising_corpus(n: int):
    base = [cycle(3), double_triangle(), tetrahedron(), octahedron(), cube(), icosahedron()]
    base += [cycle(k) for k in range(4, min(n, 12) + 1)]
    return [g for g in base if g.vertex_count <= 12]


def suite_ising(n: int) -> Iterator[Check]:
    rng = random.Random(7)
    a, b = Q, Laurent({-1: 1})
    t = cycle(3)
    yield Check("triangle = 2a^3 + 6ab^2", ising_partition_function(t, [a] * 3, [b] * 3),
                normalize(2 * a ** 3 + 6 * a * b * b))
    for g in _ising_corpus(n):
        tri, agree, disagree = triangulate(g)
        for k in range(g.edge_count):
            agree[k] = rng.choice([1, 2, 3, Q, -1])
            disagree[k] = rng.choice([1, 2, 5, Q, b])
        yield Check(f"ising {g.name} Pf=brute", ising_partition_function(tri, agree, disagree),
                    ising_brute(tri, agree, disagree))
        ones = [1] * tri.edge_count
        yield Check(f"ising {g.name} unit weights = 2^V", ising_partition_function(tri, ones, ones),
                    2 ** tri.vertex_count)


def suite_gv(n: int) -> Iterator[Check]:
    for a, b, c in itertools.product(range(n + 1), repeat=3):
        p = carlitz_network(a, b, c)
        m = gv_matrix(p)
        value = abs(det(m)) if m else 1
        yield Check(f"carlitz({a},{b},{c}) |det GV| = matchings", value, count_matchings(gv_split(p)))
        chain, _ = gv_pivot_chain(p)
        yield Check(f"carlitz({a},{b},{c}) pivots give GV", chain, m)
    rng = random.Random(11)
    for k in range(20):
        p = random_grid_network(rng, rng.randint(1, 4), 5, rng.randint(1, 5), 0.75)
        m = gv_matrix(p)
        yield Check(f"random network {k} |det GV| = matchings", abs(det(m)), count_matchings(gv_split(p)))


def suite_cokernel_carlitz(n: int) -> Iterator[Check]:
    for a, b, c in itertools.product(range(n + 1), repeat=3):
        kast = tuple(nontrivial_factors(cokernel_of(hexagon_graph(a, b, c).graph))) if a * b * c else ()
        for side, dims in (("a", (a, b, c)), ("b", (b, a, c)), ("c", (c, a, b))):
            m = gv_matrix(carlitz_network(*dims))
            factors = tuple(nontrivial_factors(smith_normal_form(m))) if m else ()
            yield Check(f"coker GV {side}-side ({a},{b},{c}) = coker Kasteleyn", factors, kast)


def _n6(a2: int, b: int, signed: bool) -> int:
    h = hexagon_graph(a2, b, b)
    sym = box_symmetry("transpose_complement", h.dims)
    if signed:
        return complement_orbit_signed_count(h, [sym], budget=BIG_BUDGET)
    return invariant_matchings(h.graph, [triangle_permutation(h, sym)], BIG_BUDGET)


def _invariant(a: int, names) -> int:
    h = hexagon_graph(a, a, a)
    perms = [triangle_permutation(h, box_symmetry(nm, h.dims)) for nm in names]
    return invariant_matchings(h.graph, perms, BIG_BUDGET)


def suite_identities(n: int) -> Iterator[Check]:
    minus = CubeWeightScheme.minus_one()
    for a, b, c in itertools.product(range(1, max(1, n // 2) + 1), repeat=3):
        if a <= b <= c:
            h = hexagon_graph(2 * a, 2 * b, 2 * c)
            yield Check(f"N({2*a},{2*b},{2*c})_-1 = N({a},{b},{c})^2",
                        abs(scheme_weighted_sum(h, minus)), macmahon(a, b, c) ** 2)
    for a, b, c in itertools.product(range(0, max(1, n // 2) + 1), repeat=3):
        if b <= c and macmahon(2 * a + 1, 2 * b, 2 * c) <= 10 ** 5:
            h = hexagon_graph(2 * a + 1, 2 * b, 2 * c)
            yield Check(f"N({2*a+1},{2*b},{2*c})_-1 = N({a},{b},{c})N({a+1},{b},{c})",
                        abs(scheme_weighted_sum(h, minus)), macmahon(a, b, c) * macmahon(a + 1, b, c))
    yield Check("N6(4,2,2)_-1 = N6(2,1,1)^2 (brute)", abs(_n6(4, 2, True)), _n6(2, 1, False) ** 2)
    yield Check("N6(2,1,1) graph = brute", count_matchings(tcpp_graph(1, 1)), _n6(2, 1, False))
    h = hexagon_graph(2, 2, 2)
    combo = scheme_weighted_sum(h, CubeWeightScheme.strange_n(1, -1))
    yield Check("|N(2,2,2)_1,-1| = N(1,1,1) N(1,1,1)_-1^2", abs(combo),
                macmahon(1, 1, 1) * abs(pp_weighted_sum(hexagon_graph(1, 1, 1), minus)) ** 2)
    yield Check("N(2,2,2)_1,-1 det = brute", combo, pp_weighted_sum(h, CubeWeightScheme.strange_n(1, -1)))
    for a in range(1, max(1, n // 2) + 1):
        d = 2 * a + 1
        if macmahon(d, d, d) > 10 ** 6:
            break
        h = hexagon_graph(d, d, d)
        yield Check(f"|N({d},{d},{d})_1,-1| = 2 N_P({a},{a},{a})^2",
                    abs(scheme_weighted_sum(h, CubeWeightScheme.strange_n(1, -1))),
                    2 * count_matchings_brute(penrose_graph(a, a, a), BIG_BUDGET) ** 2)
    for a in range(1, max(1, n // 2) + 1):
        h = hexagon_graph(2 * a, 2 * a, 2 * a)
        if h.graph.vertex_count > BIG_BUDGET.max_vertices:
            break
        yield Check(f"|strangeN(-1,1) on ({2*a},{2*a},{2*a})| = N5^2",
                    abs(scheme_weighted_sum(h, CubeWeightScheme.strange_n(-1, 1))),
                    _invariant(2 * a, ["complement"]) ** 2)
        yield Check(f"|strange3(-1,1,1) on ({2*a},{2*a},{2*a})| = N9^2",
                    abs(scheme_weighted_sum(h, CubeWeightScheme.strange3(-1, 1, 1))),
                    _invariant(2 * a, ["cyclic", "complement"]) ** 2)


def suite_icosahedral_endpoints(n: int) -> Iterator[Check]:
    yield Check("icosahedron matchings", count_matchings(icosahedron()), 125)
    d = dodecahedron()
    yield Check("dodecahedron |Pf|", abs(pfaffian(signed_adjacency_matrix(d, flat_orientation(d)))), 36)
    yield Check("dodecahedron edge graph", count_matchings(edge_graph(d)), 2 ** 11)
    yield Check("dodecahedron edge graph GF(2)", power_of_two_count(d), 2 ** 11)
    c60 = truncated_icosahedron(pentagon_weight=Q)
    reference = frozenset(range(60, 90))
    value = weighted_matching_sum(c60, reference=reference)
    yield Check("C60 pentagon polynomial", value, TESLER_PENTAGON_POLYNOMIAL)
    yield Check("C60 at 1", evaluate(value, 1), 12500)
    m = signed_adjacency_matrix(c60, flat_orientation(c60), c60.weights)
    yield Check("C60 interpolated Pf = direct Pf", pfaffian_interpolated(m), pfaffian(m))


SUITES: Dict[str, Tuple[Callable[[int], Iterator[Check]], int]] = {
    "macmahon": (suite_macmahon, 4),
    "qmacmahon": (suite_qmacmahon, 3),
    "loops": (suite_loops, 2),
    "antipodal": (suite_antipodal, 0),
    "power2": (suite_power2, 8),
    "ising": (suite_ising, 12),
    "gv": (suite_gv, 3),
    "cokernel-carlitz": (suite_cokernel_carlitz, 3),
    "identities": (suite_identities, 2),
    "icosahedral-endpoints": (suite_icosahedral_endpoints, 0),
}


def run_suite(name: str, size: int, emit: Callable[[str], None], timing: bool = True) -> bool:
    """Run one suite, emitting a line per check; True when every check passed."""
    fn, _ = SUITES[name]
    ok = True
    checks = fn(size)
    while True:
        start = time.perf_counter()
        try:
            check = next(checks)
        except StopIteration:
            break
        elapsed = time.perf_counter() - start
        ok &= check.passed
        line = f"{'PASS' if check.passed else 'FAIL'} {check.label}: {_text(check.left)} vs {_text(check.right)}"
        if timing:
            line += f" [{elapsed * 1000:.0f} ms]"
        emit(line)
    return ok
