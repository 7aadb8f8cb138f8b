"""Small named embedded graphs, with rotations read off coordinates."""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import cmp_to_key
from typing import Dict, List, Optional, Sequence, Tuple

from .embedded import EmbeddedGraph, Edge, bipartite_coloring, quotient_by_free_automorphism, validate

__all__ = [
    "planar_embedding",
    "surface_embedding",
    "cycle",
    "path",
    "triangle",
    "double_triangle",
    "tetrahedron",
    "cube",
    "octahedron",
    "icosahedron",
    "dodecahedron",
    "truncated_icosahedron",
    "rubik",
    "k4_projective",
    "antipodal_map",
    "cube_points",
    "rubik_points",
]

PHI = (1 + math.sqrt(5)) / 2


def _half_edges_at(n: int, edges: Sequence[Tuple[int, int]]) -> List[List[int]]:
    at: List[List[int]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        at[u].append(2 * e)
        at[v].append(2 * e + 1)
    return at


def _finish(n, edges, rotation, weights, colored, name) -> EmbeddedGraph:
    ws = weights if weights is not None else [1] * len(edges)
    g = EmbeddedGraph.build(n, [Edge(u, v, w) for (u, v), w in zip(edges, ws)], rotation, name=name)
    if colored:
        g = g.with_colors(bipartite_coloring(g))
    validate(g)
    return g


def planar_embedding(points: Sequence[Tuple], edges: Sequence[Tuple[int, int]],
                     weights: Optional[Sequence] = None, colored: bool = False,
                     name: str = "") -> EmbeddedGraph:
    """Straight-line plane drawing -> rotation system (counterclockwise, exact)."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    ends = [(u, v) for u, v in edges]

    def direction(h):
        e = ends[h >> 1]
        a, b = (e[1], e[0]) if h & 1 else e
        return pts[b][0] - pts[a][0], pts[b][1] - pts[a][1]

    def half(d):
        x, y = d
        return 0 if (y > 0 or (y == 0 and x > 0)) else 1

    def cmp(h1, h2):
        d1, d2 = direction(h1), direction(h2)
        a, b = half(d1), half(d2)
        if a != b:
            return a - b
        cross = d1[0] * d2[1] - d1[1] * d2[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    rotation = [sorted(hs, key=cmp_to_key(cmp)) for hs in _half_edges_at(len(pts), ends)]
    return _finish(len(pts), ends, rotation, weights, colored, name)


def surface_embedding(points: Sequence[Tuple[float, float, float]], edges: Sequence[Tuple[int, int]],
                      weights: Optional[Sequence] = None, colored: bool = False,
                      name: str = "") -> EmbeddedGraph:
    """Graph drawn on a surface star-shaped about the origin; counterclockwise seen from outside."""
    pts = [tuple(float(c) for c in p) for p in points]
    rotation = []
    for v, hs in enumerate(_half_edges_at(len(pts), edges)):
        n = pts[v]
        norm = math.sqrt(sum(c * c for c in n))
        n = tuple(c / norm for c in n)
        helper = (1.0, 0.0, 0.0) if abs(n[0]) < 0.9 else (0.0, 1.0, 0.0)
        e1 = _unit(_cross(helper, n))
        e2 = _cross(n, e1)

        def angle(h):
            u, w = edges[h >> 1]
            other = w if not h & 1 else u
            d = tuple(a - b for a, b in zip(pts[other], pts[v]))
            return math.atan2(_dot(d, e2), _dot(d, e1))

        rotation.append(sorted(hs, key=angle))
    return _finish(len(pts), list(edges), rotation, weights, colored, name)


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _unit(a):
    n = math.sqrt(_dot(a, a))
    return tuple(x / n for x in a)


def _nearest_pairs(points, tol=1e-9) -> List[Tuple[int, int]]:
    best = min(math.dist(p, q) for p, q in itertools.combinations(points, 2))
    return [(i, j) for (i, p), (j, q) in itertools.combinations(enumerate(points), 2)
            if abs(math.dist(p, q) - best) < tol]


def _cyclic_perms(p):
    x, y, z = p
    return [(x, y, z), (y, z, x), (z, x, y)]


# -- planar families ----------------------------------------------------------

def cycle(n: int, weights: Optional[Sequence] = None) -> EmbeddedGraph:
    pts = [(Fraction(round(1000 * math.cos(2 * math.pi * k / n))), Fraction(round(1000 * math.sin(2 * math.pi * k / n))))
           for k in range(n)]
    edges = [(k, (k + 1) % n) for k in range(n)]
    return planar_embedding(pts, edges, weights, colored=n % 2 == 0, name=f"cycle{n}")


def path(n: int, weights: Optional[Sequence] = None) -> EmbeddedGraph:
    return planar_embedding([(k, 0) for k in range(n)], [(k, k + 1) for k in range(n - 1)],
                            weights, colored=True, name=f"path{n}")


def triangle() -> EmbeddedGraph:
    return cycle(3)


def double_triangle() -> EmbeddedGraph:
    """Two triangles glued along an edge (4 vertices, 5 edges)."""
    pts = [(0, 0), (2, 0), (1, 1), (1, -1)]
    return planar_embedding(pts, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1)], name="double_triangle")


# -- polyhedra ------------------------------------------------------------------

def tetrahedron() -> EmbeddedGraph:
    pts = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    return surface_embedding(pts, _nearest_pairs(pts), name="tetrahedron")


def cube() -> EmbeddedGraph:
    pts = list(itertools.product((-1, 1), repeat=3))
    return surface_embedding(pts, _nearest_pairs(pts), colored=True, name="cube")


def octahedron() -> EmbeddedGraph:
    pts = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    return surface_embedding(pts, _nearest_pairs(pts), name="octahedron")


def _icosahedron_points():
    pts = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            pts.extend(_cyclic_perms((0, s1, s2 * PHI)))
    return pts


def icosahedron() -> EmbeddedGraph:
    pts = _icosahedron_points()
    return surface_embedding(pts, _nearest_pairs(pts), name="icosahedron")


def dodecahedron() -> EmbeddedGraph:
    pts = list(itertools.product((-1, 1), repeat=3))
    for s1 in (1, -1):
        for s2 in (1, -1):
            pts.extend(_cyclic_perms((0, s1 / PHI, s2 * PHI)))
    return surface_embedding(pts, _nearest_pairs(pts), name="dodecahedron")


def truncated_icosahedron(pentagon_weight=1, hexagon_weight=1) -> EmbeddedGraph:
    """C60: pentagon edges get ``pentagon_weight``, edges between pentagons ``hexagon_weight``."""
    ico = icosahedron()
    pts3 = _icosahedron_points()
    index: Dict[Tuple[int, int], int] = {}
    points = []
    for v in range(ico.vertex_count):
        for n in ico.neighbors(v):
            index[(v, n)] = len(points)
            points.append(tuple(a + (b - a) / 3 for a, b in zip(pts3[v], pts3[n])))
    edges, weights = [], []
    for v in range(ico.vertex_count):
        nbrs = ico.neighbors(v)
        for i, n in enumerate(nbrs):
            edges.append((index[(v, n)], index[(v, nbrs[(i + 1) % len(nbrs)])]))
            weights.append(pentagon_weight)
    for e in ico.edges:
        edges.append((index[(e.u, e.v)], index[(e.v, e.u)]))
        weights.append(hexagon_weight)
    return surface_embedding(points, edges, weights, name="c60")


def rubik() -> EmbeddedGraph:
    """Surface grid of a 3x3x3 cube: 56 vertices, 108 edges, 54 square faces."""
    pts = [p for p in itertools.product(range(4), repeat=3) if any(c in (0, 3) for c in p)]
    index = {p: i for i, p in enumerate(pts)}
    edges = []
    for p in pts:
        for axis in range(3):
            q = list(p)
            q[axis] += 1
            q = tuple(q)
            if q in index:
                edges.append((index[p], index[q]))
    centered = [tuple(c - 1.5 for c in p) for p in pts]
    return surface_embedding(centered, edges, colored=True, name="rubik")


def antipodal_map(g_points: Sequence[Tuple]) -> List[int]:
    """Vertex permutation sending each point to its negative."""
    index = {tuple(round(c, 9) for c in p): i for i, p in enumerate(g_points)}
    return [index[tuple(round(-c, 9) + 0.0 for c in p)] for p in g_points]


def cube_points() -> List[Tuple[int, int, int]]:
    return list(itertools.product((-1, 1), repeat=3))


def rubik_points() -> List[Tuple[float, float, float]]:
    return [tuple(c - 1.5 for c in p) for p in itertools.product(range(4), repeat=3)
            if any(c in (0, 3) for c in p)]


def k4_projective() -> EmbeddedGraph:
    """K4 on the projective plane: the cube modulo its antipodal map."""
    return quotient_by_free_automorphism(cube(), antipodal_map(cube_points()), 2)
