"""Determinant-preserving surgery on embedded graphs, and reductions to matchings.

Determinants of graphs are only defined up to the sign fixed by ordering the
vertices, so every "preserves det" statement here means equality up to sign.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .embedded import (BLACK, WHITE, EmbeddedGraph, EmbeddingError, Edge, components, dual_graph,
                       edge_graph, validate)
from .kasteleyn import (coloring_of, flat_orientation, kasteleyn_matrix, matching_term,
                        weighted_matching_sum)
from .laurent import RingElement, normalize
from .linalg import Matrix, det, gf2_affine_solve, pivot_with_sign
from .polyhedra import planar_embedding

__all__ = [
    "Drawing",
    "PathNetwork",
    "bipartite_det",
    "drawing_det",
    "split_vertex",
    "triple_edge",
    "triangulate",
    "find_crossings",
    "butterfly_planarize",
    "gv_split",
    "gv_matrix",
    "gv_kasteleyn_matrix",
    "gv_pivot_chain",
    "carlitz_network",
    "random_grid_network",
    "random_drawing",
    "IsingReduction",
    "ising_reduce",
    "ising_partition_function",
    "power_of_two_count",
]


def _other(color: str) -> str:
    return WHITE if color == BLACK else BLACK


def bipartite_det(g: EmbeddedGraph) -> RingElement:
    """det of the black-by-white matrix carrying the edge weights as stored."""
    colors = coloring_of(g)
    if colors is None:
        raise ValueError("graph is not bipartite")
    m, blacks, whites = kasteleyn_matrix(g, g.weights, colors)
    if len(blacks) != len(whites):
        return 0
    return det(m)


def _replace_half(rotation: List[List[int]], v: int, old: int, new: int) -> None:
    rot = rotation[v]
    rot[rot.index(old)] = new


def split_vertex(g: EmbeddedGraph, v: int, cut: int, unit: RingElement = 1) -> EmbeddedGraph:
    """Replace ``v`` by a path of three vertices, multiplying det by +-``unit``.

    The first ``cut`` half-edges of the rotation at ``v`` stay at ``v``; the
    rest move to a new vertex of the same color.  A middle vertex of the
    other color joins them through edges weighted ``unit`` and ``-unit``.
    """
    colors = coloring_of(g)
    if colors is None:
        raise ValueError("split_vertex needs a bipartite graph")
    rot = list(g.rotation[v])
    if not 0 <= cut <= len(rot):
        raise ValueError(f"cut {cut} outside the rotation of vertex {v}")
    n, ne = g.vertex_count, len(g.edges)
    mid, far = n, n + 1
    edges = list(g.edges) + [Edge(v, mid, normalize(unit)), Edge(mid, far, normalize(-unit))]
    moved = rot[cut:]
    for h in moved:
        e = h >> 1
        edges[e] = Edge(far, edges[e].v, edges[e].weight, edges[e].sign) if h & 1 == 0 else \
            Edge(edges[e].u, far, edges[e].weight, edges[e].sign)
    rotation = [list(r) for r in g.rotation]
    rotation[v] = rot[:cut] + [2 * ne]
    rotation.append([2 * ne + 1, 2 * ne + 2])
    rotation.append([2 * ne + 3] + moved)
    out = EmbeddedGraph.build(n + 2, edges, rotation, list(colors) + [_other(colors[v]), colors[v]],
                              name=g.name)
    validate(out)
    return out


def triple_edge(g: EmbeddedGraph, e: int, first: RingElement, last: RingElement) -> EmbeddedGraph:
    """Replace edge ``e`` by three edges in series weighted ``first``, -1, ``last``.

    Requires ``first * last`` to equal the weight of ``e``; det is unchanged up
    to sign.  The first piece keeps index ``e``.
    """
    colors = coloring_of(g)
    if colors is None:
        raise ValueError("triple_edge needs a bipartite graph")
    ed = g.edges[e]
    if normalize(first * last) != normalize(ed.weight):
        raise ValueError(f"{first} * {last} is not the weight {ed.weight} of edge {e}")
    n, ne = g.vertex_count, len(g.edges)
    x, y = n, n + 1
    edges = list(g.edges)
    edges[e] = Edge(ed.u, x, normalize(first), ed.sign)
    edges += [Edge(x, y, -1), Edge(y, ed.v, normalize(last))]
    rotation = [list(r) for r in g.rotation]
    _replace_half(rotation, ed.v, 2 * e + 1, 2 * (ne + 1) + 1)
    rotation.append([2 * e + 1, 2 * ne])
    rotation.append([2 * ne + 1, 2 * (ne + 1)])
    out = EmbeddedGraph.build(n + 2, edges, rotation,
                              list(colors) + [_other(colors[ed.u]), colors[ed.u]], name=g.name)
    validate(out)
    return out


def triangulate(g: EmbeddedGraph, agree: RingElement = 1, disagree: RingElement = 1
                ) -> Tuple[EmbeddedGraph, List[RingElement], List[RingElement]]:
    """Add fan diagonals until every face of a sphere graph is a triangle.

    Returns the new graph and per-edge Ising weight lists in which the added
    diagonals carry ``agree``/``disagree`` (1, 1 makes them ignorable).
    Existing edges get weight 1 in both lists; callers overwrite them.
    """
    if validate(g) != "sphere" or any(e.sign != 1 for e in g.edges):
        raise EmbeddingError("triangulate needs an oriented sphere graph")
    if len(components(g)) != 1:
        raise EmbeddingError("triangulate needs a connected graph")
    edges = list(g.edges)
    rotation = [list(r) for r in g.rotation]
    adjacent = {frozenset((ed.u, ed.v)) for ed in edges}
    for face in g.faces:
        hs = [h for h, _ in face.sides]
        k = len(hs)
        if k <= 3:
            continue
        verts = [g.vertex_of(h) for h in hs]
        if len(set(verts)) != k:
            raise EmbeddingError("face with a repeated vertex cannot be fanned")
        start = next((s for s in range(k)
                      if all(frozenset((verts[s], verts[(s + j) % k])) not in adjacent
                             for j in range(2, k - 1))), 0)
        hs = hs[start:] + hs[:start]
        verts = verts[start:] + verts[:start]
        apex = verts[0]
        new_at_apex = []
        for j in range(2, k - 1):
            e = len(edges)
            edges.append(Edge(apex, verts[j], 1))
            adjacent.add(frozenset((apex, verts[j])))
            new_at_apex.append(2 * e)
            # corner of the face at verts[j] sits just after the arriving half-edge
            r = rotation[verts[j]]
            r.insert(r.index(hs[j - 1] ^ 1) + 1, 2 * e + 1)
        r = rotation[apex]
        r[r.index(hs[-1] ^ 1) + 1:r.index(hs[-1] ^ 1) + 1] = list(reversed(new_at_apex))
    out = EmbeddedGraph.build(g.vertex_count, edges, rotation, name=g.name)
    validate(out)
    if any(len(f) != 3 for f in out.faces):
        raise EmbeddingError("triangulation failed")
    added = len(edges) - len(g.edges)
    return out, [1] * len(g.edges) + [agree] * added, [1] * len(g.edges) + [disagree] * added


# -- drawings and the butterfly ---------------------------------------------------

Point = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Drawing:
    """Straight-line drawing of a bipartite graph; edges may cross."""

    points: Tuple[Point, ...]
    edges: Tuple[Tuple[int, int, RingElement], ...]
    colors: Optional[Tuple[str, ...]] = None

    @classmethod
    def build(cls, points, edges, colors=None) -> "Drawing":
        pts = tuple((Fraction(x), Fraction(y)) for x, y in points)
        es = tuple((u, v, normalize(rest[0] if rest else 1)) for u, v, *rest in edges)
        return cls(pts, es, tuple(colors) if colors is not None else None)

    def coloring(self) -> Tuple[str, ...]:
        if self.colors is not None:
            return self.colors
        n = len(self.points)
        color: List[Optional[str]] = [None] * n
        nbrs: List[List[int]] = [[] for _ in range(n)]
        for u, v, _ in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        for s in range(n):
            if color[s] is not None:
                continue
            color[s] = BLACK
            stack = [s]
            while stack:
                x = stack.pop()
                for y in nbrs[x]:
                    if color[y] is None:
                        color[y] = _other(color[x])
                        stack.append(y)
                    elif color[y] == color[x]:
                        raise ValueError("drawing is not bipartite")
        return tuple(color)  # type: ignore[arg-type]


def drawing_det(d: Drawing) -> RingElement:
    """det of the drawn graph's black-by-white weighted matrix."""
    colors = d.coloring()
    blacks = [v for v, c in enumerate(colors) if c == BLACK]
    whites = [v for v, c in enumerate(colors) if c != BLACK]
    if len(blacks) != len(whites):
        return 0
    row = {v: i for i, v in enumerate(blacks)}
    col = {v: j for j, v in enumerate(whites)}
    m: Matrix = [[0] * len(whites) for _ in blacks]
    for u, v, w in d.edges:
        b, x = (u, v) if colors[u] == BLACK else (v, u)
        m[row[b]][col[x]] = normalize(m[row[b]][col[x]] + w)
    return det(m)


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    return _cross(a, b, p) == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) \
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _segment_crossing(a: Point, b: Point, c: Point, d: Point) -> Optional[Fraction]:
    """Parameter along ``ab`` of a proper interior crossing with ``cd``.

    Returns None when the segments are disjoint or meet only at a shared
    endpoint; raises for touching, overlapping or passing through a vertex.
    """
    shared = {a, b} & {c, d}
    d1, d2 = _cross(c, d, a), _cross(c, d, b)
    d3, d4 = _cross(a, b, c), _cross(a, b, d)
    if shared:
        if d1 == d2 == d3 == d4 == 0:
            other_ab = b if a in shared else a
            other_cd = d if c in shared else c
            if _on_segment(other_ab, c, d) or _on_segment(other_cd, a, b):
                raise ValueError("collinear edges overlap")
        return None
    if (d1 > 0) != (d2 > 0) and (d3 > 0) != (d4 > 0) and 0 not in (d1, d2, d3, d4):
        return d1 / (d1 - d2)
    for p, s, t in ((a, c, d), (b, c, d), (c, a, b), (d, a, b)):
        if _on_segment(p, s, t):
            raise ValueError("an edge passes through a vertex or edges overlap")
    return None


def find_crossings(d: Drawing) -> List[Tuple[int, int, Fraction, Fraction]]:
    """All crossing pairs ``(e, f, t_e, t_f)`` with parameters along each edge."""
    pts = d.points
    out = []
    for e, (u, v, _) in enumerate(d.edges):
        for f in range(e + 1, len(d.edges)):
            x, y, _ = d.edges[f]
            t = _segment_crossing(pts[u], pts[v], pts[x], pts[y])
            if t is not None:
                s = _segment_crossing(pts[x], pts[y], pts[u], pts[v])
                out.append((e, f, t, s))
    points = {}
    for e, f, t, _ in out:
        u, v, _ = d.edges[e]
        p = (pts[u][0] + t * (pts[v][0] - pts[u][0]), pts[u][1] + t * (pts[v][1] - pts[u][1]))
        if p in points:
            raise ValueError("three edges cross at one point; perturb the drawing")
        points[p] = (e, f)
    return out


def _lerp(a: Point, b: Point, t: Fraction) -> Point:
    return a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])


def _planarize_once(d: Drawing, shrink: Fraction):
    colors = list(d.coloring())
    pts = list(d.points)
    crossings = find_crossings(d)
    at: Dict[int, List[Tuple[Fraction, int]]] = {}
    for k, (e, f, t, s) in enumerate(crossings):
        at.setdefault(e, []).append((t, k))
        at.setdefault(f, []).append((s, k))
    edges: List[Tuple[int, int, RingElement]] = []
    middle: Dict[Tuple[int, int], int] = {}
    for e, (u, v, w) in enumerate(d.edges):
        marks = sorted(at.get(e, []))
        if not marks:
            edges.append((u, v, w))
            continue
        ts = [Fraction(0)] + [t for t, _ in marks] + [Fraction(1)]
        gap = min(b - a for a, b in zip(ts, ts[1:]))
        eps = gap * shrink
        prev, weight = u, w
        for t, k in marks:
            # triple the remaining stretch: weight, then -1 across the crossing, then 1
            a_pt, b_pt = len(pts), len(pts) + 1
            pts += [_lerp(d.points[u], d.points[v], t - eps), _lerp(d.points[u], d.points[v], t + eps)]
            colors += [_other(colors[prev]), colors[prev]]
            edges.append((prev, a_pt, weight))
            middle[(k, e)] = len(edges)
            edges.append((a_pt, b_pt, -1))
            prev, weight = b_pt, 1
        edges.append((prev, v, weight))
    drop = set()
    for k, (e, f, _, _) in enumerate(crossings):
        p_idx, r_idx = middle[(k, e)], middle[(k, f)]
        drop |= {p_idx, r_idx}
        (p1, p2, wp), (r1, r2, wr) = edges[p_idx], edges[r_idx]
        pb, pw = (p1, p2) if colors[p1] == BLACK else (p2, p1)
        rb, rw = (r1, r2) if colors[r1] == BLACK else (r2, r1)
        x = _lerp(pts[p1], pts[p2], Fraction(1, 2))
        if _cross(x, pts[pb], pts[rw]) > 0:
            a1, a4, a3, a2, w1, w2 = pb, rw, pw, rb, wp, wr
        else:
            a1, a4, a3, a2, w1, w2 = rb, pw, rw, pb, wr, wp
        b1, b2 = len(pts), len(pts) + 1
        pts += [((x[0] + pts[a1][0] + pts[a2][0]) / 3, (x[1] + pts[a1][1] + pts[a2][1]) / 3),
                ((x[0] + pts[a3][0] + pts[a4][0]) / 3, (x[1] + pts[a3][1] + pts[a4][1]) / 3)]
        colors += [WHITE, BLACK]
        edges += [(a1, b1, w1), (a2, b1, w2), (a1, a4, normalize(-w1)), (a2, a3, normalize(-w2)),
                  (b1, b2, -1), (b2, a4, 1), (b2, a3, 1)]
    kept = [ed for i, ed in enumerate(edges) if i not in drop]
    return Drawing(tuple(pts), tuple(kept), tuple(colors))


def butterfly_planarize(d: Drawing, attempts: int = 12) -> EmbeddedGraph:
    """Remove every crossing with a butterfly gadget; det is kept up to sign.

    Each crossing edge is first tripled so that a short middle piece carries
    the crossing; the two middle pieces are then replaced by seven edges.
    """
    colors = d.coloring()
    if not find_crossings(d):
        planar = d
    else:
        shrink = Fraction(1, 4)
        for _ in range(attempts):
            planar = _planarize_once(d, shrink)
            if not find_crossings(planar):
                break
            shrink /= 4
        else:
            raise ValueError("could not separate crossings; perturb the drawing")
        colors = planar.colors
    g = planar_embedding(planar.points, [(u, v) for u, v, _ in planar.edges],
                         [w for _, _, w in planar.edges], name="butterfly")
    g = g.with_colors(colors)
    validate(g)
    return g


def random_drawing(rng: random.Random, blacks: int, whites: int, edge_count: int,
                   weights: Sequence[RingElement] = (1, -1, 2)) -> Drawing:
    """Random bipartite drawing in general position, with rational coordinates."""
    n = blacks + whites
    scale = 10 ** 6
    points = [(Fraction(rng.randrange(scale), scale), Fraction(rng.randrange(scale), scale)) for _ in range(n)]
    pairs = [(b, blacks + w) for b in range(blacks) for w in range(whites)]
    chosen = rng.sample(pairs, min(edge_count, len(pairs)))
    edges = [(u, v, rng.choice(list(weights))) for u, v in sorted(chosen)]
    colors = [BLACK] * blacks + [WHITE] * whites
    return Drawing.build(points, edges, colors)


# -- Gessel-Viennot ----------------------------------------------------------------

@dataclass(frozen=True)
class PathNetwork:
    """Plane directed graph with univalent sources and sinks.

    Arc ``a`` runs ``arcs[a][0] -> arcs[a][1]``; its half-edges are ``2a`` at
    the tail and ``2a + 1`` at the head, listed counterclockwise in ``rotation``.
    """

    vertex_count: int
    arcs: Tuple[Tuple[int, int, RingElement], ...]
    sources: Tuple[int, ...]
    sinks: Tuple[int, ...]
    rotation: Tuple[Tuple[int, ...], ...]
    points: Optional[Tuple[Point, ...]] = field(default=None, compare=False)

    @classmethod
    def from_points(cls, points, arcs, sources, sinks) -> "PathNetwork":
        """Rotation read off a straight-line drawing with rational coordinates."""
        arcs = tuple((t, h, normalize(rest[0] if rest else 1)) for t, h, *rest in arcs)
        g = planar_embedding(points, [(t, h) for t, h, _ in arcs])
        pts = tuple((Fraction(x), Fraction(y)) for x, y in points)
        return cls(len(pts), arcs, tuple(sources), tuple(sinks), g.rotation, pts)

    def check(self) -> None:
        """Raise ``ValueError`` unless acyclic, sources/sinks univalent and rotations segregated."""
        if len(self.sources) != len(self.sinks):
            raise ValueError("sources and sinks differ in number")
        indeg = [0] * self.vertex_count
        outdeg = [0] * self.vertex_count
        for t, h, _ in self.arcs:
            outdeg[t] += 1
            indeg[h] += 1
        for s in self.sources:
            if (indeg[s], outdeg[s]) != (0, 1):
                raise ValueError(f"source {s} must have one outgoing arc and none incoming")
        for s in self.sinks:
            if (indeg[s], outdeg[s]) != (1, 0):
                raise ValueError(f"sink {s} must have one incoming arc and none outgoing")
        for v, rot in enumerate(self.rotation):
            kinds = [h & 1 for h in rot]
            changes = sum(1 for i in range(len(kinds)) if kinds[i] != kinds[i - 1])
            if changes > 2:
                raise ValueError(f"arcs at vertex {v} are not segregated")
        as_graph = EmbeddedGraph.build(self.vertex_count, [(t, h) for t, h, _ in self.arcs], self.rotation)
        validate(as_graph)
        if as_graph.surface != "sphere":
            raise ValueError("network is not planar")
        self.topological_order()

    def topological_order(self) -> List[int]:
        out: List[List[int]] = [[] for _ in range(self.vertex_count)]
        indeg = [0] * self.vertex_count
        for t, h, _ in self.arcs:
            out[t].append(h)
            indeg[h] += 1
        ready = [v for v in range(self.vertex_count) if indeg[v] == 0]
        order = []
        while ready:
            v = ready.pop()
            order.append(v)
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
        if len(order) != self.vertex_count:
            raise ValueError("network has a directed cycle")
        return order


def gv_matrix(p: PathNetwork) -> Matrix:
    """Weighted path counts from each source (row) to each sink (column)."""
    order = p.topological_order()
    out: List[List[Tuple[int, RingElement]]] = [[] for _ in range(p.vertex_count)]
    for t, h, w in p.arcs:
        out[t].append((h, w))
    rows = []
    for s in p.sources:
        paths: List[RingElement] = [0] * p.vertex_count
        paths[s] = 1
        for v in order:
            if paths[v] != 0:
                for w_, wt in out[v]:
                    paths[w_] = normalize(paths[w_] + paths[v] * wt)
        rows.append([paths[t] for t in p.sinks])
    return rows


@dataclass(frozen=True)
class _Split:
    graph: EmbeddedGraph
    in_node: Dict[int, int]
    out_node: Dict[int, int]
    split_edge: Dict[int, int]


def _gv_split(p: PathNetwork) -> _Split:
    p.check()
    sources, sinks = set(p.sources), set(p.sinks)
    in_node: Dict[int, int] = {}
    out_node: Dict[int, int] = {}
    colors: List[str] = []
    for v in range(p.vertex_count):
        if v not in sources:
            in_node[v] = len(colors)
            colors.append(WHITE)
        if v not in sinks:
            out_node[v] = len(colors)
            colors.append(BLACK)
    edges = [Edge(out_node[t], in_node[h], w) for t, h, w in p.arcs]
    rotation: List[List[int]] = [[] for _ in colors]
    split_edge: Dict[int, int] = {}
    for v, rot in enumerate(p.rotation):
        if v in sources or v in sinks:
            rotation[out_node[v] if v in sources else in_node[v]] = list(rot)
            continue
        rot = list(rot)
        if rot and any(h & 1 for h in rot) and any(not h & 1 for h in rot):
            k = next(i for i in range(len(rot)) if rot[i] & 1 and not rot[i - 1] & 1)
            rot = rot[k:] + rot[:k]
        ins = [h for h in rot if h & 1]
        outs = [h for h in rot if not h & 1]
        s = len(edges)
        split_edge[v] = s
        edges.append(Edge(in_node[v], out_node[v], -1))
        rotation[in_node[v]] = ins + [2 * s]
        rotation[out_node[v]] = [2 * s + 1] + outs
    g = EmbeddedGraph.build(len(colors), edges, rotation, colors, name="gv-split")
    validate(g)
    return _Split(g, in_node, out_node, split_edge)


def gv_split(p: PathNetwork) -> EmbeddedGraph:
    """Split every inner vertex into an edge (weight -1) from its in-end to its out-end.

    Perfect matchings of the result correspond to systems of vertex-disjoint
    paths; arcs become edges with the same index and weight.
    """
    return _gv_split(p).graph


def gv_kasteleyn_matrix(p: PathNetwork) -> Tuple[Matrix, List[int], List[int]]:
    """Black-by-white matrix of ``gv_split(p)`` with the stored weights."""
    g = gv_split(p)
    return kasteleyn_matrix(g, g.weights, g.colors)


def gv_pivot_chain(p: PathNetwork) -> Tuple[Matrix, RingElement]:
    """Pivot the split-graph matrix on every split edge.

    Returns ``(m, s)`` with ``det(split matrix) == s * det(m)``; rows of ``m``
    follow ``p.sources`` and columns ``p.sinks``, and ``m`` equals ``gv_matrix(p)``.
    """
    sp = _gv_split(p)
    m, blacks, whites = kasteleyn_matrix(sp.graph, sp.graph.weights, sp.graph.colors)
    factor: RingElement = 1
    for v in sorted(sp.split_edge):
        r, c = blacks.index(sp.out_node[v]), whites.index(sp.in_node[v])
        m, s = pivot_with_sign(m, r, c)
        factor = normalize(factor * s)
        del blacks[r]
        del whites[c]
    rperm = [blacks.index(sp.out_node[s]) for s in p.sources]
    cperm = [whites.index(sp.in_node[t]) for t in p.sinks]
    factor = normalize(factor * _perm_sign(rperm) * _perm_sign(cperm))
    return [[m[i][j] for j in cperm] for i in rperm], factor


def _perm_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length and length % 2 == 0:
            sign = -sign
    return sign


def carlitz_network(a: int, b: int, c: int) -> PathNetwork:
    """Lattice paths for plane partitions in an ``a x b x c`` box.

    Path ``i`` runs by unit east and north steps from ``(-i, i)`` to
    ``(b - i, c + i)``; pendant arcs make sources and sinks univalent.  The
    path-count matrix has entries ``binom(b + c, b - j + i)``.
    """
    if min(a, b, c) < 0:
        raise ValueError("box sides must be nonnegative")
    starts = [(-i, i) for i in range(a)]
    ends = [(b - j, c + j) for j in range(a)]
    grid = set()
    for i in range(a):
        for j in range(a):
            (x0, y0), (x1, y1) = starts[i], ends[j]
            if x1 >= x0 and y1 >= y0:
                grid |= {(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)}
    grid_list = sorted(grid)
    index = {pt: k for k, pt in enumerate(grid_list)}
    points: List[Tuple] = list(grid_list)
    arcs = []
    for (x, y) in grid_list:
        for q in ((x + 1, y), (x, y + 1)):
            if q in index:
                arcs.append((index[(x, y)], index[q]))
    sources, sinks = [], []
    for x, y in starts:
        sources.append(len(points))
        points.append((Fraction(2 * x - 1, 2), Fraction(2 * y - 1, 2)))
        arcs.append((sources[-1], index[(x, y)]))
    for x, y in ends:
        sinks.append(len(points))
        points.append((Fraction(2 * x + 1, 2), Fraction(2 * y + 1, 2)))
        arcs.append((index[(x, y)], sinks[-1]))
    return PathNetwork.from_points(points, arcs, sources, sinks)


def random_grid_network(rng: random.Random, width: int, height: int, count: int,
                        density: float = 0.8) -> PathNetwork:
    """Random east/north arcs on a grid, sources on the left edge and sinks on the right."""
    if count > height:
        raise ValueError("more paths than rows")
    points: List[Tuple] = [(x, y) for x in range(width) for y in range(height)]
    index = {pt: k for k, pt in enumerate(points)}
    arcs = []
    for (x, y) in list(index):
        for q in ((x + 1, y), (x, y + 1)):
            if q in index and rng.random() < density:
                arcs.append((index[(x, y)], index[q]))
    rows_in = sorted(rng.sample(range(height), count))
    rows_out = sorted(rng.sample(range(height), count))
    sources, sinks = [], []
    for y in rows_in:
        sources.append(len(points))
        points.append((-1, y))
        arcs.append((sources[-1], index[(0, y)]))
    for y in rows_out:
        sinks.append(len(points))
        points.append((width, y))
        arcs.append((index[(width - 1, y)], sinks[-1]))
    return PathNetwork.from_points(points, arcs, sources, sinks)


# -- Ising model ---------------------------------------------------------------------

@dataclass(frozen=True)
class IsingReduction:
    """Matching graph whose weighted count gives an Ising partition function.

    The partition function is ``2 * scale * weighted_matching_sum(graph)``;
    ``reference`` (all connector edges) is the state where every spin agrees.
    """

    graph: EmbeddedGraph
    reference: frozenset
    scale: int


def ising_reduce(g: EmbeddedGraph, agree: Sequence[RingElement],
                 disagree: Sequence[RingElement]) -> IsingReduction:
    """Build the edge graph of the subdivided dual of a triangulated sphere graph.

    Its vertices are the half-edges of ``g``: one triangle per face of ``g``
    and one connector per edge.  A state maps to the matching that uses the
    connector of every edge whose spins agree; each face then has one or three
    connectors and covers the rest with one triangle edge.  Each disagreeing
    edge's weight is charged to the triangle on the side of its first half-edge.
    """
    if validate(g) != "sphere":
        raise EmbeddingError("Ising reduction needs a sphere graph")
    if any(e.sign != 1 for e in g.edges):
        raise EmbeddingError("Ising reduction needs an oriented embedding")
    if any(len(f) != 3 for f in g.faces):
        raise ValueError("every face must be a triangle; see triangulate()")
    if len(agree) != len(g.edges) or len(disagree) != len(g.edges):
        raise ValueError("one (agree, disagree) pair per edge required")
    line = edge_graph(dual_graph(g, midpoints=True))
    weights = []
    reference = set()
    for k, ed in enumerate(line.edges):
        i, j = ed.u, ed.v
        if i >> 1 == j >> 1:
            weights.append(agree[i >> 1])
            reference.add(k)
        else:
            w: RingElement = 1
            for x in (i, j):
                if x % 2 == 0:
                    w = w * disagree[x >> 1]
            weights.append(normalize(w))
    line = line.with_weights(weights)
    reference = frozenset(reference)
    scale = matching_term(line, reference, [1] * len(line.edges), orientation=flat_orientation(line))
    return IsingReduction(line, reference, scale)


def ising_partition_function(g: EmbeddedGraph, agree: Sequence[RingElement],
                             disagree: Sequence[RingElement]) -> RingElement:
    """Sum over spin states of the edge-weight product, through one Pfaffian."""
    if g.vertex_count == 0:
        return 1
    if not g.edges:
        return 2 ** g.vertex_count
    red = ising_reduce(g, agree, disagree)
    return normalize(2 * red.scale * weighted_matching_sum(red.graph))


def power_of_two_count(g: EmbeddedGraph) -> int:
    """Perfect matchings of ``edge_graph(g)`` for a graph of maximum degree 3.

    A matching pairs the edges at each vertex, so it orients every edge toward
    the vertex where it is paired; the orientations that arise are exactly
    those with even indegree everywhere.  That is an affine system over GF(2)
    with one unknown per edge, giving 0 or ``2**(E - rank)`` solutions.
    """
    for v in range(g.vertex_count):
        if g.degree(v) > 3:
            raise ValueError(f"vertex {v} has degree {g.degree(v)} > 3")
    rows, rhs = [], []
    for v in range(g.vertex_count):
        row = [0] * len(g.edges)
        tails = 0
        for e, ed in enumerate(g.edges):
            if ed.u == ed.v:
                raise ValueError(f"edge {e} is a loop")
            if v in (ed.u, ed.v):
                row[e] = 1
                tails += ed.u == v
        rows.append(row)
        rhs.append(tails % 2)
    consistent, rank, _, _ = gf2_affine_solve(rows, rhs, len(g.edges))
    return 2 ** (len(g.edges) - rank) if consistent else 0
