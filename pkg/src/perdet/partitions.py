"""Plane partitions in a box as matchings of a honeycomb graph.

Lattice points of the triangular lattice are written ``(u, v)``; the box point
``(x, y, z)`` projects to ``(x - z, y - z)``.  The unit triangles are
``up(u, v) = {(u,v), (u+1,v), (u+1,v+1)}`` (black) and
``down(u, v) = {(u,v), (u+1,v+1), (u,v+1)}`` (white).  A vertex of the
honeycomb graph is a triangle and an edge is a lozenge.  Cubes are named by
their corner farthest from the origin, so cube ``(i, j, k)`` has
``1 <= i <= a`` and so on.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

from .embedded import BLACK, WHITE, EmbeddedGraph, face_of_half_edge, induced_subgraph, quotient_maps
from .kasteleyn import prescribed_curvature_weighting, weighted_matching_sum
from .laurent import Q, Laurent, RingElement, exact_div, normalize
from .polyhedra import planar_embedding

__all__ = [
    "Triangle",
    "HexagonGraph",
    "hexagon_graph",
    "macmahon",
    "q_macmahon",
    "CubeWeightScheme",
    "face_prescription",
    "scheme_weighted_sum",
    "matching_to_plane_partition",
    "plane_partition_to_matching",
    "plane_partition_heights",
    "is_plane_partition",
    "all_plane_partitions",
    "box_symmetry",
    "triangle_permutation",
    "cube_map",
    "penrose_graph",
    "tcpp_graph",
    "cstcpp_graph",
    "deleted_quotient",
    "remove_vestigial",
    "cyclic_quotient",
    "CyclicQuotient",
    "Region",
    "BoxSymmetry",
    "hexagon_side_lengths",
    "CURVATURE_POWER",
]

Point = Tuple[int, int]
Cube = Tuple[int, int, int]
PlanePartition = FrozenSet[Cube]

UP, DOWN = 0, 1


@dataclass(frozen=True, order=True)
class Triangle:
    u: int
    v: int
    kind: int  # UP or DOWN

    @property
    def points(self) -> Tuple[Point, Point, Point]:
        u, v = self.u, self.v
        if self.kind == UP:
            return (u, v), (u + 1, v), (u + 1, v + 1)
        return (u, v), (u + 1, v + 1), (u, v + 1)

    @property
    def centroid(self) -> Tuple[Fraction, Fraction]:
        if self.kind == UP:
            return Fraction(3 * self.u + 2, 3), Fraction(3 * self.v + 1, 3)
        return Fraction(3 * self.u + 1, 3), Fraction(3 * self.v + 2, 3)


# lozenge kinds, named by the box axis normal to the lozenge: partner of up(u, v)
_PARTNER = {"z": (0, 0), "x": (0, -1), "y": (1, 0)}
# side shared by up(u, v) and its partner, as offsets from (u, v)
_SHARED_SIDE = {"z": ((0, 0), (1, 1)), "x": ((0, 0), (1, 0)), "y": ((1, 0), (1, 1))}


@dataclass(frozen=True)
class Region:
    """Lattice hexagon ``u_lo <= u <= u_hi``, ``v_lo <= v <= v_hi``, ``d_lo <= v - u <= d_hi``."""

    u_lo: int
    u_hi: int
    v_lo: int
    v_hi: int
    d_lo: int
    d_hi: int

    @classmethod
    def box(cls, a: int, b: int, c: int) -> "Region":
        return cls(-c, a, -c, b, -a, b)

    def contains(self, p: Point) -> bool:
        u, v = p
        return self.u_lo <= u <= self.u_hi and self.v_lo <= v <= self.v_hi and self.d_lo <= v - u <= self.d_hi

    def triangles(self) -> List[Triangle]:
        out = []
        for u in range(self.u_lo, self.u_hi + 1):
            for v in range(self.v_lo, self.v_hi + 1):
                for kind in (UP, DOWN):
                    t = Triangle(u, v, kind)
                    if all(self.contains(p) for p in t.points):
                        out.append(t)
        return out


def _honeycomb(triangles: Sequence[Triangle], name: str):
    """Embedded graph on the given triangles; returns (graph, edge kinds, index)."""
    index = {t: i for i, t in enumerate(triangles)}
    edges, kinds = [], []
    for t in triangles:
        if t.kind != UP:
            continue
        for kind in ("z", "x", "y"):
            du, dv = _PARTNER[kind]
            partner = Triangle(t.u + du, t.v + dv, DOWN)
            if partner in index:
                edges.append((index[t], index[partner]))
                kinds.append(kind)
    points = [t.centroid for t in triangles]
    g = planar_embedding(points, edges, name=name)
    g = g.with_colors([BLACK if t.kind == UP else WHITE for t in triangles])
    return g, tuple(kinds), index


def _signed_area(points: Sequence[Tuple[Fraction, Fraction]]) -> Fraction:
    total = Fraction(0)
    for (x1, y1), (x2, y2) in zip(points, points[1:] + points[:1]):
        total += x1 * y2 - x2 * y1
    return total / 2


def _hexagon_faces(g: EmbeddedGraph, triangles: Sequence[Triangle]) -> Dict[int, Point]:
    """Bounded six-sided faces, keyed by face index, valued by the lattice point they surround."""
    out = {}
    for i, f in enumerate(g.faces):
        tris = [triangles[g.vertex_of(h)] for h, _ in f.sides]
        # bounded faces are traced clockwise (rightmost turn at every vertex)
        if len(f) != 6 or _signed_area([t.centroid for t in tris]) >= 0:
            continue
        common = set(tris[0].points)
        for t in tris[1:]:
            common &= set(t.points)
        if len(common) != 1:
            raise AssertionError("hexagonal face does not surround a lattice point")
        out[i] = common.pop()
    return out


@dataclass(frozen=True)
class HexagonGraph:
    """Honeycomb graph of the ``a x b x c`` box with its plane-partition dictionary."""

    graph: EmbeddedGraph
    dims: Tuple[int, int, int]
    triangles: Tuple[Triangle, ...]
    edge_kinds: Tuple[str, ...]
    face_position: Mapping[int, Point]
    reference: FrozenSet[int] = field(default=frozenset())

    @property
    def position_face(self) -> Dict[Point, int]:
        return {p: f for f, p in self.face_position.items()}

    def cube_face(self, cube: Cube) -> int:
        """Face whose flip adds or removes ``cube``."""
        i, j, k = cube
        return self.position_face[(i - k, j - k)]

    def cubes(self) -> List[Cube]:
        a, b, c = self.dims
        return [(i, j, k) for i in range(1, a + 1) for j in range(1, b + 1) for k in range(1, c + 1)]

    def edge_between(self, black: Triangle, kind: str) -> int:
        return self._edge_index[(black, kind)]

    @property
    def _edge_index(self) -> Dict[Tuple[Triangle, str], int]:
        out = {}
        for e, ed in enumerate(self.graph.edges):
            t = self.triangles[ed.u]
            out[(t, self.edge_kinds[e])] = e
        return out


def hexagon_graph(a: int, b: int, c: int) -> HexagonGraph:
    if min(a, b, c) < 0:
        raise ValueError("box dimensions must be nonnegative")
    triangles = Region.box(a, b, c).triangles()
    g, kinds, _ = _honeycomb(triangles, f"hexagon_{a}_{b}_{c}")
    faces = _hexagon_faces(g, triangles)
    if g.vertex_count and len(faces) != len(g.faces) - 1:
        raise AssertionError("internal hexagon count disagrees with Euler's formula")
    h = HexagonGraph(g, (a, b, c), tuple(triangles), kinds, faces)
    ref = plane_partition_to_matching(h, frozenset())
    return HexagonGraph(g, (a, b, c), tuple(triangles), kinds, faces, ref)


# -- plane partitions -----------------------------------------------------------

def is_plane_partition(cubes: Iterable[Cube], dims: Tuple[int, int, int]) -> bool:
    a, b, c = dims
    s = set(cubes)
    for i, j, k in s:
        if not (1 <= i <= a and 1 <= j <= b and 1 <= k <= c):
            return False
        for p in ((i - 1, j, k), (i, j - 1, k), (i, j, k - 1)):
            if min(p) >= 1 and p not in s:
                return False
    return True


def plane_partition_heights(cubes: Iterable[Cube], dims) -> List[List[int]]:
    a, b, _ = dims
    hts = [[0] * b for _ in range(a)]
    for i, j, k in cubes:
        hts[i - 1][j - 1] = max(hts[i - 1][j - 1], k)
    return hts


def all_plane_partitions(dims: Tuple[int, int, int]) -> List[PlanePartition]:
    """Every plane partition in the box, by column heights (small boxes only)."""
    a, b, c = dims
    cells = [(i, j) for i in range(a) for j in range(b)]
    out = []

    def rec(idx, hts):
        if idx == len(cells):
            out.append(frozenset((i + 1, j + 1, k) for (i, j), h in hts.items() for k in range(1, h + 1)))
            return
        i, j = cells[idx]
        cap = c
        if i > 0:
            cap = min(cap, hts[(i - 1, j)])
        if j > 0:
            cap = min(cap, hts[(i, j - 1)])
        for h in range(cap + 1):
            hts[(i, j)] = h
            rec(idx + 1, hts)
        del hts[(i, j)]

    rec(0, {})
    return out


def plane_partition_to_matching(h: HexagonGraph, cubes: Iterable[Cube]) -> FrozenSet[int]:
    """Lozenge tiling (as a matching) of the surface of a plane partition."""
    a, b, c = h.dims
    cubes = frozenset(cubes)
    if not is_plane_partition(cubes, h.dims):
        raise ValueError("not a plane partition of the box")
    hts = plane_partition_heights(cubes, h.dims)

    def solid(x, y, z):
        return x <= 0 or y <= 0 or z <= 0 or hts[x - 1][y - 1] >= z

    def lift(p: Point) -> Cube:
        u, v = p
        lo, hi = max(0, -u, -v), min(c, a - u, b - v)
        for t in range(hi, lo - 1, -1):
            if solid(u + t, v + t, t):
                return u + t, v + t, t
        raise AssertionError("lattice point has no lift")

    index = h._edge_index
    matching = set()
    for t in h.triangles:
        if t.kind != UP:
            continue
        pts = [lift(p) for p in t.points]
        for axis, kind in ((2, "z"), (0, "x"), (1, "y")):
            if len({p[axis] for p in pts}) == 1:
                matching.add(index[(t, kind)])
                break
        else:
            raise AssertionError("triangle lifts to no lozenge")
    return frozenset(matching)


def matching_to_plane_partition(h: HexagonGraph, matching: Iterable[int]) -> PlanePartition:
    """Cube set whose surface is the lozenge tiling ``matching``."""
    from .embedded import is_perfect_matching

    matching = frozenset(matching)
    if not is_perfect_matching(h.graph, matching):
        raise ValueError("not a perfect matching")
    a, b, c = h.dims
    if not h.triangles:
        return frozenset()
    internal = set()
    tops = []
    for e in matching:
        t = h.triangles[h.graph.edges[e].u]
        kind = h.edge_kinds[e]
        (du1, dv1), (du2, dv2) = _SHARED_SIDE[kind]
        internal.add(frozenset({(t.u + du1, t.v + dv1), (t.u + du2, t.v + dv2)}))
        if kind == "z":
            tops.append((t.u, t.v))
    steps: Dict[Point, List[Tuple[Point, int]]] = {}
    for t in h.triangles:
        p = t.points
        for x, y in ((p[0], p[1]), (p[1], p[2]), (p[2], p[0])):
            if frozenset({x, y}) in internal:
                continue
            d = (y[0] - x[0], y[1] - x[1])
            dt = -1 if d == (1, 1) else (1 if d == (-1, -1) else 0)
            steps.setdefault(x, []).append((y, dt))
            steps.setdefault(y, []).append((x, -dt))
    height = {(a, 0): 0}
    queue = deque([(a, 0)])
    while queue:
        p = queue.popleft()
        for q, dt in steps.get(p, ()):
            if q not in height:
                height[q] = height[p] + dt
                queue.append(q)
            elif height[q] != height[p] + dt:
                raise AssertionError("inconsistent height function")
    cubes = set()
    for u, v in tops:
        t = height[(u, v)]
        cubes.update((u + t + 1, v + t + 1, k) for k in range(1, t + 1))
    return frozenset(cubes)


# -- MacMahon ---------------------------------------------------------------------

def _hyperfactorial(n: int) -> int:
    return prod(factorial(k) for k in range(1, n))


def macmahon(a: int, b: int, c: int) -> int:
    """Number of plane partitions in an ``a x b x c`` box."""
    num = _hyperfactorial(a) * _hyperfactorial(b) * _hyperfactorial(c) * _hyperfactorial(a + b + c)
    den = _hyperfactorial(a + b) * _hyperfactorial(a + c) * _hyperfactorial(b + c)
    return exact_div(num, den)


def _q_factorial(n: int) -> RingElement:
    out: RingElement = 1
    for k in range(1, n + 1):
        out = out * Laurent(low=0, coeffs=[1] * k)
    return normalize(out)


def _q_hyperfactorial(n: int) -> RingElement:
    out: RingElement = 1
    for k in range(1, n):
        out = out * _q_factorial(k)
    return normalize(out)


def q_macmahon(a: int, b: int, c: int) -> RingElement:
    """Generating function of plane partitions in the box by number of cubes."""
    H = _q_hyperfactorial
    num = normalize(H(a) * H(b) * H(c) * H(a + b + c))
    den = normalize(H(a + b) * H(a + c) * H(b + c))
    return exact_div(num, den)


# -- cube weight schemes ----------------------------------------------------------

@dataclass(frozen=True)
class CubeWeightScheme:
    """Weight of each cube, constant along the ``(1, 1, 1)`` diagonal direction.

    ``kind`` is ``uniform`` (every cube ``values[0]``), ``minus1``,
    ``strange3`` (``s`` on cubes ``(i,i,i)``, ``t`` when exactly two indices
    agree, ``u`` otherwise) or ``strangeN`` (``s`` on the central diagonal, ``t``
    elsewhere).

    ``strange3`` enumerates only cyclically symmetric partitions and weighs
    each orbit of cubes under the axis rotation once.
    """

    kind: str
    values: Tuple[RingElement, ...] = ()

    @classmethod
    def uniform(cls, weight: RingElement = Q) -> "CubeWeightScheme":
        return cls("uniform", (weight,))

    @classmethod
    def minus_one(cls) -> "CubeWeightScheme":
        return cls("minus1", (-1,))

    @classmethod
    def strange3(cls, s: int, t: int, u: int) -> "CubeWeightScheme":
        return cls("strange3", (s, t, u))

    @classmethod
    def strange_n(cls, s: int, t: int) -> "CubeWeightScheme":
        return cls("strangeN", (s, t))

    def check_box(self, dims: Tuple[int, int, int]) -> None:
        a, b, c = dims
        if self.kind == "strange3" and not a == b == c:
            raise ValueError("strange3 needs a cubical box")
        if self.kind == "strangeN" and not (a % 2 == b % 2 == c % 2):
            raise ValueError("strangeN needs box sides of equal parity")

    def weight(self, cube: Cube, dims: Tuple[int, int, int]) -> RingElement:
        i, j, k = cube
        if self.kind in ("uniform", "minus1"):
            return self.values[0]
        if self.kind == "strange3":
            s, t, u = self.values
            distinct = len({i, j, k})
            return s if distinct == 1 else (t if distinct == 2 else u)
        if self.kind == "strangeN":
            s, t = self.values
            a, b, c = dims
            center = (a // 2 - c // 2, b // 2 - c // 2)
            return s if (i - k, j - k) == center else t
        raise ValueError(f"unknown scheme {self.kind}")

    def partition_weight(self, cubes: Iterable[Cube], dims) -> RingElement:
        cubes = set(cubes)
        if self.kind == "strange3":
            if any((j, k, i) not in cubes for i, j, k in cubes):
                raise ValueError("strange3 weighs cyclically symmetric partitions only")
            cubes = {c for c in cubes if c == min(c, c[1:] + c[:1], c[2:] + c[:2])}
        out: RingElement = 1
        for cube in cubes:
            out = out * self.weight(cube, dims)
        return normalize(out)


# Curvature q on a hexagon makes adding its cube multiply a term by q**CURVATURE_POWER.
# Calibrated against brute force for the colour convention and reference matching used here.
CURVATURE_POWER = 1


def face_prescription(h: HexagonGraph, scheme: CubeWeightScheme) -> Dict[int, RingElement]:
    """Curvature for each internal hexagon so that cube flips carry the scheme's weights."""
    scheme.check_box(h.dims)
    out: Dict[int, RingElement] = {}
    for cube in h.cubes():
        face = h.cube_face(cube)
        w = scheme.weight(cube, h.dims)
        if face in out and out[face] != w:
            raise ValueError(f"cubes flipping face {face} carry different weights")
        out[face] = w
    return {f: normalize(w ** CURVATURE_POWER) if isinstance(w, Laurent) else w for f, w in out.items()}


def scheme_weighted_sum(h: HexagonGraph, scheme: CubeWeightScheme) -> RingElement:
    """Sum over plane partitions of the product of cube weights, by one determinant."""
    if not h.triangles:
        return 1
    if scheme.kind == "strange3":
        return _strange3_weighted_sum(h, scheme)
    weights = prescribed_curvature_weighting(h.graph, face_prescription(h, scheme), outer=_outer_face(h))
    return weighted_matching_sum(h.graph, weights, reference=h.reference)


def _outer_face(h: HexagonGraph) -> int:
    return next(i for i in range(len(h.graph.faces)) if i not in h.face_position)


@dataclass(frozen=True)
class CyclicQuotient:
    """``Z(a,a,a)`` modulo the axis rotation, with the orbit maps."""

    graph: EmbeddedGraph
    face_map: Tuple[int, ...]
    edge_map: Tuple[int, ...]
    reference: FrozenSet[int]


def cyclic_quotient(h: HexagonGraph) -> CyclicQuotient:
    """Quotient of a cubical-box hexagon graph by the rotation of order three.

    The rotation fixes only the central hexagon, so it acts freely on vertices
    and edges; matchings of the quotient are the cyclically symmetric tilings.
    """
    a, b, c = h.dims
    if not a == b == c or a == 0:
        raise ValueError("cyclic quotient needs a nonempty cubical box")
    g = h.graph
    perm = triangle_permutation(h, box_symmetry("cyclic", h.dims))
    q, vmap, hmap = quotient_maps(g, perm, 3)
    colors = [BLACK] * q.vertex_count
    for v in range(g.vertex_count):
        colors[vmap[v]] = g.colors[v]
    q = q.with_colors(colors)
    qface = face_of_half_edge(q)
    face_map = tuple(qface[hmap[next(hh for hh, o in f.sides if o == 1)]] for f in g.faces)
    edge_map = tuple(hmap[2 * e] >> 1 for e in range(len(g.edges)))
    return CyclicQuotient(q, face_map, edge_map, frozenset(edge_map[e] for e in h.reference))


def _strange3_weighted_sum(h: HexagonGraph, scheme: CubeWeightScheme) -> RingElement:
    scheme.check_box(h.dims)
    cq = cyclic_quotient(h)
    prescription: Dict[int, RingElement] = {}
    for cube in h.cubes():
        face = cq.face_map[h.cube_face(cube)]
        w = scheme.weight(cube, h.dims)
        if prescription.setdefault(face, w) != w:
            raise ValueError(f"cubes flipping quotient face {face} carry different weights")
    weights = prescribed_curvature_weighting(cq.graph, prescription, outer=cq.face_map[_outer_face(h)])
    return weighted_matching_sum(cq.graph, weights, reference=cq.reference)


# -- symmetries of the box ----------------------------------------------------------

@dataclass(frozen=True)
class BoxSymmetry:
    """Affine map of the box; ``complementing`` maps partitions to complements."""

    name: str
    dims: Tuple[int, int, int]
    complementing: bool

    def point(self, p: Cube) -> Cube:
        x, y, z = p
        a, b, c = self.dims
        if self.name == "cyclic":
            return y, z, x
        if self.name == "transpose":
            return y, x, z
        if self.name == "complement":
            return a - x, b - y, c - z
        if self.name == "transpose_complement":
            return a - x, b - z, c - y
        raise ValueError(self.name)

    def lattice(self, p: Point) -> Point:
        x, y, z = self.point((p[0], p[1], 0))
        return x - z, y - z

    def cube(self, cube: Cube) -> Cube:
        i, j, k = cube
        lo = self.point((i - 1, j - 1, k - 1))
        hi = self.point((i, j, k))
        return tuple(max(s, t) for s, t in zip(lo, hi))  # type: ignore[return-value]

    def fixes(self, cubes: PlanePartition) -> bool:
        image = frozenset(self.cube(c) for c in cubes)
        if not self.complementing:
            return image == cubes
        return image.isdisjoint(cubes) and len(image) + len(cubes) == prod(self.dims)


def box_symmetry(name: str, dims: Tuple[int, int, int]) -> BoxSymmetry:
    a, b, c = dims
    need = {"cyclic": a == b == c, "transpose": a == b, "complement": True,
            "transpose_complement": b == c}
    if name not in need:
        raise ValueError(f"unknown symmetry {name}")
    if not need[name]:
        raise ValueError(f"box {dims} has no {name} symmetry")
    return BoxSymmetry(name, tuple(dims), name in ("complement", "transpose_complement"))


def cube_map(sym: BoxSymmetry, cube: Cube) -> Cube:
    return sym.cube(cube)


def triangle_permutation(h: HexagonGraph, sym: BoxSymmetry) -> List[int]:
    """Vertex permutation of the honeycomb graph induced by a box symmetry."""
    by_points = {frozenset(t.points): i for i, t in enumerate(h.triangles)}
    perm = []
    for t in h.triangles:
        image = frozenset(sym.lattice(p) for p in t.points)
        if image not in by_points:
            raise ValueError(f"{sym.name} does not preserve the hexagon")
        perm.append(by_points[image])
    return perm


def _group_closure(gens: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    n = len(gens[0]) if gens else 0
    ident = tuple(range(n))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = tuple(s[g[i]] for i in range(n))
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(group)


# -- vestigial vertices and deleted quotients ------------------------------------------

def remove_vestigial(g: EmbeddedGraph) -> Tuple[EmbeddedGraph, List[int], bool]:
    """Repeatedly match degree-1 vertices to their only neighbour.

    Returns ``(reduced graph, forced edges as ids of g, matchable)``.  When a
    vertex loses all its edges no perfect matching exists; the result is then
    the empty graph with ``matchable`` False.
    """
    alive = [True] * g.vertex_count
    edge_alive = [ed.u != ed.v for ed in g.edges]
    incident: List[List[int]] = [[] for _ in range(g.vertex_count)]
    for e, ed in enumerate(g.edges):
        if edge_alive[e]:
            incident[ed.u].append(e)
            incident[ed.v].append(e)
    degree = [len(x) for x in incident]
    forced: List[int] = []
    queue = deque(v for v in range(g.vertex_count) if degree[v] <= 1)
    empty = EmbeddedGraph(0, (), (), () if g.colors is not None else None, g.name)
    while queue:
        v = queue.popleft()
        if not alive[v]:
            continue
        if degree[v] == 0:
            return empty, forced, False
        if degree[v] > 1:
            continue
        e = next(x for x in incident[v] if edge_alive[x])
        ed = g.edges[e]
        w = ed.v if ed.u == v else ed.u
        forced.append(e)
        for x in (v, w):
            alive[x] = False
            for f in incident[x]:
                if edge_alive[f]:
                    edge_alive[f] = False
                    fd = g.edges[f]
                    other = fd.v if fd.u == x else fd.u
                    degree[other] -= 1
                    if alive[other] and degree[other] <= 1:
                        queue.append(other)
    sub, _, _ = induced_subgraph(g, [v for v in range(g.vertex_count) if alive[v]])
    return sub, sorted(forced), True


_CHAMBER_FUNCTIONAL = (7919, 104729)


# only this mirror forces the matching on its own triangles
_REFLECTIONS = ("transpose_complement",)


def deleted_quotient(h: HexagonGraph, symmetries: Sequence[BoxSymmetry]) -> EmbeddedGraph:
    """Quotient by a reflection group after deleting triangles with nontrivial stabilizer.

    Orbit representatives are the triangles maximising a generic linear
    functional, i.e. one Weyl chamber, so the quotient is an induced subgraph.
    Triangles on mirrors can only be matched among themselves; if they cannot
    be, the invariant count is 0 and a single isolated vertex is returned.
    Vestigial vertices are removed from the result.
    """
    if not any(s.name in _REFLECTIONS for s in symmetries):
        raise ValueError("deleted quotient needs the transpose-complement mirror")
    if not h.triangles:
        return h.graph
    gens = [triangle_permutation(h, s) for s in symmetries]
    group = _group_closure(gens)
    n = len(h.triangles)
    fixed = [v for v in range(n) if any(g[v] == v for g in group if list(g) != list(range(n)))]
    fixed_set = set(fixed)
    lx, ly = _CHAMBER_FUNCTIONAL

    def score(v):
        x, y = h.triangles[v].centroid
        return lx * x + ly * y

    keep = [v for v in range(n) if v not in fixed_set and all(score(g[v]) <= score(v) for g in group)]
    mirror, _, _ = induced_subgraph(h.graph, fixed)
    _, _, mirror_ok = remove_vestigial(mirror)
    mirror_left, _, _ = remove_vestigial(mirror)
    if not mirror_ok or mirror_left.vertex_count:
        return EmbeddedGraph(1, (), ((),), None, h.graph.name + "//G")
    sub, _, _ = induced_subgraph(h.graph, keep)
    reduced, _, ok = remove_vestigial(sub)
    if not ok:
        return EmbeddedGraph(1, (), ((),), None, h.graph.name + "//G")
    return reduced


def tcpp_graph(a: int, b: int) -> EmbeddedGraph:
    """Reduced deleted quotient for transpose-complement partitions in a ``2a x b x b`` box."""
    if a < 0 or b < 0:
        raise ValueError("dimensions must be nonnegative")
    h = hexagon_graph(2 * a, b, b)
    return deleted_quotient(h, [box_symmetry("transpose_complement", h.dims)])


def cstcpp_graph(a: int) -> EmbeddedGraph:
    """Reduced deleted quotient for cyclically symmetric transpose-complement partitions."""
    if a < 0:
        raise ValueError("dimension must be nonnegative")
    h = hexagon_graph(2 * a, 2 * a, 2 * a)
    return deleted_quotient(h, [box_symmetry("cyclic", h.dims), box_symmetry("transpose_complement", h.dims)])


# -- the punctured hexagon ------------------------------------------------------------

def penrose_graph(a: int, b: int, c: int) -> EmbeddedGraph:
    """Honeycomb graph of the ``a, b+1, c, a+1, b, c+1`` hexagon with its middle triangle removed."""
    if min(a, b, c) < 0:
        raise ValueError("dimensions must be nonnegative")
    if not a % 2 == b % 2 == c % 2:
        raise ValueError("a, b, c must have the same parity")
    # the b x (a+1) x c box hexagon with one side pushed out by one unit
    region = Region(-c, b + 1, -c, a + 1, -b, a + 1)
    triangles = region.triangles()
    # opposite sides are an odd number of rows apart in each of the three
    # directions; the middle rows meet in a single triangle
    u_mid = (region.u_lo + region.u_hi - 1) // 2
    v_mid = (region.v_lo + region.v_hi - 1) // 2
    d_mid = (region.d_lo + region.d_hi - 1) // 2
    kind = UP if v_mid - u_mid - 1 == d_mid else DOWN
    middle = [Triangle(u_mid, v_mid, kind)]
    if middle[0] not in set(triangles) or (v_mid - u_mid - (1 if kind == UP else 0)) != d_mid:
        raise AssertionError("hexagon has no middle triangle")
    kept = [t for t in triangles if t != middle[0]]
    g, _, _ = _honeycomb(kept, f"penrose_{a}_{b}_{c}")
    return g


def hexagon_side_lengths(region: Region) -> List[int]:
    """Side lengths going around a lattice hexagon, starting with the side ``u = u_hi``."""
    r = region
    return [
        r.v_hi - max(r.v_lo, r.u_hi + r.d_lo),   # u = u_hi
        r.u_hi - max(r.u_lo, r.v_hi - r.d_hi),   # v = v_hi
        min(r.u_hi, r.v_hi - r.d_hi) - r.u_lo,   # v - u = d_hi
        min(r.v_hi, r.u_lo + r.d_hi) - r.v_lo,   # u = u_lo
        min(r.u_hi, r.v_lo - r.d_lo) - r.u_lo,   # v = v_lo
        r.u_hi - max(r.u_lo, r.v_lo - r.d_lo),   # v - u = d_lo
    ]
