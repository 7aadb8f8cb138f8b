"""Graphs embedded on the sphere or projective plane as signed rotation systems.

Edge ``e`` joins ``edges[e].u`` to ``edges[e].v``; its half-edges are ``2e``
(at ``u``) and ``2e + 1`` (at ``v``).  Each vertex lists its half-edges in
counterclockwise order.  An edge with ``sign == -1`` reverses the local
orientation when crossed, which is all that is needed for the projective plane.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .laurent import RingElement, normalize

__all__ = [
    "BLACK",
    "WHITE",
    "SPHERE",
    "PROJECTIVE_PLANE",
    "Edge",
    "Face",
    "EmbeddingError",
    "UnsupportedSurface",
    "EmbeddedGraph",
    "Matching",
    "validate",
    "trace_faces",
    "components",
    "bipartite_coloring",
    "is_locally_bipartite",
    "orient",
    "induced_subgraph",
    "dual_graph",
    "edge_graph",
    "quotient_by_free_automorphism",
    "quotient_maps",
    "is_perfect_matching",
]

BLACK = "B"
WHITE = "W"
SPHERE = "sphere"
PROJECTIVE_PLANE = "projective-plane"


class EmbeddingError(ValueError):
    """Raised for malformed rotation systems or unsupported surfaces."""


class UnsupportedSurface(EmbeddingError):
    """A well-formed rotation system on a surface other than the sphere or projective plane."""


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    weight: RingElement = 1
    sign: int = 1


@dataclass(frozen=True)
class Face:
    """One face: its sides as ``(half_edge, direction)`` in traversal order.

    ``direction`` is the local orientation (+1/-1) in force when the side is
    walked, starting from the vertex of ``half_edge``.
    """

    sides: Tuple[Tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.sides)

    @property
    def half_edges(self) -> Tuple[int, ...]:
        return tuple(h for h, _ in self.sides)

    @property
    def edges(self) -> Tuple[int, ...]:
        return tuple(h // 2 for h, _ in self.sides)


Matching = FrozenSet[int]


@dataclass(frozen=True)
class EmbeddedGraph:
    vertex_count: int
    edges: Tuple[Edge, ...]
    rotation: Tuple[Tuple[int, ...], ...]
    colors: Optional[Tuple[str, ...]] = None
    name: str = field(default="", compare=False)

    @classmethod
    def build(cls, vertex_count: int, edges: Iterable, rotation: Sequence[Sequence[int]],
              colors: Optional[Sequence[str]] = None, name: str = "") -> "EmbeddedGraph":
        """Construct from loose data; edges may be ``Edge`` or ``(u, v[, weight[, sign]])``."""
        es = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
        es = tuple(replace(e, weight=normalize(e.weight)) for e in es)
        return cls(vertex_count, es, tuple(tuple(r) for r in rotation),
                   tuple(colors) if colors is not None else None, name)

    # -- half-edge navigation ------------------------------------------------
    def vertex_of(self, h: int) -> int:
        e = self.edges[h >> 1]
        return e.v if h & 1 else e.u

    @cached_property
    def _position(self) -> Dict[int, Tuple[int, int]]:
        pos = {}
        for v, rot in enumerate(self.rotation):
            for i, h in enumerate(rot):
                pos[h] = (v, i)
        return pos

    def succ(self, h: int) -> int:
        v, i = self._position[h]
        rot = self.rotation[v]
        return rot[(i + 1) % len(rot)]

    def pred(self, h: int) -> int:
        v, i = self._position[h]
        rot = self.rotation[v]
        return rot[i - 1]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def neighbors(self, v: int) -> List[int]:
        return [self.vertex_of(h ^ 1) for h in self.rotation[v]]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def weights(self) -> Tuple[RingElement, ...]:
        return tuple(e.weight for e in self.edges)

    def with_weights(self, weights: Sequence[RingElement]) -> "EmbeddedGraph":
        if len(weights) != len(self.edges):
            raise ValueError("one weight per edge required")
        es = tuple(replace(e, weight=normalize(w)) for e, w in zip(self.edges, weights))
        return replace(self, edges=es)

    def with_colors(self, colors: Optional[Sequence[str]]) -> "EmbeddedGraph":
        return replace(self, colors=tuple(colors) if colors is not None else None)

    @cached_property
    def faces(self) -> Tuple[Face, ...]:
        return tuple(_trace(self))

    @cached_property
    def surface(self) -> str:
        return validate(self)


# -- validation and faces -------------------------------------------------------

def _check_structure(g: EmbeddedGraph) -> None:
    n_half = 2 * len(g.edges)
    seen = [False] * n_half
    if len(g.rotation) != g.vertex_count:
        raise EmbeddingError("one rotation per vertex required")
    for e, edge in enumerate(g.edges):
        if not (0 <= edge.u < g.vertex_count and 0 <= edge.v < g.vertex_count):
            raise EmbeddingError(f"edge {e} has an endpoint out of range")
        if edge.sign not in (1, -1):
            raise EmbeddingError(f"edge {e} has embedding sign {edge.sign}")
    for v, rot in enumerate(g.rotation):
        for h in rot:
            if not 0 <= h < n_half:
                raise EmbeddingError(f"unknown half-edge {h} at vertex {v}")
            if seen[h]:
                raise EmbeddingError(f"half-edge {h} appears twice in the rotations")
            seen[h] = True
            if g.vertex_of(h) != v:
                raise EmbeddingError(f"half-edge {h} listed at vertex {v} but belongs to {g.vertex_of(h)}")
    missing = [h for h, s in enumerate(seen) if not s]
    if missing:
        raise EmbeddingError(f"half-edge {missing[0]} is missing from the rotations")
    if g.colors is not None:
        if len(g.colors) != g.vertex_count:
            raise EmbeddingError("one color per vertex required")
        for e, edge in enumerate(g.edges):
            if g.colors[edge.u] == g.colors[edge.v]:
                raise EmbeddingError(f"edge {e} is monochromatic")


def _trace(g: EmbeddedGraph) -> List[Face]:
    used = set()
    faces = []
    n_half = 2 * len(g.edges)
    starts = [(h, 1) for h in range(n_half)] + [(h, -1) for h in range(n_half)]
    for start in starts:
        if start in used:
            continue
        sides = []
        h, o = start
        while (h, o) not in used:
            used.add((h, o))
            sides.append((h, o))
            s = g.edges[h >> 1].sign
            back = h ^ 1
            used.add((back, -o * s))
            o = o * s
            h = g.succ(back) if o == 1 else g.pred(back)
        if (h, o) != start:
            raise EmbeddingError("face traversal did not close up")
        faces.append(Face(tuple(sides)))
    return faces


def trace_faces(g: EmbeddedGraph) -> List[Face]:
    """Faces in deterministic order (by the first flag that reaches them)."""
    validate(g)
    return list(g.faces)


def components(g: EmbeddedGraph) -> List[List[int]]:
    """Vertex sets of connected components, each sorted, ordered by smallest vertex."""
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        a, b = find(e.u), find(e.v)
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups: Dict[int, List[int]] = {}
    for v in range(g.vertex_count):
        groups.setdefault(find(v), []).append(v)
    return [groups[k] for k in sorted(groups)]


def _component_characteristics(g: EmbeddedGraph) -> List[int]:
    comps = components(g)
    comp_of = {}
    for i, c in enumerate(comps):
        for v in c:
            comp_of[v] = i
    V = [len(c) for c in comps]
    E = [0] * len(comps)
    F = [0] * len(comps)
    for e in g.edges:
        E[comp_of[e.u]] += 1
    for f in g.faces:
        F[comp_of[g.vertex_of(f.sides[0][0])]] += 1
    for i, c in enumerate(comps):
        if E[i] == 0:
            F[i] = 1
    return [V[i] - E[i] + F[i] for i in range(len(comps))]


def validate(g: EmbeddedGraph) -> str:
    """Check the rotation system and classify the surface by Euler characteristic.

    Each component must be a sphere (2) or projective plane (1).  The result is
    ``PROJECTIVE_PLANE`` if any component is projective, else ``SPHERE``.
    """
    _check_structure(g)
    chis = _component_characteristics(g)
    for chi in chis:
        if chi not in (1, 2):
            raise UnsupportedSurface(f"Euler characteristic {chi} is neither sphere nor projective plane")
    return PROJECTIVE_PLANE if 1 in chis else SPHERE


def bipartite_coloring(g: EmbeddedGraph) -> Optional[Tuple[str, ...]]:
    """A proper 2-coloring with the smallest vertex of each component black, or None."""
    color: List[Optional[str]] = [None] * g.vertex_count
    for comp in components(g):
        color[comp[0]] = BLACK
        stack = [comp[0]]
        while stack:
            v = stack.pop()
            other = WHITE if color[v] == BLACK else BLACK
            for w in g.neighbors(v):
                if color[w] is None:
                    color[w] = other
                    stack.append(w)
                elif color[w] != other:
                    return None
    return tuple(color)  # type: ignore[arg-type]


def is_locally_bipartite(g: EmbeddedGraph) -> bool:
    """Every face has an even number of sides."""
    return all(len(f) % 2 == 0 for f in g.faces)


def orient(g: EmbeddedGraph) -> EmbeddedGraph:
    """Equivalent rotation system with every embedding sign +1.

    Flips local orientations (reverses rotations) along a spanning forest.
    Raises ``EmbeddingError`` for a non-orientable component.
    """
    flip = [0] * g.vertex_count
    seen = [False] * g.vertex_count
    for comp in components(g):
        seen[comp[0]] = True
        flip[comp[0]] = 1
        stack = [comp[0]]
        while stack:
            v = stack.pop()
            for h in g.rotation[v]:
                w = g.vertex_of(h ^ 1)
                want = flip[v] * g.edges[h >> 1].sign
                if not seen[w]:
                    seen[w] = True
                    flip[w] = want
                    stack.append(w)
                elif flip[w] != want:
                    raise EmbeddingError("embedding is not orientable")
    rot = tuple(r if flip[v] == 1 else (r[:1] + tuple(reversed(r[1:])))
                for v, r in enumerate(g.rotation))
    es = tuple(replace(e, sign=1) for e in g.edges)
    return replace(g, edges=es, rotation=rot)


def induced_subgraph(g: EmbeddedGraph, keep: Iterable[int]) -> Tuple[EmbeddedGraph, List[int], List[int]]:
    """Subgraph on ``keep`` with rotations restricted to surviving half-edges.

    Returns ``(subgraph, old vertex of each new vertex, old edge of each new edge)``.
    """
    keep_sorted = sorted(set(keep))
    new_id = {v: i for i, v in enumerate(keep_sorted)}
    kept_edges = [e for e, ed in enumerate(g.edges) if ed.u in new_id and ed.v in new_id]
    new_edge = {e: i for i, e in enumerate(kept_edges)}
    edges = [replace(g.edges[e], u=new_id[g.edges[e].u], v=new_id[g.edges[e].v]) for e in kept_edges]
    rotation = []
    for v in keep_sorted:
        rotation.append(tuple(2 * new_edge[h >> 1] + (h & 1) for h in g.rotation[v] if (h >> 1) in new_edge))
    colors = tuple(g.colors[v] for v in keep_sorted) if g.colors is not None else None
    sub = EmbeddedGraph(len(keep_sorted), tuple(edges), tuple(rotation), colors, g.name)
    return sub, keep_sorted, kept_edges


def is_perfect_matching(g: EmbeddedGraph, m: Iterable[int]) -> bool:
    covered = [0] * g.vertex_count
    for e in m:
        ed = g.edges[e]
        covered[ed.u] += 1
        covered[ed.v] += 1
    return all(c == 1 for c in covered)


# -- derived graphs -----------------------------------------------------------

def _require_oriented(g: EmbeddedGraph, what: str) -> EmbeddedGraph:
    surface = validate(g)
    if surface != SPHERE:
        raise EmbeddingError(f"{what} needs a sphere embedding, got {surface}")
    return g if all(e.sign == 1 for e in g.edges) else orient(g)


def face_of_half_edge(g: EmbeddedGraph) -> Dict[int, int]:
    """For an all-positive embedding: face index of the side leaving along each half-edge."""
    out = {}
    for i, f in enumerate(g.faces):
        for h, o in f.sides:
            if o == 1:
                out[h] = i
    return out


def dual_graph(g: EmbeddedGraph, midpoints: bool = False) -> EmbeddedGraph:
    """Planar dual of a connected sphere graph.

    Dual vertex ``i`` is face ``i``; dual edge ``e`` crosses primal edge ``e``
    from the face on the side of half-edge ``2e`` to that of ``2e + 1``.  With
    ``midpoints`` each dual edge ``e`` becomes edges ``2e`` and ``2e + 1``
    through a new vertex ``F + e``.
    """
    g = _require_oriented(g, "dual_graph")
    if len(components(g)) > 1:
        raise EmbeddingError("dual_graph needs a connected graph")
    if not g.edges:
        return EmbeddedGraph(1, (), ((),), None, g.name + "*")
    fh = face_of_half_edge(g)
    nf = len(g.faces)
    rotation = [tuple(reversed(f.half_edges)) for f in g.faces]
    if not midpoints:
        edges = tuple(Edge(fh[2 * e], fh[2 * e + 1], ed.weight) for e, ed in enumerate(g.edges))
        return EmbeddedGraph(nf, edges, tuple(rotation), None, g.name + "*")
    edges = []
    for e in range(len(g.edges)):
        mid = nf + e
        edges.append(Edge(fh[2 * e], mid))
        edges.append(Edge(mid, fh[2 * e + 1]))
    rot = [tuple(4 * (h >> 1) + (3 if h & 1 else 0) for h in r) for r in rotation]
    rot += [(4 * e + 1, 4 * e + 2) for e in range(len(g.edges))]
    return EmbeddedGraph(nf + len(g.edges), tuple(edges), tuple(rot), None, g.name + "*mid")


def edge_graph(g: EmbeddedGraph) -> EmbeddedGraph:
    """Line graph of a sphere graph with every degree at most 3.

    One vertex per primal edge and one edge per pair of primal edges meeting
    at a vertex.  With degree <= 3 every such pair is consecutive around the
    vertex, so the result inherits a planar embedding.
    """
    g = _require_oriented(g, "edge_graph")
    for v in range(g.vertex_count):
        if g.degree(v) > 3:
            raise EmbeddingError(f"edge_graph needs degree <= 3, vertex {v} has {g.degree(v)}")
    for e, ed in enumerate(g.edges):
        if ed.u == ed.v:
            raise EmbeddingError(f"edge {e} is a loop")
    corner: Dict[int, int] = {}
    line_edges: List[Edge] = []
    for v, rot in enumerate(g.rotation):
        if len(rot) < 2:
            continue
        starts = rot if len(rot) == 3 else rot[:1]
        for h in starts:
            k = g.succ(h)
            corner[h] = len(line_edges)
            line_edges.append(Edge(h >> 1, k >> 1))
        if len(rot) == 2:
            corner[rot[1]] = corner[rot[0]]

    def half_at(L: int, e: int) -> int:
        return 2 * L if line_edges[L].u == e else 2 * L + 1

    rotation = []
    for e in range(len(g.edges)):
        h, hp = 2 * e, 2 * e + 1
        order = []
        for key in (g.pred(hp), h, g.pred(h), hp):
            L = corner.get(key)
            if L is not None and L not in order:
                order.append(L)
        rotation.append(tuple(half_at(L, e) for L in order))
    return EmbeddedGraph(len(g.edges), tuple(line_edges), tuple(rotation), None, g.name + "^L")


def _cyclic_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        i = list(b).index(a[0])
    except ValueError:
        return False
    return all(a[k] == b[(i + k) % len(b)] for k in range(len(a)))


def quotient_by_free_automorphism(g: EmbeddedGraph, perm: Sequence[int], order: Optional[int] = None,
                                  edge_perm: Optional[Sequence[int]] = None,
                                  reverses_orientation: Optional[bool] = None) -> EmbeddedGraph:
    """Quotient of a sphere graph by a cyclic group acting freely (see ``quotient_maps``)."""
    return quotient_maps(g, perm, order, edge_perm, reverses_orientation)[0]


def quotient_maps(g: EmbeddedGraph, perm: Sequence[int], order: Optional[int] = None,
                  edge_perm: Optional[Sequence[int]] = None,
                  reverses_orientation: Optional[bool] = None):
    """Quotient of a sphere graph by a cyclic group acting freely.

    ``perm`` maps vertices.  Without ``edge_perm`` the graph must have no
    parallel edges.  Whether ``perm`` reverses orientation is read off any
    vertex of degree >= 3; when every degree is <= 2 it defaults to reversing
    (the antipodal case) unless ``reverses_orientation`` says otherwise.

    Returns ``(quotient, vertex_map, half_edge_map)``; the maps send each
    vertex and half-edge of ``g`` to its orbit in the quotient.
    """
    g = _require_oriented(g, "quotient_by_free_automorphism")
    n = g.vertex_count
    perm = list(perm)
    if sorted(perm) != list(range(n)):
        raise EmbeddingError("vertex map is not a permutation")
    if order is None:
        order = 1
        v0 = 0 if n else None
        if v0 is not None:
            x = perm[0]
            while x != 0:
                x = perm[x]
                order += 1
    if edge_perm is None:
        lookup: Dict[Tuple[int, int], int] = {}
        for e, ed in enumerate(g.edges):
            key = (min(ed.u, ed.v), max(ed.u, ed.v))
            if key in lookup:
                raise EmbeddingError("parallel edges: pass edge_perm explicitly")
            lookup[key] = e
        edge_perm = []
        for ed in g.edges:
            a, b = perm[ed.u], perm[ed.v]
            key = (min(a, b), max(a, b))
            if key not in lookup:
                raise EmbeddingError("vertex map is not a graph automorphism")
            edge_perm.append(lookup[key])
    edge_perm = list(edge_perm)
    half = [0] * (2 * len(g.edges))
    for e, ed in enumerate(g.edges):
        f = edge_perm[e]
        fd = g.edges[f]
        if {fd.u, fd.v} != {perm[ed.u], perm[ed.v]}:
            raise EmbeddingError("edge map does not follow the vertex map")
        if ed.u == ed.v:
            raise EmbeddingError("loops are not supported in quotients")
        half[2 * e] = 2 * f + (0 if fd.u == perm[ed.u] else 1)
        half[2 * e + 1] = half[2 * e] ^ 1

    # orientation character
    chars = set()
    for v in range(n):
        image = [half[h] for h in g.rotation[v]]
        target = g.rotation[perm[v]]
        same = _cyclic_equal(image, target)
        rev = _cyclic_equal(image[::-1], target)
        if not same and not rev:
            raise EmbeddingError(f"rotation at vertex {v} is not preserved")
        if g.degree(v) >= 3:
            chars.add(1 if same else -1)
    if len(chars) > 1:
        raise EmbeddingError("automorphism mixes orientation preserving and reversing vertices")
    if reverses_orientation is not None:
        chi = -1 if reverses_orientation else 1
        if chars and chars != {chi}:
            raise EmbeddingError("declared orientation behaviour contradicts the rotations")
    else:
        chi = chars.pop() if chars else -1

    # freeness: every vertex and edge orbit has exactly `order` members
    def orbit(start, mapping):
        out = [start]
        x = mapping[start]
        while x != start:
            out.append(x)
            x = mapping[x]
        return out

    rep = [-1] * n
    power = [0] * n
    for v in range(n):
        if rep[v] >= 0:
            continue
        orb = orbit(v, perm)
        if len(orb) != order:
            raise EmbeddingError(f"vertex {v} has a nontrivial stabilizer")
        for j, w in enumerate(orb):
            rep[w] = v
            power[w] = j
    half_rep = [-1] * len(half)
    for h in range(len(half)):
        if half_rep[h] >= 0:
            continue
        orb = orbit(h, half)
        if len(orb) != order:
            raise EmbeddingError(f"edge {h >> 1} has a nontrivial stabilizer")
        if any(x == (h ^ 1) for x in orb):
            raise EmbeddingError(f"edge {h >> 1} is flipped onto itself")
        for x in orb:
            half_rep[x] = h
    vreps = sorted(set(rep))
    vindex = {r: i for i, r in enumerate(vreps)}
    ereps = sorted({half_rep[2 * e] >> 1 for e in range(len(g.edges))})
    eindex = {e: i for i, e in enumerate(ereps)}
    qedges = []
    for e in ereps:
        ed = g.edges[e]
        sign = chi ** (power[ed.u] + power[ed.v])
        qedges.append(Edge(vindex[rep[ed.u]], vindex[rep[ed.v]], ed.weight, sign))

    def qhalf(h: int) -> int:
        r = half_rep[h]
        return 2 * eindex[r >> 1] + (r & 1)

    qrot = tuple(tuple(qhalf(h) for h in g.rotation[r]) for r in vreps)
    q = EmbeddedGraph(len(vreps), tuple(qedges), qrot, None, g.name + "/g")
    validate(q)
    vertex_map = [vindex[rep[v]] for v in range(n)]
    half_map = [qhalf(h) for h in range(len(half))]
    return q, vertex_map, half_map
