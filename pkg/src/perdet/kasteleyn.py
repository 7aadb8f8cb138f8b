"""Kasteleyn weightings and orientations, and the counts they produce.

A weighting is a tuple of ring units indexed by edge.  An orientation is a
tuple of +1 (edge points ``u -> v``) or -1 (``v -> u``).  Counting goes
through ``|det|`` of the black-by-white matrix for bipartite sphere graphs and
``|Pf|`` of the signed adjacency matrix otherwise.
"""
from __future__ import annotations

from collections import deque
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .embedded import (BLACK, PROJECTIVE_PLANE, SPHERE, EmbeddedGraph, Face,
                       bipartite_coloring, components, induced_subgraph, is_locally_bipartite,
                       is_perfect_matching, quotient_by_free_automorphism, validate)
from .laurent import Laurent, RingElement, exact_div, is_unit, normalize
from .linalg import Matrix, det, gf2_affine_solve, pfaffian, pfaffian_interpolated, det_interpolated, smith_normal_form

__all__ = [
    "UnsupportedGraph",
    "coloring_of",
    "curvature",
    "flat_weighting",
    "flat_orientation",
    "prescribed_curvature_weighting",
    "kasteleyn_matrix",
    "signed_adjacency_matrix",
    "count_matchings",
    "weighted_matching_sum",
    "matching_term",
    "cokernel_of",
    "antipodal_square_check",
    "total_curvature",
    "loop_of",
    "positive_side_faces",
    "loop_ratio",
]


class UnsupportedGraph(ValueError):
    """The graph is outside what the determinant/Pfaffian method handles."""


def coloring_of(g: EmbeddedGraph) -> Optional[Tuple[str, ...]]:
    return g.colors if g.colors is not None else bipartite_coloring(g)


def _unit_inverse(x: RingElement) -> RingElement:
    if not is_unit(x):
        raise ValueError(f"weight {x} is not a unit")
    if isinstance(x, int):
        return x
    return normalize(x ** -1)


def _side_from_black(g: EmbeddedGraph, colors, h: int) -> bool:
    return colors[g.vertex_of(h)] == BLACK


def curvature(g: EmbeddedGraph, weights: Sequence[RingElement], face: Face,
              colors: Optional[Sequence[str]] = None) -> RingElement:
    """Kasteleyn curvature of ``face``; the face is flat when this is 1."""
    colors = colors if colors is not None else coloring_of(g)
    if colors is None:
        raise UnsupportedGraph("curvature needs a bipartite graph")
    if len(face) % 2:
        raise ValueError("odd-sided face has no curvature")
    value: RingElement = -1 if (len(face) // 2) % 2 == 0 else 1
    for h, _ in face.sides:
        w = weights[h >> 1]
        if w == 0:
            raise ValueError(f"edge {h >> 1} has zero weight")
        value = value * (w if _side_from_black(g, colors, h) else _unit_inverse(w))
    return normalize(value)


# -- flat weightings and orientations -------------------------------------------

def _face_bits(face: Face) -> int:
    mask = 0
    for h, _ in face.sides:
        mask ^= 1 << (h >> 1)
    return mask


def _solve_face_system(g: EmbeddedGraph, rhs: List[int], free_values=None) -> List[int]:
    rows = []
    for f in g.faces:
        mask = _face_bits(f)
        rows.append([(mask >> e) & 1 for e in range(len(g.edges))])
    ok, _, _, x = gf2_affine_solve(rows, rhs, len(g.edges), free_values)
    if not ok:
        raise UnsupportedGraph("face flatness system is inconsistent")
    return x


def flat_weighting(g: EmbeddedGraph, free_values: Optional[Sequence[int]] = None) -> Tuple[int, ...]:
    """A +-1 weighting with every face flat (bipartite sphere graphs).

    ``free_values`` picks a different solution of the underlying GF(2) system.
    """
    if validate(g) != SPHERE:
        raise UnsupportedGraph("flat weightings are built on the sphere only")
    if coloring_of(g) is None:
        raise UnsupportedGraph("flat weighting needs a bipartite graph")
    rhs = [(len(f) // 2 + 1) & 1 for f in g.faces]
    x = _solve_face_system(g, rhs, free_values)
    return tuple(-1 if b else 1 for b in x)


def flat_orientation(g: EmbeddedGraph, free_values: Optional[Sequence[int]] = None) -> Tuple[int, ...]:
    """An orientation with an odd number of edges along every face traversal.

    Works for sphere graphs and for projective-plane graphs that are locally
    but not globally bipartite.
    """
    surface = validate(g)
    if surface == PROJECTIVE_PLANE:
        if not is_locally_bipartite(g) or coloring_of(g) is not None:
            raise UnsupportedGraph("projective-plane graph must be locally but not globally bipartite")
    # side (h, o) goes along edge h//2 iff (h even) == (edge points u -> v)
    rhs = []
    for f in g.faces:
        even_sides = sum(1 for h, _ in f.sides if not h & 1)
        rhs.append((1 + even_sides) & 1)
    x = _solve_face_system(g, rhs, free_values)
    return tuple(-1 if b else 1 for b in x)


def _unit_parts(x: RingElement) -> Tuple[int, int]:
    """``(sign_bit, exponent)`` of a unit ``+-q^k``."""
    x = normalize(x)
    if not is_unit(x):
        raise ValueError(f"{x} is not a unit +-q^k")
    if isinstance(x, int):
        return (0 if x == 1 else 1), 0
    return (0 if x.coeffs[0] == 1 else 1), x.low


def _monomial(sign_bit: int, exponent: int) -> RingElement:
    c = -1 if sign_bit else 1
    return c if exponent == 0 else Laurent.monomial(exponent, c)


def prescribed_curvature_weighting(g: EmbeddedGraph, prescription: Mapping[int, RingElement],
                                   outer: Optional[int] = None) -> Tuple[RingElement, ...]:
    """Weighting by units ``+-q^k`` realising the given face curvatures.

    ``prescription`` maps face index to a unit.  Unlisted faces are flat,
    except ``outer`` (default: the face with most sides, lowest index on ties)
    whose value is forced by the product of all curvatures being 1.
    """
    if validate(g) != SPHERE:
        raise UnsupportedGraph("prescribed curvature needs a sphere graph")
    colors = coloring_of(g)
    if colors is None:
        raise UnsupportedGraph("prescribed curvature needs a bipartite graph")
    if len(components(g)) != 1:
        raise UnsupportedGraph("prescribed curvature needs a connected graph")
    faces = g.faces
    nf = len(faces)
    if outer is None:
        unlisted = [i for i in range(nf) if i not in prescription]
        pool = unlisted if unlisted else list(range(nf))
        outer = max(pool, key=lambda i: (len(faces[i]), -i))
    targets = [_unit_parts(prescription.get(i, 1)) for i in range(nf)]
    sign_total = sum(t[0] for i, t in enumerate(targets) if i != outer)
    exp_total = sum(t[1] for i, t in enumerate(targets) if i != outer)
    forced = (sign_total & 1, -exp_total)
    if outer in prescription and targets[outer] != forced:
        raise ValueError("prescribed curvatures do not multiply to 1")
    targets[outer] = forced

    # coefficient of each edge in each face: +1 leaving black, -1 leaving white
    coef: List[Dict[int, int]] = []
    for f in faces:
        row: Dict[int, int] = {}
        for h, _ in f.sides:
            e = h >> 1
            row[e] = row.get(e, 0) + (1 if _side_from_black(g, colors, h) else -1)
        coef.append({e: c for e, c in row.items() if c})
    sides_of: Dict[int, List[int]] = {}
    for i, row in enumerate(coef):
        for e in row:
            sides_of.setdefault(e, []).append(i)
    parent_edge = [-1] * nf
    order = [outer]
    seen = [False] * nf
    seen[outer] = True
    queue = deque([outer])
    while queue:
        f = queue.popleft()
        for e in sorted(coef[f]):
            for other in sides_of[e]:
                if not seen[other]:
                    seen[other] = True
                    parent_edge[other] = e
                    order.append(other)
                    queue.append(other)
    exps = [0] * len(g.edges)
    bits = [0] * len(g.edges)
    for f in reversed(order[1:]):
        e = parent_edge[f]
        want_sign = (len(faces[f]) // 2 + 1 + targets[f][0]) & 1
        want_exp = targets[f][1]
        acc_sign = sum(bits[x] for h, _ in faces[f].sides if (x := h >> 1) != e) & 1
        acc_exp = sum(c * exps[x] for x, c in coef[f].items() if x != e)
        bits[e] = (want_sign - acc_sign) & 1
        exps[e] = (want_exp - acc_exp) * coef[f][e]
    weights = tuple(_monomial(b, k) for b, k in zip(bits, exps))
    return weights


# -- matrices ---------------------------------------------------------------------

def kasteleyn_matrix(g: EmbeddedGraph, weights: Sequence[RingElement],
                     colors: Optional[Sequence[str]] = None) -> Tuple[Matrix, List[int], List[int]]:
    """Black-by-white weighted adjacency matrix with its row and column vertices."""
    colors = colors if colors is not None else coloring_of(g)
    if colors is None:
        raise UnsupportedGraph("graph is not bipartite")
    blacks = [v for v in range(g.vertex_count) if colors[v] == BLACK]
    whites = [v for v in range(g.vertex_count) if colors[v] != BLACK]
    row = {v: i for i, v in enumerate(blacks)}
    col = {v: j for j, v in enumerate(whites)}
    m: Matrix = [[0] * len(whites) for _ in blacks]
    for e, ed in enumerate(g.edges):
        b, w = (ed.u, ed.v) if colors[ed.u] == BLACK else (ed.v, ed.u)
        m[row[b]][col[w]] = normalize(m[row[b]][col[w]] + weights[e])
    return m, blacks, whites


def signed_adjacency_matrix(g: EmbeddedGraph, orientation: Sequence[int],
                            weights: Optional[Sequence[RingElement]] = None) -> Matrix:
    """Antisymmetric matrix with ``+w`` at (tail, head) and ``-w`` at (head, tail)."""
    weights = weights if weights is not None else [1] * len(g.edges)
    n = g.vertex_count
    a: Matrix = [[0] * n for _ in range(n)]
    for e, ed in enumerate(g.edges):
        if ed.u == ed.v:
            continue
        tail, head = (ed.u, ed.v) if orientation[e] == 1 else (ed.v, ed.u)
        a[tail][head] = normalize(a[tail][head] + weights[e])
        a[head][tail] = normalize(a[head][tail] - weights[e])
    return a


def _is_polynomial(m: Matrix) -> bool:
    return any(isinstance(x, Laurent) for row in m for x in row)


def _det(m: Matrix) -> RingElement:
    return det_interpolated(m) if len(m) > 24 and _is_polynomial(m) else det(m)


def _pf(m: Matrix) -> RingElement:
    return pfaffian_interpolated(m) if len(m) > 24 and _is_polynomial(m) else pfaffian(m)


# -- counting ----------------------------------------------------------------------

def _count_connected(g: EmbeddedGraph) -> int:
    if g.vertex_count % 2:
        return 0
    if g.vertex_count == 0:
        return 1
    surface = validate(g)
    colors = coloring_of(g)
    if colors is not None:
        if surface != SPHERE:
            raise UnsupportedGraph("bipartite projective-plane graphs are not Pfaffian in general")
        if 2 * sum(1 for c in colors if c == BLACK) != g.vertex_count:
            return 0
        m, _, _ = kasteleyn_matrix(g, flat_weighting(g), colors)
        return abs(det(m))
    return abs(pfaffian(signed_adjacency_matrix(g, flat_orientation(g))))


def count_matchings(g: EmbeddedGraph) -> int:
    """Number of perfect matchings, component by component."""
    validate(g)
    for e, ed in enumerate(g.edges):
        if ed.u == ed.v:
            raise UnsupportedGraph(f"edge {e} is a loop")
    comps = components(g)
    if len(comps) == 1:
        return _count_connected(g)
    total = 1
    for comp in comps:
        if len(comp) % 2:
            return 0
    for comp in comps:
        sub, _, _ = induced_subgraph(g, comp)
        total *= _count_connected(sub)
        if total == 0:
            break
    return total


def _permutation_sign(seq: Sequence[int]) -> int:
    seq = list(seq)
    sign = 1
    seen = [False] * len(seq)
    index = {v: i for i, v in enumerate(sorted(seq))}
    perm = [index[v] for v in seq]
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def matching_term(g: EmbeddedGraph, matching, weights: Sequence[RingElement],
                  orientation: Optional[Sequence[int]] = None,
                  colors: Optional[Sequence[str]] = None) -> RingElement:
    """Signed term of ``matching`` in det (bipartite, no orientation) or Pf (with orientation)."""
    matching = sorted(matching)
    if not is_perfect_matching(g, matching):
        raise ValueError("not a perfect matching")
    value: RingElement = 1
    if orientation is None:
        colors = colors if colors is not None else coloring_of(g)
        if colors is None:
            raise UnsupportedGraph("bipartite graph or an orientation required")
        blacks = [v for v in range(g.vertex_count) if colors[v] == BLACK]
        whites = [v for v in range(g.vertex_count) if colors[v] != BLACK]
        col = {v: j for j, v in enumerate(whites)}
        partner = {}
        for e in matching:
            ed = g.edges[e]
            b, w = (ed.u, ed.v) if colors[ed.u] == BLACK else (ed.v, ed.u)
            partner[b] = col[w]
            value = value * weights[e]
        return normalize(_permutation_sign([partner[b] for b in blacks]) * value)
    order = []
    for e in matching:
        ed = g.edges[e]
        i, j = sorted((ed.u, ed.v))
        tail = ed.u if orientation[e] == 1 else ed.v
        value = value * (weights[e] if tail == i else -weights[e])
        order.extend((i, j))
    return normalize(_permutation_sign(order) * value)


def weighted_matching_sum(g: EmbeddedGraph, weights: Optional[Sequence[RingElement]] = None,
                          reference=None, flat_signs: bool = False) -> RingElement:
    """det (bipartite sphere) or Pf (flat orientation) of the weighted matrix.

    Bipartite weights are used as given, so they should already carry
    Kasteleyn signs; ``flat_signs`` multiplies in a flat weighting first.  With
    a ``reference`` matching the result is divided by its term, so that
    matching counts +1.
    """
    weights = list(weights if weights is not None else g.weights)
    surface = validate(g)
    colors = coloring_of(g)
    if g.vertex_count % 2:
        return 0
    if colors is not None and surface == SPHERE:
        if flat_signs:
            weights = [normalize(w * s) for w, s in zip(weights, flat_weighting(g))]
        if 2 * sum(1 for c in colors if c == BLACK) != g.vertex_count:
            return 0
        m, _, _ = kasteleyn_matrix(g, weights, colors)
        total = _det(m)
        if reference is not None:
            total = exact_div(total, matching_term(g, reference, weights, colors=colors))
        return normalize(total)
    orientation = flat_orientation(g)
    total = _pf(signed_adjacency_matrix(g, orientation, weights))
    if reference is not None:
        total = exact_div(total, matching_term(g, reference, weights, orientation=orientation))
    return normalize(total)


def cokernel_of(g: EmbeddedGraph, weights: Optional[Sequence[int]] = None) -> List[int]:
    """Invariant factors of a flat-weighted Kasteleyn matrix over the integers."""
    colors = coloring_of(g)
    if colors is None:
        raise UnsupportedGraph("cokernel needs a bipartite graph")
    if 2 * sum(1 for c in colors if c == BLACK) != g.vertex_count:
        raise UnsupportedGraph("color classes differ in size")
    m, _, _ = kasteleyn_matrix(g, weights if weights is not None else flat_weighting(g), colors)
    return smith_normal_form(m)


def antipodal_square_check(g: EmbeddedGraph, involution: Sequence[int]) -> Tuple[int, int]:
    """Count ``g`` and its quotient by a color-reversing free involution; assert a square."""
    if validate(g) != SPHERE:
        raise UnsupportedGraph("antipodal check needs a sphere graph")
    colors = coloring_of(g)
    if colors is None:
        raise UnsupportedGraph("antipodal check needs a bipartite graph")
    if g.vertex_count % 4:
        raise UnsupportedGraph("vertex count must be divisible by 4")
    for v, w in enumerate(involution):
        if w == v:
            raise UnsupportedGraph(f"vertex {v} is fixed")
        if involution[w] != v:
            raise UnsupportedGraph("map is not an involution")
        if colors[w] == colors[v]:
            raise UnsupportedGraph("involution preserves colors")
    quotient = quotient_by_free_automorphism(g, involution, 2)
    whole = count_matchings(g)
    half = count_matchings(quotient)
    if whole != half * half:
        raise AssertionError(f"{whole} matchings is not the square of {half}")
    return whole, half


# -- loops between matchings -----------------------------------------------------------

def total_curvature(g: EmbeddedGraph, weights: Sequence[RingElement]) -> RingElement:
    """Product of the curvatures of all faces; 1 for any weighting of a sphere graph."""
    colors = coloring_of(g)
    out: RingElement = 1
    for f in g.faces:
        out = out * curvature(g, weights, f, colors)
    return normalize(out)


def loop_of(g: EmbeddedGraph, m1, m2) -> List[int]:
    """Half-edges of the single loop ``m1 ^ m2``, walked with ``m1`` edges black to white.

    Raises ``ValueError`` when the symmetric difference is empty or not one loop.
    """
    colors = coloring_of(g)
    if colors is None:
        raise UnsupportedGraph("loops are oriented by the bipartite coloring")
    diff = set(m1) ^ set(m2)
    if not diff:
        raise ValueError("matchings are equal")
    at: Dict[int, List[int]] = {}
    for e in diff:
        ed = g.edges[e]
        at.setdefault(ed.u, []).append(2 * e)
        at.setdefault(ed.v, []).append(2 * e + 1)
    start_e = min(set(m1) - set(m2))
    ed = g.edges[start_e]
    h = 2 * start_e if colors[ed.u] == BLACK else 2 * start_e + 1
    loop = []
    while True:
        loop.append(h)
        v = g.vertex_of(h ^ 1)
        nxt = [x for x in at[v] if x != (h ^ 1)]
        h = nxt[0]
        if h == loop[0]:
            break
    if len(loop) != len(diff):
        raise ValueError("symmetric difference is more than one loop")
    return loop


def positive_side_faces(g: EmbeddedGraph, loop: Sequence[int]) -> List[int]:
    """Faces on the side of an oriented loop whose orientation agrees with it."""
    if validate(g) != SPHERE or any(e.sign != 1 for e in g.edges):
        raise UnsupportedGraph("loop sides need an oriented sphere graph")
    fh = {}
    for i, f in enumerate(g.faces):
        for h, _ in f.sides:
            fh[h] = i
    on_loop = {h >> 1 for h in loop}
    seen = {fh[h] for h in loop}
    stack = list(seen)
    while stack:
        f = stack.pop()
        for h, _ in g.faces[f].sides:
            if h >> 1 in on_loop:
                continue
            other = fh[h ^ 1]
            if other not in seen:
                seen.add(other)
                stack.append(other)
    return sorted(seen)


def loop_ratio(g: EmbeddedGraph, weights: Sequence[RingElement], m1, m2) -> Tuple[RingElement, RingElement]:
    """``(t(m1) / t(m2), product of curvatures on the positive side of the loop)``.

    The two agree for every unit weighting when the matchings differ by one loop.
    """
    colors = coloring_of(g)
    ratio = exact_div(matching_term(g, m1, weights, colors=colors), matching_term(g, m2, weights, colors=colors))
    product: RingElement = 1
    for f in positive_side_faces(g, loop_of(g, m1, m2)):
        product = product * curvature(g, weights, g.faces[f], colors)
    return normalize(ratio), normalize(product)
