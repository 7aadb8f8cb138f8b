"""Line-oriented text formats for graphs, path networks and drawings.

Every record is one line of space-separated fields; ``#`` starts a comment.
Canonical output always round-trips byte for byte.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .embedded import BLACK, WHITE, EmbeddedGraph, Edge, UnsupportedSurface, validate
from .laurent import format_poly, parse_poly
from .transforms import Drawing, PathNetwork

__all__ = [
    "ParseError",
    "format_graph",
    "parse_graph",
    "format_network",
    "parse_network",
    "format_drawing",
    "parse_drawing",
]


class ParseError(ValueError):
    """Malformed input file; the message names the offending line."""


def _records(text: str):
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _int(token: str, number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {number}: expected an integer, got {token!r}") from None


def _fraction(token: str, number: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"line {number}: expected a rational number, got {token!r}") from None


def _options(tokens: List[str], number: int) -> Dict[str, str]:
    out = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep or key not in ("weight", "sign"):
            raise ParseError(f"line {number}: unknown field {tok!r}")
        out[key] = value
    return out


def _weight(opts: Dict[str, str], number: int):
    if "weight" not in opts:
        return 1
    try:
        return parse_poly(opts["weight"])
    except ValueError as exc:
        raise ParseError(f"line {number}: {exc}") from None


def _weight_field(w) -> str:
    return "" if w == 1 else f" weight={format_poly(w)}"


def _name(name: str) -> str:
    return "_".join(name.split()) or "unnamed"


def _frac_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _indexed(items: Dict[int, object], count: int, what: str):
    if sorted(items) != list(range(count)):
        raise ParseError(f"{what} ids must be 0..{count - 1} without gaps")
    return [items[i] for i in range(count)]


# -- graphs -----------------------------------------------------------------------

def format_graph(g: EmbeddedGraph) -> str:
    lines = [f"graph {_name(g.name)}", f"vertices {g.vertex_count}"]
    if g.colors is not None:
        lines += [f"color {v} {c}" for v, c in enumerate(g.colors)]
    for e, ed in enumerate(g.edges):
        sign = "" if ed.sign == 1 else " sign=-1"
        lines.append(f"edge {e} {ed.u} {ed.v}{_weight_field(ed.weight)}{sign}")
    for v, rot in enumerate(g.rotation):
        lines.append(" ".join(["rot", str(v)] + [str(h) for h in rot]))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> EmbeddedGraph:
    name, n = "", None
    colors: Dict[int, str] = {}
    edges: Dict[int, Edge] = {}
    rotation: Dict[int, List[int]] = {}
    for number, tok in _records(text):
        kind, args = tok[0], tok[1:]
        if kind == "graph":
            name = " ".join(args)
        elif kind == "vertices" and len(args) == 1:
            n = _int(args[0], number)
        elif kind == "color" and len(args) == 2:
            if args[1] not in (BLACK, WHITE):
                raise ParseError(f"line {number}: color must be B or W")
            colors[_int(args[0], number)] = args[1]
        elif kind == "edge" and len(args) >= 3:
            e, u, v = (_int(a, number) for a in args[:3])
            opts = _options(args[3:], number)
            sign = _int(opts.get("sign", "1").lstrip("+"), number)
            if e in edges:
                raise ParseError(f"line {number}: edge {e} defined twice")
            edges[e] = Edge(u, v, _weight(opts, number), sign)
        elif kind == "rot" and len(args) >= 1:
            rotation[_int(args[0], number)] = [_int(a, number) for a in args[1:]]
        else:
            raise ParseError(f"line {number}: unrecognized record {' '.join(tok)!r}")
    if n is None:
        raise ParseError("missing 'vertices' record")
    for v in range(n):
        rotation.setdefault(v, [])
    if colors and len(colors) != n:
        raise ParseError("colors must be given for all vertices or none")
    g = EmbeddedGraph.build(n, _indexed(edges, len(edges), "edge"), _indexed(rotation, n, "vertex"),
                            _indexed(colors, n, "color") if colors else None, name=name)
    try:
        validate(g)
    except UnsupportedSurface:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return g


# -- path networks ------------------------------------------------------------------

def format_network(p: PathNetwork, name: str = "network") -> str:
    lines = [f"network {_name(name)}", f"vertices {p.vertex_count}"]
    if p.points is not None:
        lines += [f"point {v} {_frac_text(x)} {_frac_text(y)}" for v, (x, y) in enumerate(p.points)]
    for a, (t, h, w) in enumerate(p.arcs):
        lines.append(f"arc {a} {t} {h}{_weight_field(w)}")
    if p.points is None:
        for v, rot in enumerate(p.rotation):
            lines.append(" ".join(["rot", str(v)] + [str(h) for h in rot]))
    lines += [f"source {s}" for s in p.sources]
    lines += [f"sink {t}" for t in p.sinks]
    return "\n".join(lines) + "\n"


def parse_network(text: str) -> PathNetwork:
    """Either ``point`` records (rotation from geometry) or ``rot`` records are required."""
    n = None
    points: Dict[int, Tuple[Fraction, Fraction]] = {}
    arcs: Dict[int, tuple] = {}
    rotation: Dict[int, List[int]] = {}
    sources, sinks = [], []
    for number, tok in _records(text):
        kind, args = tok[0], tok[1:]
        if kind == "network":
            continue
        if kind == "vertices" and len(args) == 1:
            n = _int(args[0], number)
        elif kind == "point" and len(args) == 3:
            points[_int(args[0], number)] = (_fraction(args[1], number), _fraction(args[2], number))
        elif kind == "arc" and len(args) >= 3:
            a, t, h = (_int(x, number) for x in args[:3])
            arcs[a] = (t, h, _weight(_options(args[3:], number), number))
        elif kind == "rot" and len(args) >= 1:
            rotation[_int(args[0], number)] = [_int(x, number) for x in args[1:]]
        elif kind == "source" and len(args) == 1:
            sources.append(_int(args[0], number))
        elif kind == "sink" and len(args) == 1:
            sinks.append(_int(args[0], number))
        else:
            raise ParseError(f"line {number}: unrecognized record {' '.join(tok)!r}")
    if n is None:
        raise ParseError("missing 'vertices' record")
    arc_list = _indexed(arcs, len(arcs), "arc")
    try:
        if points:
            p = PathNetwork.from_points(_indexed(points, n, "point"), arc_list, sources, sinks)
        else:
            for v in range(n):
                rotation.setdefault(v, [])
            p = PathNetwork(n, tuple(arc_list), tuple(sources), tuple(sinks),
                            tuple(tuple(r) for r in _indexed(rotation, n, "vertex")))
        p.check()
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return p


# -- drawings -------------------------------------------------------------------------

def format_drawing(d: Drawing, name: str = "drawing") -> str:
    lines = [f"drawing {_name(name)}", f"vertices {len(d.points)}"]
    lines += [f"point {v} {_frac_text(x)} {_frac_text(y)}" for v, (x, y) in enumerate(d.points)]
    if d.colors is not None:
        lines += [f"color {v} {c}" for v, c in enumerate(d.colors)]
    for e, (u, v, w) in enumerate(d.edges):
        lines.append(f"edge {e} {u} {v}{_weight_field(w)}")
    return "\n".join(lines) + "\n"


def parse_drawing(text: str) -> Drawing:
    points: Dict[int, Tuple[Fraction, Fraction]] = {}
    colors: Dict[int, str] = {}
    edges: Dict[int, tuple] = {}
    n: Optional[int] = None
    for number, tok in _records(text):
        kind, args = tok[0], tok[1:]
        if kind == "drawing":
            continue
        if kind == "vertices" and len(args) == 1:
            n = _int(args[0], number)
        elif kind == "point" and len(args) == 3:
            points[_int(args[0], number)] = (_fraction(args[1], number), _fraction(args[2], number))
        elif kind == "color" and len(args) == 2 and args[1] in (BLACK, WHITE):
            colors[_int(args[0], number)] = args[1]
        elif kind == "edge" and len(args) >= 3:
            e, u, v = (_int(x, number) for x in args[:3])
            edges[e] = (u, v, _weight(_options(args[3:], number), number))
        else:
            raise ParseError(f"line {number}: unrecognized record {' '.join(tok)!r}")
    count = n if n is not None else len(points)
    pts = _indexed(points, count, "point")
    edge_list = _indexed(edges, len(edges), "edge")
    for u, v, _ in edge_list:
        if not (0 <= u < count and 0 <= v < count):
            raise ParseError(f"edge endpoint out of range in {u} {v}")
    d = Drawing.build(pts, edge_list, _indexed(colors, count, "color") if colors else None)
    try:
        d.coloring()
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return d
