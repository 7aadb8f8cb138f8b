"""``perdet`` command line: generate graph files, count and enumerate matchings, run checks.

Exit codes: 0 success, 1 a verification check failed, 2 bad input, 3 unsupported case.
"""
from __future__ import annotations

import argparse
import os
import re
import sys
from typing import Callable, Dict, List, Optional, Sequence

from . import polyhedra, verify
from .embedded import EmbeddedGraph, UnsupportedSurface, edge_graph
from .io import ParseError, format_graph, format_network, parse_drawing, parse_graph, parse_network
from .kasteleyn import (UnsupportedGraph, cokernel_of, count_matchings, flat_orientation, flat_weighting,
                        kasteleyn_matrix, coloring_of, prescribed_curvature_weighting, signed_adjacency_matrix,
                        weighted_matching_sum)
from .laurent import Q, Laurent, format_poly, normalize, parse_poly
from .linalg import det, nontrivial_factors, pfaffian
from .oracle import BudgetExceeded, count_matchings_brute
from .partitions import CubeWeightScheme, cstcpp_graph, hexagon_graph, penrose_graph, scheme_weighted_sum, tcpp_graph
from .transforms import PathNetwork, butterfly_planarize, carlitz_network, gv_matrix, gv_split, triangulate

__all__ = ["main", "build_parser"]


class InputError(Exception):
    """Bad command-line input; exit status 2."""


class Unsupported(Exception):
    """Valid input outside what the method handles; exit status 3."""


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _file_kind(text: str) -> str:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].split()
        if line:
            return line[0] if line[0] in ("network", "drawing") else "graph"
    return "graph"


def _load_graph(path: str) -> EmbeddedGraph:
    text = _read(path)
    kind = _file_kind(text)
    if kind == "network":
        return gv_split(parse_network(text))
    if kind == "drawing":
        return butterfly_planarize(parse_drawing(text))
    return parse_graph(text)


def _ints(params: Sequence[str], count: int, kind: str) -> List[int]:
    if len(params) != count:
        raise InputError(f"{kind} takes {count} integer parameter(s), got {len(params)}")
    try:
        values = [int(p) for p in params]
    except ValueError:
        raise InputError(f"{kind} parameters must be integers: {' '.join(params)}") from None
    if any(v < 0 for v in values):
        raise InputError(f"{kind} parameters must be nonnegative")
    return values


def _fixed(factory: Callable[[], EmbeddedGraph]):
    def build(params):
        _ints(params, 0, factory.__name__)
        return factory()
    return build


def _from_file(transform: Callable[[EmbeddedGraph], EmbeddedGraph], kind: str):
    def build(params):
        if len(params) != 1:
            raise InputError(f"{kind} takes one file argument")
        return transform(_load_graph(params[0]))
    return build


def _triangulated(g: EmbeddedGraph) -> EmbeddedGraph:
    return triangulate(g)[0]


def _numbered(name: str, factory, count: int):
    def build(params):
        values = _ints(params, count, name)
        try:
            return factory(*values)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    return build


GENERATORS: Dict[str, Callable[[Sequence[str]], object]] = {
    "hexagon": _numbered("hexagon", lambda a, b, c: hexagon_graph(a, b, c).graph, 3),
    "penrose": _numbered("penrose", penrose_graph, 3),
    "tcpp": _numbered("tcpp", tcpp_graph, 2),
    "cstcpp": _numbered("cstcpp", cstcpp_graph, 1),
    "cube": _fixed(polyhedra.cube),
    "tetrahedron": _fixed(polyhedra.tetrahedron),
    "octahedron": _fixed(polyhedra.octahedron),
    "dodecahedron": _fixed(polyhedra.dodecahedron),
    "icosahedron": _fixed(polyhedra.icosahedron),
    "rubik": _fixed(polyhedra.rubik),
    "k4-projective": _fixed(polyhedra.k4_projective),
    "c60": lambda params: (_ints(params, 0, "c60"), polyhedra.truncated_icosahedron(pentagon_weight=Q))[1],
    "cycle": _numbered("cycle", polyhedra.cycle, 1),
    "path": _numbered("path", polyhedra.path, 1),
    "carlitz": _numbered("carlitz", carlitz_network, 3),
    "edge-graph-of": _from_file(edge_graph, "edge-graph-of"),
    "triangulate": _from_file(_triangulated, "triangulate"),
    # network and drawing files are converted on load
    "graph-of": _from_file(lambda g: g, "graph-of"),
}


# -- commands ---------------------------------------------------------------------------

def cmd_gen(args) -> str:
    if args.kind not in GENERATORS:
        raise InputError(f"unknown kind {args.kind!r}; choose from {', '.join(sorted(GENERATORS))}")
    result = GENERATORS[args.kind](args.params)
    if isinstance(result, PathNetwork):
        return format_network(result, f"{args.kind}_{'_'.join(args.params)}")
    return format_graph(result)


def _count_network(p: PathNetwork, method: str) -> int:
    if method in ("det", "auto"):
        m = gv_matrix(p)
        return abs(det(m)) if m else 1
    if method == "brute":
        return count_matchings_brute(gv_split(p))
    raise Unsupported("a path network has no Pfaffian; use det, brute or auto")


def cmd_count(args) -> str:
    text = _read(args.file)
    if _file_kind(text) == "network":
        return f"{_count_network(parse_network(text), args.method)}\n"
    g = _load_graph(args.file) if _file_kind(text) == "drawing" else parse_graph(text)
    if args.method == "auto":
        return f"{count_matchings(g)}\n"
    if args.method == "brute":
        return f"{count_matchings_brute(g)}\n"
    if g.vertex_count % 2:
        return "0\n"
    if args.method == "det":
        colors = coloring_of(g)
        if colors is None:
            raise Unsupported("det needs a bipartite graph")
        if g.surface != "sphere":
            raise Unsupported("det counts matchings only on the sphere")
        if 2 * colors.count("B") != g.vertex_count:
            return "0\n"
        m, _, _ = kasteleyn_matrix(g, flat_weighting(g), colors)
        return f"{abs(det(m))}\n"
    return f"{abs(pfaffian(signed_adjacency_matrix(g, flat_orientation(g))))}\n"


_SCHEME_RE = re.compile(r"^(uniform:(?P<u>.+)|minus1|strange3:(?P<s3>[^,]+,[^,]+,[^,]+)|strangeN:(?P<sn>[^,]+,[^,]+))$")


def _unit_list(text: str) -> List[int]:
    values = []
    for tok in text.split(","):
        if tok.strip() not in ("1", "-1", "+1"):
            raise InputError(f"strange weights must be 1 or -1, got {tok!r}")
        values.append(int(tok))
    return values


def parse_scheme(text: str) -> CubeWeightScheme:
    match = _SCHEME_RE.match(text)
    if not match:
        raise InputError(f"unknown scheme {text!r}")
    if match["u"] is not None:
        try:
            return CubeWeightScheme.uniform(normalize(parse_poly(match["u"])))
        except ValueError as exc:
            raise InputError(str(exc)) from None
    if match["s3"] is not None:
        return CubeWeightScheme.strange3(*_unit_list(match["s3"]))
    if match["sn"] is not None:
        return CubeWeightScheme.strange_n(*_unit_list(match["sn"]))
    return CubeWeightScheme.minus_one()


def _read_prescription(path: str) -> Dict[int, object]:
    """Records ``face <index> <poly>``; faces not listed are flat except the largest."""
    out = {}
    for number, raw in enumerate(_read(path).splitlines(), 1):
        tok = raw.split("#", 1)[0].split()
        if not tok:
            continue
        if len(tok) != 3 or tok[0] != "face" or not tok[1].isdigit():
            raise InputError(f"{path} line {number}: expected 'face <index> <poly>'")
        try:
            out[int(tok[1])] = normalize(parse_poly(tok[2]))
        except ValueError as exc:
            raise InputError(f"{path} line {number}: {exc}") from None
    return out


def _regenerated_hexagon(g: EmbeddedGraph):
    found = re.fullmatch(r"hexagon_(\d+)_(\d+)_(\d+)", g.name)
    if not found:
        return None
    h = hexagon_graph(*(int(x) for x in found.groups()))
    return h if h.graph == g else None


def _lowest_positive(x):
    """Fix the overall sign so the lowest coefficient is positive."""
    x = normalize(x)
    if isinstance(x, Laurent):
        return normalize(-x) if x.coeffs[0] < 0 else x
    return abs(x)


def _lowest_monic(x):
    """Divide out the lowest monomial, for sums known only up to a unit."""
    x = _lowest_positive(x)
    if isinstance(x, Laurent):
        return normalize(Laurent(coeffs=x.coeffs))
    return x


def cmd_weighted(args) -> str:
    g = _load_graph(args.file)
    if args.scheme is None:
        bipartite = coloring_of(g) is not None and g.surface == "sphere"
        value = weighted_matching_sum(g, flat_signs=bipartite)
        return format_poly(value if args.raw else _lowest_positive(value)) + "\n"
    if args.scheme.startswith("file:"):
        prescription = _read_prescription(args.scheme[5:])
        try:
            weights = prescribed_curvature_weighting(g, prescription)
        except (UnsupportedGraph, ValueError) as exc:
            raise Unsupported(str(exc)) from None
        value = weighted_matching_sum(g, weights)
        return format_poly(value if args.raw else _lowest_monic(value)) + "\n"
    scheme = parse_scheme(args.scheme)
    h = _regenerated_hexagon(g)
    if h is not None:
        try:
            value = scheme_weighted_sum(h, scheme)
        except ValueError as exc:
            raise Unsupported(str(exc)) from None
        return format_poly(value if args.raw else _lowest_positive(value)) + "\n"
    if scheme.kind not in ("uniform", "minus1"):
        raise Unsupported(f"{scheme.kind} needs a generated hexagon graph")
    if coloring_of(g) is None:
        raise Unsupported("curvature prescription needs a bipartite graph")
    faces = g.faces
    outer = max(range(len(faces)), key=lambda i: (len(faces[i]), -i))
    prescription = {i: scheme.values[0] for i in range(len(faces)) if i != outer}
    weights = prescribed_curvature_weighting(g, prescription, outer=outer)
    value = weighted_matching_sum(g, weights)
    return format_poly(value if args.raw else _lowest_monic(value)) + "\n"


def cmd_cokernel(args) -> str:
    g = _load_graph(args.file)
    return " ".join(str(f) for f in nontrivial_factors(cokernel_of(g))) + "\n"


def cmd_verify(args, out) -> int:
    if args.suite not in verify.SUITES:
        raise InputError(f"unknown suite {args.suite!r}; choose from {', '.join(verify.SUITES)}")
    size = verify.SUITES[args.suite][1] if args.size is None else args.size
    if size < 0:
        raise InputError("size must be nonnegative")

    def emit(line):
        out.write(line + "\n")
        out.flush()

    return 0 if verify.run_suite(args.suite, size, emit, timing=not args.no_timing) else 1


# -- entry point ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="perdet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a generated graph or network file")
    gen.add_argument("kind", help=", ".join(sorted(GENERATORS)))
    gen.add_argument("params", nargs="*")
    gen.add_argument("-o", "--output", default="-", help="output path (default stdout)")

    count = sub.add_parser("count", help="number of perfect matchings")
    count.add_argument("file", help="graph, network or drawing file; - for stdin")
    count.add_argument("--method", choices=["det", "pf", "brute", "auto"], default="auto")

    weighted = sub.add_parser("weighted", help="weighted matching sum as a polynomial in q")
    weighted.add_argument("file")
    weighted.add_argument("--scheme", help="uniform:<poly> | minus1 | strange3:s,t,u | strangeN:s,t | file:<path>")
    weighted.add_argument("--raw", action="store_true",
                          help="print the determinant as computed, without sign or unit normalization")

    cokernel = sub.add_parser("cokernel", help="nontrivial invariant factors of the Kasteleyn matrix")
    cokernel.add_argument("file")

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", help=", ".join(verify.SUITES))
    ver.add_argument("size", nargs="?", type=int)
    ver.add_argument("--no-timing", action="store_true", help="omit timings for byte-identical output")
    return parser


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        if args.command == "verify":
            return cmd_verify(args, sys.stdout)
        if args.command == "gen":
            _write(args.output, cmd_gen(args))
        else:
            handler = {"count": cmd_count, "weighted": cmd_weighted, "cokernel": cmd_cokernel}[args.command]
            sys.stdout.write(handler(args))
        return 0
    except (InputError, ParseError) as exc:
        print(f"perdet: {exc}", file=sys.stderr)
        return 2
    except (Unsupported, UnsupportedGraph, UnsupportedSurface, BudgetExceeded, ValueError) as exc:
        print(f"perdet: unsupported: {exc}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
