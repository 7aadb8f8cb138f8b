import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from perdet.embedded import UnsupportedSurface
from perdet.io import (ParseError, format_drawing, format_graph, format_network, parse_drawing, parse_graph,
                       parse_network)
from perdet.partitions import hexagon_graph, penrose_graph
from perdet.polyhedra import cube, dodecahedron, k4_projective, truncated_icosahedron
from perdet.laurent import Q
from perdet.transforms import carlitz_network, random_drawing, random_grid_network

GRAPHS = [cube(), dodecahedron(), k4_projective(), truncated_icosahedron(pentagon_weight=Q),
          hexagon_graph(2, 1, 3).graph, penrose_graph(1, 1, 1)]


@pytest.mark.parametrize("g", GRAPHS, ids=lambda g: g.name)
def test_graph_roundtrip(g):
    text = format_graph(g)
    back = parse_graph(text)
    assert back == g
    assert format_graph(back) == text


def test_graph_file_shape():
    text = format_graph(hexagon_graph(1, 1, 1).graph)
    assert text.startswith("graph hexagon_1_1_1\nvertices 6\n")
    assert text.endswith("\n") and "\r" not in text


def test_weights_and_signs_are_written():
    text = format_graph(k4_projective().with_weights([Q, 2, 1, 1, 1, -1]))
    assert "weight=q" in text and "sign=-1" in text and "weight=-1" in text


def test_comments_and_blank_lines():
    text = "# a square\ngraph sq\n\nvertices 4\n" + "".join(
        f"edge {i} {i} {(i + 1) % 4}  # side\n" for i in range(4)) + "rot 0 0 7\nrot 1 2 1\nrot 2 4 3\nrot 3 6 5\n"
    g = parse_graph(text)
    assert g.vertex_count == 4 and len(g.faces) == 2


@pytest.mark.parametrize("text,where", [
    ("graph x\n", "vertices"),
    ("vertices 2\nedge 0 0 1 weight=q^\nrot 0 0\nrot 1 1\n", "line 2"),
    ("vertices 2\nedge 0 0 1 colour=B\nrot 0 0\nrot 1 1\n", "line 2"),
    ("vertices two\n", "line 1"),
    ("vertices 2\nedge 0 0 1\nedge 0 0 1\n", "line 3"),
    ("vertices 2\nedge 1 0 1\nrot 0 2\nrot 1 3\n", "edge ids"),
    ("vertices 2\ncolor 0 R\n", "line 2"),
    ("vertices 2\nfrobnicate\n", "line 2"),
])
def test_parse_errors_name_the_problem(text, where):
    with pytest.raises(ParseError, match=where):
        parse_graph(text)


def test_torus_parses_as_unsupported_not_malformed():
    with pytest.raises(UnsupportedSurface):
        parse_graph("vertices 1\nedge 0 0 0\nedge 1 0 0\nrot 0 0 2 1 3\n")


def test_network_roundtrip():
    for p in (carlitz_network(2, 1, 2), random_grid_network(random.Random(4), 3, 4, 2)):
        text = format_network(p)
        back = parse_network(text)
        assert back == p
        assert format_network(back) == text


def test_network_with_rotations_only():
    p = carlitz_network(1, 1, 1)
    text = "\n".join(line for line in format_network(p).splitlines() if not line.startswith("point"))
    text += "\n" + "\n".join(f"rot {v} " + " ".join(map(str, r)) for v, r in enumerate(p.rotation))
    assert parse_network(text) == p


def test_cyclic_network_rejected():
    text = "network c\nvertices 3\npoint 0 0 0\npoint 1 1 0\npoint 2 0 1\narc 0 0 1\narc 1 1 2\narc 2 2 0\n"
    with pytest.raises(ParseError, match="cycle"):
        parse_network(text)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=20)
def test_drawing_roundtrip(seed):
    d = random_drawing(random.Random(seed), 3, 3, 6, weights=(1, Q, -2))
    text = format_drawing(d)
    assert parse_drawing(text) == d
    assert format_drawing(parse_drawing(text)) == text


def test_drawing_rationals():
    d = parse_drawing("drawing d\npoint 0 1/3 0\npoint 1 2 -5/7\nedge 0 0 1\n")
    assert d.points[0] == (Fraction(1, 3), Fraction(0))
    assert "point 1 2 -5/7" in format_drawing(d)
