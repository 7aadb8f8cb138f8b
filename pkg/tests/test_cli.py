import io
import subprocess
import sys

import pytest

from perdet import polyhedra
from perdet.cli import main
from perdet.kasteleyn import count_matchings
from perdet.partitions import cstcpp_graph, hexagon_graph, penrose_graph, tcpp_graph
from perdet.transforms import carlitz_network, gv_split
from perdet.verify import TESLER_PENTAGON_POLYNOMIAL
from perdet.laurent import format_poly


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def gen(tmp_path, capsys):
    def make(*args):
        path = tmp_path / "_".join(args).replace("/", "_")
        assert main(["gen", *args, "-o", str(path)]) == 0
        capsys.readouterr()
        return str(path)
    return make


LIBRARY = {
    ("hexagon", "2", "1", "2"): lambda: hexagon_graph(2, 1, 2).graph,
    ("penrose", "1", "1", "1"): lambda: penrose_graph(1, 1, 1),
    ("tcpp", "1", "2"): lambda: tcpp_graph(1, 2),
    ("cstcpp", "1"): lambda: cstcpp_graph(1),
    ("cube",): polyhedra.cube,
    ("tetrahedron",): polyhedra.tetrahedron,
    ("octahedron",): polyhedra.octahedron,
    ("dodecahedron",): polyhedra.dodecahedron,
    ("icosahedron",): polyhedra.icosahedron,
    ("rubik",): polyhedra.rubik,
    ("c60",): polyhedra.truncated_icosahedron,
    ("k4-projective",): polyhedra.k4_projective,
    ("cycle", "6"): lambda: polyhedra.cycle(6),
    ("path", "4"): lambda: polyhedra.path(4),
    ("carlitz", "2", "2", "1"): lambda: gv_split(carlitz_network(2, 2, 1)),
}


@pytest.mark.parametrize("kind", list(LIBRARY), ids=lambda k: "_".join(k))
def test_gen_then_count_matches_library(kind, gen, capsys):
    path = gen(*kind)
    code, out, _ = run(capsys, "count", path)
    assert code == 0
    assert out == f"{count_matchings(LIBRARY[kind]())}\n"


@pytest.mark.parametrize("kind,expected", [("icosahedron", "125"), ("dodecahedron", "36"), ("cube", "9")])
def test_count_examples(kind, expected, gen, capsys):
    path = gen(kind)
    for method in ("auto", "pf", "brute"):
        assert run(capsys, "count", path, "--method", method)[1] == expected + "\n"


def test_count_det_and_pf_agree_on_hexagon(gen, capsys):
    path = gen("hexagon", "2", "2", "2")
    assert {run(capsys, "count", path, "--method", m)[1] for m in ("det", "pf", "brute", "auto")} == {"20\n"}


def test_gen_output_is_deterministic(gen):
    first, second = gen("hexagon", "2", "1", "1"), gen("hexagon", "2", "1", "1")
    assert open(first).read() == open(second).read()


def test_gen_hexagon_111_has_six_vertices(capsys):
    code, out, _ = run(capsys, "gen", "hexagon", "1", "1", "1")
    assert code == 0 and "vertices 6\n" in out


def test_gen_dodecahedron_shape(capsys):
    out = run(capsys, "gen", "dodecahedron")[1]
    assert "vertices 20\n" in out and sum(1 for line in out.splitlines() if line.startswith("edge ")) == 30


def test_gen_c60_tags_pentagon_edges(capsys):
    out = run(capsys, "gen", "c60")[1]
    weights = [line for line in out.splitlines() if line.startswith("edge ") and "weight=q" in line]
    assert len(weights) == 60


def test_edge_graph_of_file(gen, capsys):
    path = gen("dodecahedron")
    code, out, _ = run(capsys, "gen", "edge-graph-of", path)
    assert code == 0 and "vertices 30\n" in out


def test_stdin_input(capsys, monkeypatch):
    text = run(capsys, "gen", "hexagon", "2", "2", "2")[1]
    assert run(capsys, "count", "-", stdin=text, monkeypatch=monkeypatch)[1] == "20\n"


@pytest.mark.parametrize("dims,scheme,expected", [
    (("1", "1", "1"), "uniform:q", "1+q"),
    (("2", "2", "2"), "minus1", "4"),
    (("3", "2", "2"), "minus1", "6"),
    (("2", "2", "2"), "strange3:-1,1,1", "1"),
    (("2", "2", "2"), "strangeN:-1,1", "16"),
    (("1", "1", "2"), "uniform:q^2", "1+q^2+q^4"),
])
def test_weighted_hexagon(dims, scheme, expected, gen, capsys):
    path = gen("hexagon", *dims)
    assert run(capsys, "weighted", path, "--scheme", scheme)[1] == expected + "\n"


def test_weighted_c60_is_the_pentagon_polynomial(gen, capsys):
    path = gen("c60")
    assert run(capsys, "weighted", path)[1] == format_poly(TESLER_PENTAGON_POLYNOMIAL) + "\n"


def test_weighted_generic_graph(gen, capsys):
    path = gen("cube")
    out = run(capsys, "weighted", path, "--scheme", "uniform:q")[1]
    assert out == "1+q+2q^2+q^3+2q^4+q^5+q^6\n"


def test_weighted_with_prescription_file(gen, capsys, tmp_path):
    path = gen("hexagon", "1", "1", "1")
    spec = tmp_path / "faces.txt"
    spec.write_text("# the single internal hexagon\nface 0 q\n")
    assert run(capsys, "weighted", path, "--scheme", f"file:{spec}")[1] == "1+q\n"


def test_weighted_strange3_needs_hexagon(gen, capsys):
    assert run(capsys, "weighted", gen("cube"), "--scheme", "strange3:1,1,1")[0] == 3


@pytest.mark.parametrize("dims,expected", [(("2", "2", "2"), "2 10"), (("1", "1", "1"), "2"), (("1", "1", "3"), "4"),
                                           (("0", "0", "0"), "")])
def test_cokernel(dims, expected, gen, capsys):
    assert run(capsys, "cokernel", gen("hexagon", *dims))[1] == expected + "\n"


@pytest.mark.parametrize("argv,code", [
    (["gen", "hexagon", "1", "x", "1"], 2),
    (["gen", "hexagon", "1", "1"], 2),
    (["gen", "nonsense"], 2),
    (["gen", "penrose", "2", "1", "1"], 2),
    (["count", "/does/not/exist"], 2),
    (["count"], 2),
    (["weighted", "-", "--scheme", "strange3:2,1,1"], 2),
    (["verify", "nonsense"], 2),
])
def test_input_errors_exit_2(argv, code, capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(""))
    assert main(argv) == code
    assert capsys.readouterr().err


def test_unsupported_cases_exit_3(gen, capsys, tmp_path):
    assert run(capsys, "count", gen("icosahedron"), "--method", "det")[0] == 3
    assert run(capsys, "cokernel", gen("tetrahedron"))[0] == 3
    torus = tmp_path / "torus"
    torus.write_text("vertices 1\nedge 0 0 0\nedge 1 0 0\nrot 0 0 2 1 3\n")
    assert run(capsys, "count", str(torus))[0] == 3
    assert run(capsys, "count", gen("rubik"), "--method", "brute")[0] == 3


def test_parse_error_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad"
    bad.write_text("vertices 2\nedge 0 0 9\n")
    code, out, err = run(capsys, "count", str(bad))
    assert code == 2 and out == "" and "out of range" in err


def test_network_files(gen, capsys):
    path = gen("carlitz", "2", "2", "2")
    for method in ("det", "brute", "auto"):
        assert run(capsys, "count", path, "--method", method)[1] == "20\n"
    assert run(capsys, "count", path, "--method", "pf")[0] == 3
    assert run(capsys, "cokernel", path)[1] == "2 10\n"


def test_drawing_files(capsys, tmp_path):
    path = tmp_path / "k33"
    pts = ["0 0", "101/100 1/7", "2 1/3", "0 2", "99/100 21/10", "203/100 19/10"]
    lines = ["drawing k33", "vertices 6"] + [f"point {i} {p}" for i, p in enumerate(pts)]
    lines += [f"color {i} {'B' if i < 3 else 'W'}" for i in range(6)]
    lines += [f"edge {3 * b + w} {b} {3 + w}" for b in range(3) for w in range(3)]
    path.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "gen", "graph-of", str(path))
    assert code == 0 and out.startswith("graph butterfly\n")


def test_verify_deterministic_and_passing(capsys):
    code, first, _ = run(capsys, "verify", "macmahon", "2", "--no-timing")
    assert code == 0
    lines = first.splitlines()
    assert len(lines) == 27 and all(line.startswith("PASS ") for line in lines)
    assert run(capsys, "verify", "macmahon", "2", "--no-timing")[1] == first


def test_verify_macmahon_4_has_125_lines(capsys):
    code, out, _ = run(capsys, "verify", "macmahon", "4")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 125
    assert all(line.startswith("PASS ") and line.endswith(" ms]") for line in lines)


def test_verify_failure_exits_1(capsys, monkeypatch):
    from perdet import verify

    def failing(n):
        yield verify.Check("one equals two", 1, 2)

    monkeypatch.setitem(verify.SUITES, "broken", (failing, 0))
    code, out, _ = run(capsys, "verify", "broken", "--no-timing")
    assert code == 1 and out == "FAIL one equals two: 1 vs 2\n"


def test_module_entry_point():
    result = subprocess.run([sys.executable, "-m", "perdet.cli", "gen", "hexagon", "1", "1", "1"],
                            capture_output=True, text=True, check=True)
    counted = subprocess.run([sys.executable, "-m", "perdet.cli", "count", "-"], input=result.stdout,
                             capture_output=True, text=True)
    assert counted.returncode == 0 and counted.stdout == "2\n"
