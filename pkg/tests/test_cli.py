import json

from weightpoly.builders import SideData, polygon_hrep
from weightpoly.cli import main
from weightpoly.polytopes import combinatorial_fingerprint, h_to_v, remove_redundant

PENTAGON = ["--m", "1", "--r", "3,3,3,3,3"]
HEXAGON = ["--m", "1", "--r", "3,3,3,3,4"]


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_vertices_text_pentagon(capsys):
    code, out, _ = run(capsys, ["vertices"] + PENTAGON)
    assert code == 0
    assert out.splitlines() == ["(0, 3)", "(3, 0)", "(3, 6)", "(6, 3)", "(6, 6)"]


def test_vertices_json_matches_library(capsys):
    code, out, _ = run(capsys, ["vertices", "--format", "json"] + PENTAGON)
    assert code == 0
    expected = h_to_v(polygon_hrep(SideData.from_weights(1, (3, 3, 3, 3, 3))))
    assert json.loads(out) == expected.to_json_dict()


def test_facets_text_frozen(capsys):
    code, out, _ = run(capsys, ["facets"] + PENTAGON)
    assert code == 0
    assert sorted(out.splitlines()) == sorted([
        "N1(2): 1,0 <= 6",
        "N3(3): 1,-1 <= 3",
        "N1(3): -1,1 <= 3",
        "N2(3): -1,-1 <= -3",
        "N3(4): 0,1 <= 6",
    ])


def test_polytope_entry_chart(capsys):
    code, out, _ = run(capsys, ["polytope", "--chart", "entry"] + HEXAGON)
    assert code == 0
    assert out.splitlines()[0] == "dim: 2"


def test_ehrhart_default_entry_chart(capsys):
    code, out, _ = run(capsys, ["ehrhart"] + HEXAGON)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "counts: 1,11,33,67,113,171,241"
    assert "mode: polynomial" in lines


def test_mult_and_fibers(capsys):
    code, out, _ = run(capsys, ["mult"] + HEXAGON)
    assert (code, out.strip()) == (0, "11")
    code, out, _ = run(capsys, ["fibers", "--m", "1", "--n", "6"])
    assert (code, out.strip()) == (0, "8")


def test_verify_identity_exit_zero(capsys):
    code, out, _ = run(capsys, ["verify-identity"] + HEXAGON)
    assert code == 0
    assert out.splitlines()[-1] == "all pass"


def test_dual_pass_and_fail_exit_codes(capsys):
    code, out, _ = run(capsys, ["dual"] + HEXAGON)
    assert code == 0
    assert out.splitlines()[-1] == "all pass"
    code, out, _ = run(capsys, ["dual", "--m", "1", "--r", "2,4,4,3,4"])
    assert code == 1
    assert out.splitlines()[-1] == "FAILED"


def test_fingerprint_matches_library(capsys):
    code, out, _ = run(capsys, ["fingerprint"] + PENTAGON)
    s = SideData.from_weights(1, (3, 3, 3, 3, 3))
    assert code == 0
    assert out.strip() == combinatorial_fingerprint(polygon_hrep(s))


def test_paper_examples_all_pass(capsys):
    code, out, _ = run(capsys, ["paper-examples"])
    assert code == 0
    assert out.splitlines()[-1] == "all pass"
    code, out, _ = run(capsys, ["paper-examples", "--format", "json"])
    assert code == 0
    assert all(c["pass"] for c in json.loads(out)["claims"])


def test_side_file_input(capsys, tmp_path):
    p = tmp_path / "side.json"
    p.write_text(json.dumps({"m": 1, "r": ["3", "3", "3", "3", "3"]}))
    code, out, _ = run(capsys, ["vertices", "--side-file", str(p)])
    assert code == 0
    assert len(out.splitlines()) == 5


def test_polytope_file_input(capsys, tmp_path):
    s = SideData.from_weights(1, (3, 3, 3, 3, 4))
    p = tmp_path / "poly.json"
    p.write_text(json.dumps(remove_redundant(polygon_hrep(s)).to_json_dict()))
    code, out, _ = run(capsys, ["vertices", "--polytope-file", str(p)])
    assert code == 0
    assert len(out.splitlines()) == 6


def test_usage_errors_exit_two(capsys, tmp_path):
    code, _, err = run(capsys, ["vertices", "--m", "1"])
    assert code == 2 and "need --m and --r" in err
    code, _, err = run(capsys, ["vertices", "--m", "1", "--r", "3,x"])
    assert code == 2
    code, _, err = run(capsys, ["vertices", "--m", "1", "--r", "1,1,1"])
    assert code == 2  # three sides have no diagonal chart
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, ["vertices", "--side-file", str(bad)])
    assert code == 2 and "cannot read side file" in err
    code, _, err = run(capsys, ["mult"] + PENTAGON)
    assert code == 2  # P = 15/2 is not an integral weight


def test_output_is_byte_stable(capsys):
    _, first, _ = run(capsys, ["singular", "--format", "json"] + HEXAGON)
    _, second, _ = run(capsys, ["singular", "--format", "json"] + HEXAGON)
    assert first == second
    json.loads(first)
