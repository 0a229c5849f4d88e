import csv
import io
import json
from importlib import resources

import jsonschema
import pytest

from amicable_lattice import cli
from amicable_lattice.rhombus import RhombusResult, StarSolution, Variant, rhombus_solutions

SCHEMA = json.loads(resources.files("amicable_lattice").joinpath("report.schema.json").read_text())


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_star_json(capsys):
    code, out, _ = run(capsys, "solve-star", "--format", "json")
    rep = json.loads(out)
    assert code == 0
    jsonschema.validate(rep, SCHEMA)
    assert rep["hits"] == [{"kappa": 4, "m": 1, "n": 1, "s": 0, "x": 4, "a": 4}]


def test_solve_starstar_json(capsys):
    code, out, _ = run(capsys, "solve-starstar", "--format", "json")
    assert code == 0
    assert json.loads(out)["hits"] == [{"k": 5, "mu": 1, "n": 1, "s": 15, "x": 5, "a": 5}]


def test_search_rhombus_csv(capsys):
    code, out, _ = run(capsys, "search-rhombus", "--bound", "100", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["x", "a", "s1", "s2"], ["4", "4", "0", "0"], ["5", "5", "15", "15"]]


def test_verify_pair_negative_is_success(capsys):
    code, out, _ = run(capsys, "verify-pair", "2", "3", "4", "4")
    assert code == 0
    assert "not amicable" in out


def test_verify_pair_positive_json(capsys):
    code, out, _ = run(capsys, "verify-pair", "5", "5", "2", "10", "--format", "json")
    rep = json.loads(out)
    jsonschema.validate(rep, SCHEMA)
    (hit,) = rep["hits"]
    assert hit["amicable"] and hit["kind"] == "AMICABLE_NONTRIVIAL+RECTANGLE_DEGENERATE"
    # roots follow the order the sides were given
    assert hit["s1"] ** 2 == 25 * 25 - 4 * 12 ** 2
    assert hit["s2"] ** 2 == 20 ** 2 - 4 * 10 ** 2


def test_embed_pair(capsys):
    code, out, _ = run(capsys, "embed-pair", "5", "5", "5", "5", "--format", "json")
    rep = json.loads(out)
    jsonschema.validate(rep, SCHEMA)
    assert code == 0 and rep["status"] == "PASS"
    assert [h["area2"] for h in rep["hits"]] == [40, 40]


def test_elliptic(capsys):
    code, out, _ = run(capsys, "elliptic", "--format", "json")
    (hit,) = json.loads(out)["hits"]
    assert code == 0
    assert (hit["X"], hit["Y"], hit["p"], hit["q"], hit["on_curve"]) == (1152, 41472, 0, 191102976, True)


def test_elliptic_bad_input(capsys):
    code, _, err = run(capsys, "elliptic", "3", "1", "1")
    assert code == 2 and "does not solve" in err
    code, _, _ = run(capsys, "elliptic", "3", "1")
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["search-rhombus"],
    ["search-rhombus", "--bound", "0"],
    ["verify-pair", "1", "2", "3"],
    ["no-such-command"],
    ["solve-star", "--jobs", "0"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "usage" in err


def test_cross_check_pass(capsys):
    code, out, _ = run(capsys, "cross-check", "--bound", "4", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "PASS"
    assert [(h["x"], h["a"]) for h in rep["hits"]] == [(4, 4)]


def test_cross_check_injected_fault(capsys, monkeypatch):
    fake = RhombusResult(7, 7, StarSolution(1, 1, 1, 0, Variant.STAR))
    monkeypatch.setattr(cli, "rhombus_solutions", lambda: rhombus_solutions() + [fake])
    code, out, _ = run(capsys, "cross-check", "--bound", "50", "--format", "json")
    rep = json.loads(out)
    assert code == 1 and rep["status"] == "FAIL"
    assert rep["solver_only"] == [[7, 7]]


def test_search_rectangles_reports_both_totals(capsys):
    code, out, _ = run(capsys, "search-rectangles", "--format", "json")
    rep = json.loads(out)
    jsonschema.validate(rep, SCHEMA)
    assert rep["complete"] and rep["equables"] == [[3, 6], [4, 4]]
    assert (rep["pairs_with_trivial"], rep["pairs_without_trivial"]) == (7, 5)


def test_csv_headers_are_fixed(capsys):
    for argv in (["solve-star"], ["solve-starstar"], ["search-rectangles"],
                 ["search-parallelograms", "--bound", "3"], ["verify-pair", "2", "3", "4", "4"],
                 ["embed-pair", "4", "4", "4", "4"], ["elliptic"], ["cross-check", "--bound", "5"]):
        _, out, _ = run(capsys, *argv, "--format", "csv")
        assert out.splitlines()[0] == ",".join(cli.COLUMNS[argv[0]])


def test_output_file(tmp_path, capsys):
    path = tmp_path / "rep.csv"
    code, out, _ = run(capsys, "search-rhombus", "--bound", "10", "--format", "csv", "-o", str(path))
    data = path.read_bytes()
    assert code == 0 and out == ""
    assert data.endswith(b"\n") and b"\r" not in data
    data.decode("utf-8")


def test_timing_only_on_request(capsys):
    _, out, _ = run(capsys, "search-rhombus", "--bound", "10", "--format", "json")
    assert json.loads(out)["elapsed_ms"] is None
    _, out, _ = run(capsys, "search-rhombus", "--bound", "10", "--format", "json", "--timing")
    assert isinstance(json.loads(out)["elapsed_ms"], int)


def test_big_integers_become_strings():
    rep = {"hits": [{"v": 2 ** 53, "w": 2 ** 53 + 1, "z": -(2 ** 60), "flag": True}]}
    safe = cli._json_safe(rep)
    assert safe["hits"][0] == {"v": 2 ** 53, "w": str(2 ** 53 + 1), "z": str(-(2 ** 60)), "flag": True}


def test_text_output(capsys):
    code, out, _ = run(capsys, "search-parallelograms", "--bound", "12", "--embed")
    assert code == 0
    assert "status: PASS" in out and "embedding_failures: 0" in out
