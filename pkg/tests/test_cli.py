import json
import subprocess
import sys

import pytest

from convsemi.cli import main

SQUARE = {"dimension": 2, "vertices": [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]],
          "join_kind": "componentwise_max"}


@pytest.fixture
def files(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_membership(capsys, files):
    code, out = run(capsys, "membership", files("sq.json", SQUARE), "--point", "2", "2")
    assert code == 0
    assert out["member"] is True and out["p_max"] == "1/2"
    assert out["witness"] == {"center": ["0", "0"], "ratio": "1/2"}
    assert out["translation"] is None


def test_membership_query_file(capsys, files):
    q = files("q.json", {"instance": SQUARE, "point": ["-1/2", "3"]})
    code, out = run(capsys, "membership", "--query", q)
    assert code == 0 and out["member"] is True


def test_join(capsys, files):
    code, out = run(capsys, "join", files("sq.json", SQUARE), "--x", "2", "0", "--y", "0", "2")
    assert code == 0 and out["result"] == ["2", "2"]
    assert out["witness"] == {"center": ["0", "0"], "ratio": "1/6"}


def test_join_with_explicit_witness(capsys, files):
    code, out = run(capsys, "join", files("sq.json", SQUARE), "--x", "2", "0", "--y", "0", "2",
                    "--center", "1/2", "1/2", "--ratio", "1/4")
    assert code == 0 and out["result"] == ["2", "2"]


def test_support(capsys, files):
    tri = {"dimension": 2, "vertices": [["0", "0"], ["1", "0"], ["0", "1"]]}
    code, out = run(capsys, "support", files("tri.json", tri),
                    "--direction", "1", "0", "--direction", "0", "1", "--direction", "1", "1")
    assert code == 0 and out["values"] == ["1", "1", "1"]


@pytest.mark.parametrize("argv,expected", [
    (["--swap", "1/2", "1/3"], {"r": "1/2", "s": "3/4"}),
    (["--assoc-pq", "1/2", "1/2"], {"p": "1/2", "q": "1/2", "r": "2/3", "s": "1/4"}),
    (["--assoc-pr", "1/2", "1/4"], {"p": "1/2", "q": "6/7", "r": "1/4", "s": "3/7"}),
])
def test_solve_params(capsys, argv, expected):
    code, out = run(capsys, "solve-params", *argv)
    assert code == 0 and out == expected


def test_shifted_square_is_translated(capsys, files):
    shifted = dict(SQUARE, vertices=[["1", "1"], ["2", "1"], ["1", "2"], ["2", "2"]])
    path = files("shift.json", shifted)
    code, out = run(capsys, "membership", path, "--point", "1", "1")
    assert code == 0 and out["translation"] == ["-1", "-1"] and out["p_max"] == "1"
    code, out = run(capsys, "check", path, "--laws", "model", "--cases", "30")
    assert code == 0 and out["passed"] and out["translation"] == ["-1", "-1"]


@pytest.mark.parametrize("data", [
    {"dimension": 2, "vertices": [["0", "0"], ["1", "0"], ["0", "1"]]},
    {"dimension": 2, "vertices": []},
    {"dimension": 2, "vertices": [["0.5", "0"]]},
])
def test_bad_instances(capsys, files, data):
    code, out = run(capsys, "membership", files("bad.json", data), "--point", "0", "0")
    assert code == 2 and "error" in out


def test_bad_input_errors(capsys, files):
    code, out = run(capsys, "membership", "/nonexistent.json", "--point", "0", "0")
    assert code == 2
    code, out = run(capsys, "check", files("sq.json", SQUARE), "--laws", "nope")
    assert code == 2 and "unknown law" in out["message"]
    code, out = run(capsys, "solve-params", "--swap", "0", "0")
    assert code == 2
    code, out = run(capsys, "membership", files("sq.json", SQUARE))
    assert code == 2


def test_check_perspective_only(capsys, files, tmp_path):
    code, out = run(capsys, "check", files("sq.json", SQUARE), "--laws", "perspective",
                    "--cases", "20", "--out", str(tmp_path / "b"))
    assert code == 0
    assert [r["law"] for r in out["results"]] == ["perspective_calculus"]
    assert sorted(p.name for p in (tmp_path / "b").iterdir()) == ["perspective_calculus.json", "summary.json"]


def test_check_mutation_fails_with_counterexample(capsys, files, tmp_path):
    code, out = run(capsys, "check", files("sq.json", SQUARE), "--laws", "semilattice",
                    "--cases", "20", "--mutate", "join", "--out", str(tmp_path / "m"))
    assert code == 1 and out["passed"] is False
    rep = json.loads((tmp_path / "m" / "semilattice_axioms.json").read_text())
    v = rep["violations"][0]
    assert v["identity"] == "x(+)y = y(+)x"
    assert v["lhs"] == v["inputs"]["x"] and v["rhs"] == v["inputs"]["y"]


def test_bundle_is_byte_identical(capsys, files, tmp_path):
    sq = files("sq.json", SQUARE)
    for name in ("a", "b"):
        assert main(["check", sq, "--laws", "model", "w-axioms", "--cases", "15", "--seed", "42",
                     "--out", str(tmp_path / name)]) == 0
    capsys.readouterr()
    a = {p.name: p.read_bytes() for p in (tmp_path / "a").iterdir()}
    b = {p.name: p.read_bytes() for p in (tmp_path / "b").iterdir()}
    assert a == b and len(a) == 7


def test_module_entry_point(files):
    out = subprocess.run([sys.executable, "-m", "convsemi", "solve-params", "--swap", "1/2", "1/2"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout) == {"r": "2/3", "s": "2/3"}


@pytest.mark.slow
def test_full_suite_seed_42(capsys, files):
    code, out = run(capsys, "check", files("sq.json", SQUARE), "--seed", "42", "--cases", "1000")
    assert code == 0 and out["passed"]
    assert all(r["status"] == "PASS" and r["violations"] == 0 for r in out["results"])
    assert len(out["results"]) == 22
