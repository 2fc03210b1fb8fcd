import json
import subprocess
import sys

import pytest

from dicut.cli import main
from dicut.graph_core import format_instance, parse_instance, read_instance


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def gen_file(capsys, tmp_path, *argv):
    path = tmp_path / "g.txt"
    code, _, _ = run(capsys, "gen", *argv, "--out", str(path))
    assert code == 0
    return path


def test_gen_tournament(capsys, tmp_path):
    d = read_instance(gen_file(capsys, tmp_path, "tournament", "--k", "2"))
    assert (d.n, d.m) == (5, 10)


def test_gen_appendix_and_staircase(capsys, tmp_path):
    assert read_instance(gen_file(capsys, tmp_path, "appendix", "--nu", "8")).m == 13
    assert read_instance(gen_file(capsys, tmp_path, "staircase", "--n", "9")).m == 23


@pytest.mark.parametrize("argv", [
    ("random-dag", "--n", "7", "--seed", "3"),
    ("random-digraph", "--n", "6", "--wden", "3"),
    ("bounded-cycle", "--n", "8", "--l", "3", "--density", "2/3"),
    ("two-tournament", "--k", "3", "--theta", "1/4"),
    ("staircase-trimmed", "--m", "30"),
])
def test_gen_roundtrip_byte_identical(capsys, argv):
    code, out, _ = run(capsys, "gen", *argv)
    assert code == 0
    assert format_instance(parse_instance(out)) == out
    code, again, _ = run(capsys, "gen", *argv)
    assert again == out


def test_gen_usage_errors(capsys):
    assert run(capsys, "gen", "tournament")[0] == 2
    assert run(capsys, "gen", "two-tournament", "--k", "4", "--theta", "1/4")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["gen", "nonsense"])
    assert info.value.code == 2


def test_exact_reports_ratio(capsys, tmp_path):
    path = gen_file(capsys, tmp_path, "appendix", "--nu", "7")
    code, out, _ = run(capsys, "exact", str(path), "--json")
    report = json.loads(out)
    assert code == 0 and report["ratio"] == "3/8"


def test_exact_empty_and_triangle(capsys, tmp_path):
    empty = tmp_path / "e.txt"
    empty.write_text("3 0\n")
    assert "mac = 0" in run(capsys, "exact", str(empty))[1]
    tri = tmp_path / "t.txt"
    tri.write_text("3 3\n0 1 1\n1 2 1\n2 0 1\n")
    assert "mac = 1" in run(capsys, "exact", str(tri))[1]


def test_exact_too_large(capsys, tmp_path):
    path = gen_file(capsys, tmp_path, "random-dag", "--n", "30")
    code, _, err = run(capsys, "exact", str(path))
    assert code == 3 and "cap" in err
    assert run(capsys, "exact", str(path), "--max-n", "5")[0] == 3


def test_exact_missing_or_bad_file(capsys, tmp_path):
    assert run(capsys, "exact", str(tmp_path / "missing.txt"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n0 0 1\n")
    assert run(capsys, "exact", str(bad))[0] == 2


def test_bound_json_schema(capsys, tmp_path):
    path = gen_file(capsys, tmp_path, "tournament", "--k", "3")
    code, out, _ = run(capsys, "bound", "theta", str(path), "--json")
    report = json.loads(out)
    assert code == 0
    for key in ("algorithm", "n", "m", "w", "guarantee", "achieved", "cut", "seed", "elapsed_ms"):
        assert key in report
    assert report["guarantee"] == "21/4" and report["passed"]


def test_bound_dag_on_path(capsys, tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("4 3\n0 1 1\n1 2 1\n2 3 1\n")
    code, out, _ = run(capsys, "bound", "dag", str(path))
    assert code == 0 and out.strip().endswith("PASS")


def test_bound_scc_randomized(capsys, tmp_path):
    path = gen_file(capsys, tmp_path, "bounded-cycle", "--n", "10", "--l", "4", "--seed", "2")
    code, out, _ = run(capsys, "bound", "scc", str(path), "--randomized", "--trials", "20", "--seed", "9", "--json")
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert report["randomized"]["trials"] == 20
    assert report["seed"] == 9


def test_bound_precondition_surfaces(capsys, tmp_path):
    tri = tmp_path / "t.txt"
    tri.write_text("3 3\n0 1 1\n1 2 1\n2 0 1\n")
    code, _, err = run(capsys, "bound", "dag", str(tri))
    assert code == 2 and "cycle" in err


def test_cnu_json(capsys):
    code, out, _ = run(capsys, "cnu", "7", "--json")
    report = json.loads(out)
    assert code == 0 and report["value"] == "3/8"
    assert report["primal"] == report["dual"] == "8/3"
    assert report["best_response"] == report["min_coverage"] == "3/8"


def test_cnu_out_of_range(capsys):
    assert run(capsys, "cnu", "20")[0] == 2


def test_verify_suites(capsys):
    for suite in ("appendix", "claims"):
        code, out, _ = run(capsys, "verify", suite)
        assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "appendix")
    assert out.count("PASS") == 10


def test_verify_bounds_suite(capsys):
    code, out, _ = run(capsys, "verify", "bounds", "--seed", "3")
    assert code == 0 and "FAIL" not in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dicut", "cnu", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and "c_3 = 1/2" in proc.stdout
