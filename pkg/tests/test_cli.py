import json
import subprocess
import sys

import pytest

from decomplab.cli import EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, run


def run_json(capsys, argv):
    code = run(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def canonical(report):
    report = dict(report)
    report.pop("elapsed_ms")
    return json.dumps(report, sort_keys=True)


def test_verify_thm1_pass(capsys):
    code, report = run_json(capsys, ["verify-thm1", "--limit", "1000"])
    assert code == EXIT_OK
    assert report["command"] == "verify-thm1"
    assert report["result"]["passed"] is True
    assert report["result"]["first_mismatch"] is None
    assert report["result"]["composite_count"] == report["result"]["covered_count"] == 828


def test_verify_exception_golden(capsys):
    code, report = run_json(capsys, ["verify-exception", "--limit", "20"])
    assert code == EXIT_OK
    report.pop("elapsed_ms")
    assert report == {
        "command": "verify-exception",
        "params": {"limit": 20, "threads": None},
        "result": {
            "family_count": 12,
            "first_mismatch": None,
            "limit": 20,
            "passed": True,
            "product_count": 12,
        },
        "version": "0.1.0",
        "witnesses": [],
    }


def test_reports_are_deterministic(capsys):
    _, first = run_json(capsys, ["hk", "--gamma", "2,3", "--k", "2", "--limit", "50"])
    _, second = run_json(capsys, ["hk", "--gamma", "2,3", "--k", "2", "--limit", "50"])
    assert canonical(first) == canonical(second)


def test_hk_elements(capsys):
    code, report = run_json(capsys, ["hk", "--gamma", "2", "--k", "2", "--limit", "20"])
    assert code == EXIT_OK
    assert report["result"]["elements"] == [2, 3, 5, 9, 17]
    code, report = run_json(
        capsys, ["hk", "--gamma", "2", "--k", "3", "--le", "--limit", "20"]
    )
    assert report["result"]["elements"] == [1, 2, 3, 4, 5, 6, 8, 9, 10, 16, 17, 18]


def test_semigroup_list(capsys):
    code, report = run_json(
        capsys, ["semigroup", "list", "--gamma", "6,35", "--limit", "40"]
    )
    assert code == EXIT_OK
    assert report["command"] == "semigroup list"
    assert report["result"]["elements"] == [1, 6, 35, 36]


def test_gamma_validation_is_usage_error(capsys):
    code = run(["semigroup", "list", "--gamma", "6,10", "--limit", "40"])
    err = capsys.readouterr().err
    assert code == EXIT_USAGE
    assert "coprime" in err


def test_sieve_cache(tmp_path, capsys):
    cache = tmp_path / "s.psv"
    code, report = run_json(capsys, ["sieve", "--limit", "1000", "--cache", str(cache)])
    assert code == EXIT_OK
    assert report["result"]["prime_count"] == 168
    assert report["result"]["cache_used"] is False
    assert cache.exists()
    code, report = run_json(capsys, ["sieve", "--limit", "1000", "--cache", str(cache)])
    assert report["result"]["cache_used"] is True


def test_smooth_writes_text_format(tmp_path, capsys):
    out = tmp_path / "smooth.txt"
    code, report = run_json(
        capsys,
        ["smooth", "--policy", "composites", "--limit", "20", "--out", str(out)],
    )
    assert code == EXIT_OK
    assert report["result"]["elements"] == [4, 6, 8, 9, 10, 12, 14, 15, 16, 18, 20]
    lines = out.read_text().splitlines()
    assert lines[0] == "# window 1 20"
    assert [int(x) for x in lines[1:]] == report["result"]["elements"]


def test_smooth_policy_flag_requirements(capsys):
    assert run(["smooth", "--policy", "fixed", "--limit", "10"]) == EXIT_USAGE
    code, report = run_json(
        capsys, ["smooth", "--policy", "fixed", "--bound", "2", "--limit", "10"]
    )
    assert code == EXIT_OK and report["result"]["elements"] == [1, 2, 4, 8]


def test_tuple_admissible_exit_codes(capsys):
    code, report = run_json(capsys, ["tuple", "admissible", "--offsets", "0,2,6"])
    assert code == EXIT_OK and report["result"]["admissible"] is True
    code, report = run_json(capsys, ["tuple", "admissible", "--offsets", "0,2,4"])
    assert code == EXIT_FAIL and report["result"]["admissible"] is False


def test_tuple_select_triple(capsys):
    code, report = run_json(capsys, ["tuple", "select-triple", "--b2", "1", "--b3", "2"])
    assert code == EXIT_OK
    assert report["result"] == {"b2": 1, "b3": 2, "case": "t4", "offsets": [-1, 1]}


def test_tuple_find(capsys):
    code, report = run_json(
        capsys,
        ["tuple", "find", "--offsets=-1,1", "--window", "3,10", "--composite-center"],
    )
    assert code == EXIT_OK
    assert report["result"]["elements"] == [4, 6]
    code, report = run_json(
        capsys, ["tuple", "find", "--offsets=-1,1", "--window", "24,28"]
    )
    assert code == EXIT_INCONCLUSIVE and report["result"]["elements"] == []


def test_witness_add(capsys):
    code, report = run_json(
        capsys, ["witness", "add", "--b", "0,2", "--n0", "9", "--limit", "100000"]
    )
    assert code == EXIT_OK
    assert report["result"]["n"] == 15
    assert report["witnesses"][0]["validated"] is True
    assert report["witnesses"][0]["primes"] == [13, 17]


def test_witness_add_inconclusive(capsys):
    code, report = run_json(
        capsys, ["witness", "add", "--b", "0,2", "--n0", "9", "--limit", "12"]
    )
    assert code == EXIT_INCONCLUSIVE
    assert report["result"]["found"] is False and report["witnesses"] == []


def test_witness_mul(capsys):
    code, report = run_json(
        capsys, ["witness", "mul", "--b", "1,2", "--n0", "1", "--t-hi", "1000"]
    )
    assert code == EXIT_OK
    assert report["result"]["n"] == 300
    w = report["witnesses"][0]
    assert w["branch"] == "unit" and w["plan"]["prog_step"] == 120
    code, report = run_json(
        capsys, ["witness", "mul", "--b", "2,3", "--n0", "10", "--t-hi", "10"]
    )
    assert code == EXIT_OK and report["result"]["branch"] == "nonunit"


def test_decompose_composites(capsys):
    code, report = run_json(
        capsys,
        [
            "decompose", "--kind", "additive", "--composites", "--window", "9,10000",
            "--max-b-size", "4", "--max-b-elem", "5",
        ],
    )
    assert code == EXIT_OK
    parts = [c["b"] for c in report["result"]["candidates"]]
    assert [0, 1, 3, 5] in parts


def test_decompose_target_file(tmp_path, capsys):
    from decomplab import IntegerSet

    path = tmp_path / "t.txt"
    IntegerSet((0, 1, 2, 3), 0, 3).save_text(path)
    code, report = run_json(
        capsys,
        ["decompose", "--kind", "additive", "--target-file", str(path),
         "--max-b-size", "2", "--max-b-elem", "3"],
    )
    assert code == EXIT_OK
    assert [c["b"] for c in report["result"]["candidates"]] == [[0, 1], [0, 2]]


def test_sunit_report(capsys):
    code, report = run_json(
        capsys, ["sunit", "--coeffs", "1,1,-1", "--gamma", "2,3", "--height", "100"]
    )
    assert code == EXIT_OK
    reps = {tuple(c["representative"]) for c in report["result"]["classes"]}
    assert (1, 8, 9) in reps
    assert not any(c["degenerate"] for c in report["result"]["classes"])


def test_l_set_report(capsys):
    code, report = run_json(
        capsys,
        ["l-set", "--gamma", "2,3", "--k", "2", "--height", "100", "--eps-height", "10"],
    )
    assert code == EXIT_OK
    assert {1, 2, 3, 4, 8, 9} <= set(report["result"]["elements"])


def test_two_term_report(capsys):
    code, report = run_json(
        capsys,
        ["two-term", "--t2", "3", "--t1", "1", "--n", "2", "--c", "1", "--cap", "20"],
    )
    assert code == EXIT_OK
    assert report["result"]["solutions"] == [[0, 1]]
    assert report["result"]["min_exponent_bound"] == 0


def test_mprim_scan_exit_codes(capsys):
    code, report = run_json(
        capsys,
        ["mprim-scan", "--gamma", "2", "--k", "3", "--le", "--limit", "65536",
         "--max-b-size", "2", "--max-b-elem", "2"],
    )
    assert code == EXIT_OK
    assert report["result"]["found_parts"] == [[1, 2]]
    assert report["result"]["consistent"] is True
    code, report = run_json(
        capsys,
        ["mprim-scan", "--gamma", "2,3", "--k", "2", "--limit", "10000",
         "--max-b-size", "3", "--max-b-elem", "20"],
    )
    assert code == EXIT_OK and report["result"]["found_parts"] == []


def test_usage_errors(capsys):
    assert run([]) == EXIT_USAGE
    assert run(["no-such-command"]) == EXIT_USAGE
    assert run(["verify-thm1"]) == EXIT_USAGE
    assert run(["verify-thm1", "--limit", "abc"]) == EXIT_USAGE
    assert run(["tuple", "find", "--offsets", "0,2", "--window", "5"]) == EXIT_USAGE
    assert run(["verify-thm1", "--limit", "100", "--threads", "0"]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "error" in err


def test_big_integers_become_strings(capsys):
    code, report = run_json(
        capsys,
        ["two-term", "--t2", "1", "--t1", "1", "--n", "10", "--c", "0", "--cap", "20"],
    )
    assert code == EXIT_OK  # solutions are exponent pairs, small ints stay ints
    assert report["result"]["solutions"][0] == [0, 0]
    from decomplab.cli import _jsonable

    assert _jsonable({"x": 2**60}) == {"x": str(2**60)}
    assert _jsonable({"x": 2**50}) == {"x": 2**50}
    assert _jsonable(True) is True


def test_human_output_and_entry_point(capsys):
    code = run(["tuple", "select-triple", "--b2", "2", "--b3", "4"])
    out = capsys.readouterr().out
    assert code == EXIT_OK and "case = t2" in out
    proc = subprocess.run(
        [sys.executable, "-m", "decomplab", "verify-exception", "--limit", "1024", "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["passed"] is True
