import json

import pytest

from ccckit import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == cli.EXIT_OK
    for family in ("perm", "sp", "iet", "wreath-tower", "closure"):
        assert family in out


def test_run_text(capsys):
    code, out, _ = run(capsys, "run", "--family", "perm", "--format", "text")
    assert code == cli.EXIT_OK
    assert "checks passed" in out
    assert "FAIL" not in out


def test_run_json_schema(capsys):
    code, out, _ = run(capsys, "run", "--family", "iet", "--format", "json", "--seed", "3")
    assert code == cli.EXIT_OK
    report = json.loads(out)
    assert set(report) == {"family", "params", "checks", "bounded", "seed", "elapsed_ms"}
    assert report["family"] == "iet"
    assert report["seed"] == 3
    assert report["elapsed_ms"] == 0
    for c in report["checks"]:
        assert set(c) == {"name", "status", "lhs", "rhs", "detail"}
        assert c["status"] in ("pass", "fail")


def test_bounded_flag_set_for_zmode_families(capsys):
    _, out, _ = run(capsys, "run", "--family", "pl", "--format", "json")
    assert json.loads(out)["bounded"] is True
    _, out, _ = run(capsys, "run", "--family", "perm", "--format", "json")
    assert json.loads(out)["bounded"] is False


def test_unknown_family(capsys):
    code, _, err = run(capsys, "run", "--family", "nope")
    assert code == cli.EXIT_UNKNOWN_FAMILY
    assert "unknown family" in err


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "run", "--family", "perm", "--format", "json",
                       "--out", str(target))
    assert code == cli.EXIT_OK
    assert out == ""
    assert json.loads(target.read_text())["family"] == "perm"


def test_out_io_failure(capsys):
    code, _, err = run(capsys, "run", "--family", "perm", "--out",
                       "/nonexistent-dir/report.json")
    assert code == cli.EXIT_IO_FAILURE
    assert "cannot write" in err


def test_seed_env_var(capsys, monkeypatch):
    monkeypatch.setenv("CCCKIT_SEED", "42")
    _, out, _ = run(capsys, "run", "--family", "perm", "--format", "json")
    assert json.loads(out)["seed"] == 42
    # explicit flag wins
    _, out, _ = run(capsys, "run", "--family", "perm", "--format", "json", "--seed", "7")
    assert json.loads(out)["seed"] == 7


def test_determinism_same_seed(capsys):
    _, a, _ = run(capsys, "run", "--family", "wreath-tower", "--seed", "5",
                  "--format", "json")
    _, b, _ = run(capsys, "run", "--family", "wreath-tower", "--seed", "5",
                  "--format", "json")
    assert a == b


def test_every_family_runs_clean(capsys):
    from ccckit.suites import FAMILIES
    for family in FAMILIES:
        code, out, err = run(capsys, "run", "--family", family, "--format", "json")
        assert code == cli.EXIT_OK, (family, err)
