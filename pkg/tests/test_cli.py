import json
import shutil
import subprocess
import sys
from importlib.resources import files

import pytest

from braidbench.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_hopf(capsys):
    code, out, _ = run(capsys, "check", "hopf", "--n", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "pass"
    assert all(r["status"] == "pass" for r in doc["records"])
    assert "antipode.from_fusion" in {r["key"] for r in doc["records"]}


def test_usage_errors(capsys):
    assert run(capsys, "check", "hopf", "--n", "1")[0] == 2
    assert run(capsys, "check", "hopf")[0] == 2
    assert run(capsys, "check", "nothing", "--n", "2")[0] == 2
    assert run(capsys, "check", "rmatrix", "--n", "2", "--probes", "7")[0] == 2
    assert run(capsys, "check", "hopf", "--n", "2", "--probes", "0")[0] == 2
    assert run(capsys, "search", "augmentation", "--n", "5")[0] == 2
    code, _, err = run(capsys, "search", "yd", "--n", "2", "--character", "blue")
    assert code == 2 and "character" in err


def test_search_yd_expect_empty(capsys):
    code, out, _ = run(capsys, "search", "yd", "--n", "2", "--character", "nontrivial", "--expect", "empty")
    assert code == 0
    cert = json.loads(out)["extra"]["certificates"]["1"]
    assert cert["status"] == "empty" and cert["solutions"] == 0


def test_search_yd_wrong_expectation(capsys):
    assert run(capsys, "search", "yd", "--n", "3", "--character", "all", "--expect", "empty")[0] == 1
    assert run(capsys, "search", "yd", "--n", "3", "--character", "trivial", "--expect", "found")[0] == 0


def test_search_augmentation(capsys):
    code, out, _ = run(capsys, "search", "augmentation", "--n", "2", "--expect", "empty")
    assert code == 0
    assert json.loads(out)["extra"]["certificate"]["status"] == "empty"


@pytest.mark.parametrize("argv", [
    ("check", "pairing", "--n", "3"),
    ("check", "rmatrix", "--n", "2", "--algebra", "coend"),
    ("check", "rmatrix", "--n", "2", "--probes", "0,1"),
    ("check", "yd", "--n", "2"),
    ("check", "monad", "--n", "2", "--which", "freeC"),
    ("check", "hopf", "--n", "2", "--algebra", "double"),
    ("build", "coend", "--n", "4"),
    ("report", "--n", "2"),
])
def test_subcommands_pass(capsys, argv):
    assert run(capsys, *argv)[0] == 0


def test_text_format_and_out_file(capsys, tmp_path):
    code, out, _ = run(capsys, "build", "an", "--n", "2", "--format", "text")
    assert code == 0 and "PASS" in out
    target = tmp_path / "r.json"
    assert run(capsys, "build", "an", "--n", "2", "--out", str(target))[0] == 0
    doc = json.loads(target.read_text())
    assert doc["extra"]["structure"]["name"] == "A_2"


def test_json_is_deterministic(capsys):
    a = run(capsys, "check", "pairing", "--n", "3")[1]
    b = run(capsys, "check", "pairing", "--n", "3")[1]
    assert a == b


def test_timings_block(capsys):
    out = run(capsys, "check", "hopf", "--n", "2", "--timings")[1]
    assert "timings" in json.loads(out)


def test_dsl_dir(capsys, tmp_path):
    assert run(capsys, "check", "hopf", "--n", "2", "--dsl-dir", str(tmp_path / "missing"))[0] == 2
    # a copy with a sabotaged antipode axiom must make the suite fail
    src = files("braidbench") / "dsl"
    for f in src.iterdir():
        if f.name.endswith(".dsl"):
            shutil.copy(str(f), tmp_path / f.name)
    text = (tmp_path / "hopf.dsl").read_text()
    lines = [ln for ln in text.splitlines() if ln.startswith("antipode_left_R")]
    assert lines
    (tmp_path / "hopf.dsl").write_text(text.replace(lines[0], "antipode_left_R := id[A]"))
    code, out, _ = run(capsys, "check", "hopf", "--n", "2", "--dsl-dir", str(tmp_path))
    assert code == 1
    bad = [r for r in json.loads(out)["records"] if r["status"] == "fail"]
    assert bad[0]["key"] == "antipode.left" and "counterexample" in bad[0]
    # the override is scoped to one invocation
    assert run(capsys, "check", "hopf", "--n", "2")[0] == 0


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "braidbench.cli", "check", "hopf", "--n", "2", "--format", "text"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "antipode.left" in proc.stdout
