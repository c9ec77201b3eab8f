"""CLI contract: stable output, schemas, exit codes, golden files."""

import contextlib
import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from springerq.cli import main

GOLDEN = Path(__file__).parent / "golden"
SRC = str(Path(__file__).resolve().parents[1] / "src")


def run_cli(argv):
    """Run the CLI in-process; returns (exit_code, stdout)."""
    buf = io.StringIO()
    try:
        with contextlib.redirect_stdout(buf):
            code = main(argv)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    return code, buf.getvalue()


GOLDEN_CASES = {
    "orbits_n1.json": ["orbits", "--n", "1", "--format", "json"],
    "orbits_n3.json": ["orbits", "--n", "3", "--format", "json"],
    "stalks_n2.json": ["stalks", "--n", "2", "--format", "json"],
    "stalks_n3.json": ["stalks", "--n", "3", "--format", "json"],
    "fano_n3_i2.json": ["fano", "--n", "3", "--i", "2", "--format", "json"],
    "euler_n3.json": ["euler", "--n", "3", "--format", "json"],
    "ft_table_n3.json": ["ft-table", "--n", "3", "--format", "json"],
    "kostka_21_111.json": ["kostka", "--shape", "2,1", "--weight", "1,1,1", "--format", "json"],
    "verify_n2.json": ["verify", "--n-max", "2", "--format", "json"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_files_are_byte_stable(name):
    code, out = run_cli(GOLDEN_CASES[name])
    assert code == 0
    assert out == (GOLDEN / name).read_text(), f"golden file {name} drifted"


def test_json_round_trips_byte_identically():
    code, out = run_cli(["orbits", "--n", "1", "--format", "json"])
    assert code == 0
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_orbits_row_count_and_pretty():
    code, out = run_cli(["orbits", "--n", "3", "--format", "json"])
    rows = json.loads(out)["rows"]
    assert len(rows) == 15  # p(7)
    assert [r["dim"] for r in rows[:3]] == [21, 20, 19]

    code, pretty = run_cli(["orbits", "--n", "1"])
    assert code == 0
    lines = pretty.splitlines()
    assert lines[0].split()[:3] == ["partition", "dim", "codim"]
    assert len(lines) == 4
    assert lines[1].startswith("3 ")


def test_orbits_n1_dims():
    _, out = run_cli(["orbits", "--n", "1", "--format", "json"])
    rows = json.loads(out)["rows"]
    assert [(r["partition"], r["dim"]) for r in rows] == [("3", 3), ("2,1", 2), ("1,1,1", 0)]


def test_stalks_check_passes():
    code, out = run_cli(["stalks", "--n", "4", "--check", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["rank"] == 4
    assert data["f"][1] == [[-4, "1"]]
    assert len(data["t"]) == 4 and len(data["t"][3]) == 5  # j = 0..4 at i = 4


def test_stalks_pretty_shows_anchor():
    code, out = run_cli(["stalks", "--n", "2"])
    assert code == 0
    assert "q^-2" in out and "q^-3 + q^-1" in out


def test_fano_pretty_sixteen_lines():
    code, out = run_cli(["fano", "--n", "2", "--i", "2"])
    assert code == 0
    assert out.splitlines()[1].split()[:3] == ["0", "0", "16"]


def test_kostka_pretty_prints_bare_number():
    code, out = run_cli(["kostka", "--shape", "2,1", "--weight", "1,1,1"])
    assert code == 0
    assert out == "2\n"


def test_tsv_format():
    code, out = run_cli(["euler", "--n", "2", "--format", "tsv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "i\tj\ttrivial\tnontrivial"
    assert lines[1] == "0\t0\t1\t"
    assert lines[4] == "2\t0\t2\t1"


def test_verify_passes_and_orders_suites_by_name():
    code, out = run_cli(["verify", "--n-max", "3"])
    assert code == 0
    names = [line.split()[0] for line in out.splitlines()[:-1]]
    assert names == sorted(names)
    assert out.splitlines()[-1].startswith("all suites passed")


def test_usage_errors_exit_2():
    for argv in (
        ["orbits", "--n", "0"],
        ["stalks"],
        ["fano", "--n", "2", "--i", "5"],
        ["fano", "--n", "2", "--i", "0"],
        ["kostka", "--shape", "1,2", "--weight", "1,1,1"],
        ["kostka", "--shape", "2,1", "--weight", "2,2"],
        ["euler", "--n", "-1"],
        ["verify", "--n-max", "0"],
        ["orbits", "--n", "1", "--format", "xml"],
        ["no-such-command"],
    ):
        code, _ = run_cli(argv)
        assert code == 2, argv


def test_cli_runs_as_a_subprocess():
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "springerq", "verify", "--n-max", "3"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0, proc.stderr
    assert "all suites passed" in proc.stdout
