from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from sixqubit.cli import SCHEMA, run
from sixqubit.stabilizer import builtin_code, dumps_code, load_code


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def six_file(tmp_path, capsys):
    path = tmp_path / "six.code"
    assert run(["builtin", "six_qubit_degenerate", "-o", str(path)]) == 0
    capsys.readouterr()
    return path


def test_builtin_round_trip_and_verify(capsys, six_file):
    assert load_code(six_file).stabilizer == builtin_code("six_qubit_degenerate").stabilizer
    code, out, _ = _run(capsys, "verify", str(six_file))
    assert code == 0
    assert "171/171" in out


def test_distance(capsys, six_file):
    code, out, _ = _run(capsys, "distance", str(six_file))
    assert code == 0 and "3" in out


def test_json_reports_schema(capsys, six_file):
    code, out, _ = _run(capsys, "verify", "--json", str(six_file))
    assert code == 0
    assert json.loads(out)["schema"] == SCHEMA == 1


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(dumps_code(builtin_code("steane"))))
    code, out, _ = _run(capsys, "distance", "-")
    assert code == 0 and "3" in out


def test_non_commuting_file_is_structural_error(capsys, tmp_path):
    path = tmp_path / "bad.code"
    path.write_text("[stabilizer]\nXI\nZI\n")
    code, out, _ = _run(capsys, "verify", str(path))
    assert code == 1
    assert "rows 1 and 2 anticommute" in out


def test_usage_errors(capsys, tmp_path):
    assert run(["frobnicate"]) == 2
    capsys.readouterr()
    assert run(["verify", str(tmp_path / "missing.code")]) == 2


def test_capacity_error(capsys):
    code, _, err = _run(capsys, "search", "css", "--n", "8", "--k", "1", "--d", "3", "--ebits", "1")
    assert code == 3
    assert err


def test_search_six(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = _run(capsys, "search", "css", "--n", "6", "--k", "1", "--d", "3", "--report", str(report))
    assert code == 0
    assert "survivors: 0" in out
    assert json.loads(report.read_text())["survivor_count"] == 0


def test_synth_and_codewords(capsys, tmp_path):
    ea = tmp_path / "ea.code"
    run(["builtin", "ea_613", "-o", str(ea)])
    enc = tmp_path / "enc.txt"
    code, _, _ = _run(capsys, "synth", str(ea), "-o", str(enc))
    assert code == 0 and enc.read_text().strip()
    six = tmp_path / "six.code"
    run(["builtin", "six_qubit_degenerate", "-o", str(six)])
    capsys.readouterr()
    code, _, _ = _run(capsys, "codewords", str(six), "--signs=-1,-1,1,1,1")
    assert code == 0


def test_css_and_ea_build(capsys, tmp_path):
    h = tmp_path / "h.txt"
    h.write_text("100101\n010110\n001011\n")
    gens = tmp_path / "gens.txt"
    code, out, _ = _run(capsys, "css-build", str(h), str(h), "-o", str(gens))
    assert code == 0 and "commuting: no" in out
    assert gens.read_text().split() == ["ZIIZIZ", "IZIZZI", "IIZIZZ", "XIIXIX", "IXIXXI", "IIXIXX"]
    code, out, _ = _run(capsys, "gram-schmidt", "--json", str(gens))
    assert code == 0 and json.loads(out)["ebits"] == 1
    code, _, _ = _run(capsys, "ea-build", str(gens), "-o", str(tmp_path / "ea.code"))
    assert code == 0
    assert load_code(tmp_path / "ea.code").c == 1


def test_console_script_entry_point(six_file):
    proc = subprocess.run(
        [sys.executable, "-m", "sixqubit.cli", "verify", str(six_file)], capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
