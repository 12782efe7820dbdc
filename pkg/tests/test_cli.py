import json
import subprocess
import sys

import pytest

from artin_morse import catalog
from artin_morse.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_homology_text(capsys):
    code, out = run(capsys, "homology", "A", "3")
    assert code == EXIT_OK
    assert "R/(phi_2)" in out.out and "R/(phi_4)" in out.out


def test_homology_json_both_methods(capsys):
    code, out = run(capsys, "homology", "tC:4", "--d", "4", "--method", "both", "--format", "json")
    data = json.loads(out.out)
    assert code == EXIT_OK and data["verified"] is True
    assert data["family"] == "tC" and data["n"] == 4 and data["d"] == 4
    tors = {row["m"]: sum(t["mult"] for t in row["torsion"]) for row in data["degrees"]}
    assert tors == {0: 0, 1: 0, 2: 1, 3: 2, 4: 0, 5: 0}


def test_homology_from_json_graph(capsys, tmp_path):
    path = tmp_path / "b2.json"
    path.write_text(json.dumps({"vertices": 2, "edges": [[0, 1, 4]]}))
    code, out = run(capsys, "homology", str(path), "--method", "snf", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out.out)["degrees"][1]["torsion"] == [
        {"d": 2, "exp": 1, "mult": 1}, {"d": 4, "exp": 1, "mult": 1},
    ]


def test_critical_listing(capsys):
    code, out = run(capsys, "critical", "B", "4", "--d", "4")
    assert code == EXIT_OK
    assert "0101" in out.out and "4 critical" in out.out


def test_verify_passes_and_fails(capsys, monkeypatch):
    code, out = run(capsys, "verify", "B", "2..4", "2..4")
    assert code == EXIT_OK and out.out.strip().endswith("PASS")
    monkeypatch.setattr(catalog, "incidence_table", lambda *a: {("x", "y"): 1})
    code, out = run(capsys, "verify", "B", "4", "4", "--skip-oracle")
    assert code == EXIT_FAIL and "FAIL incidence" in out.out


def test_independence_and_e1(capsys):
    code, out = run(capsys, "independence", "9", "--r", "3", "--contains", "2,3,5,6,7,9")
    assert code == EXIT_OK and "contains {2,3,5,6,7,9}: true" in out.out
    code, out = run(capsys, "e1", "A", "3", "--d", "2", "--format", "json")
    assert code == EXIT_OK and json.loads(out.out)


@pytest.mark.parametrize("argv", [
    ["homology", "X", "3"],
    ["homology", "A", "40"],
    ["verify", "B", "2-4", "2"],
    ["independence", "3", "--r", "-1"],
])
def test_input_errors(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == EXIT_INPUT and out.err.startswith("error:")


def test_max_n_is_configurable(capsys, monkeypatch):
    monkeypatch.setenv("ARTIN_MORSE_MAX_N", "3")
    # affine types have n + 1 vertices, so the cap is on vertices, n + 1
    assert run(capsys, "homology", "A", "4")[0] == EXIT_OK
    code, _ = run(capsys, "homology", "A", "5")
    assert code == EXIT_INPUT


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "artin_morse", "homology", "A", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and "R/(phi_3)" in proc.stdout
