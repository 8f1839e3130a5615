import json
import subprocess
import sys

import pytest

from mec_atlas.cli import main
from mec_atlas.families import cycle_graph, path_graph
from mec_atlas.graph import format_edge_list, format_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def kv(out):
    return dict(line.split("=", 1) for line in out.splitlines() if "=" in line and " " not in line.split("=", 1)[0])


@pytest.fixture
def i5(tmp_path):
    f = tmp_path / "i5.txt"
    f.write_text(format_edge_list(path_graph(5)))
    return str(f)


def test_enumerate_path(capsys, i5):
    code, out, _ = run(capsys, "enumerate", i5)
    assert code == 0
    d = kv(out)
    assert d["M"] == "5"
    assert d["M(G;x)"] == "1 + 3*x + x^2"
    assert d["m"] == "2"
    assert d["spectrum"] == "{1:1, 3:2, 4:1, 5:1}"
    assert out.count("class component=0") == 5


def test_enumerate_cycle_graph6(capsys, tmp_path):
    f = tmp_path / "c4.g6"
    f.write_text(format_graph6(cycle_graph(4)) + "\n")
    code, out, _ = run(capsys, "enumerate", str(f))
    d = kv(out)
    assert (code, d["M"], d["m"]) == (0, "6", "2")


def test_enumerate_json(capsys, i5):
    code, out, _ = run(capsys, "enumerate", i5, "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["M"] == 5 and doc["polynomial"] == "1 + 3*x + x^2"
    assert doc["spectrum"] == {"1": 1, "3": 2, "4": 1, "5": 1}
    assert len(doc["classes"]) == 5


def test_enumerate_disconnected_warns(capsys, tmp_path):
    f = tmp_path / "d.txt"
    f.write_text("n 6\n0 1\n1 2\n3 4\n")
    code, out, err = run(capsys, "enumerate", str(f))
    assert code == 0 and "warning" in err
    assert kv(out)["M"] == "2"


def test_enumerate_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("n 3\n0 x\n")
    code, _, err = run(capsys, "enumerate", str(bad))
    assert code != 0 and "error" in err
    code, _, err = run(capsys, "enumerate", str(tmp_path / "missing.txt"))
    assert code != 0
    big = tmp_path / "big.txt"
    big.write_text(format_edge_list(path_graph(20)))
    code, _, err = run(capsys, "enumerate", str(big), "--cap", "10")
    assert code != 0 and "cap" in err


def test_family_commands(capsys):
    code, out, _ = run(capsys, "family", "caterpillar:14")
    assert code == 0 and kv(out)["M"] == "1028"
    code, out, _ = run(capsys, "family", "k2p:3", "--oracle")
    d = kv(out)
    assert code == 0 and d["M"] == d["oracle_M"] == "22" and d["agree"] == "true"
    code, out, _ = run(capsys, "family", "btree:6")
    d = kv(out)
    assert code == 0 and d["ratio_within_bounds"] == "true" and int(d["A"]) < 4 * int(d["T"])
    code, _, err = run(capsys, "family", "btree:6", "--oracle")
    assert code != 0 and "refused" in err
    code, _, err = run(capsys, "family", "nope:1")
    assert code != 0


def test_verify_commands(capsys):
    code, out, _ = run(capsys, "verify", "--lucas-triangle", "--p", "20")
    assert code == 0 and "failed=0" in out
    code, out, _ = run(capsys, "verify", "--bounds", "--p", "8")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--families", "--p", "7")
    assert code == 0 and "PASS path:7" in out


def test_survey_and_invariant_commands(capsys, tmp_path):
    out_csv = tmp_path / "s.csv"
    code, _, _ = run(capsys, "survey", "--p", "4", "-o", str(out_csv))
    assert code == 0 and len(out_csv.read_text().splitlines()) == 7
    code, _, err = run(capsys, "survey", "--p", "20")
    assert code != 0
    code, out, _ = run(capsys, "invariant-check", "--p", "4")
    assert code == 0 and "collision M(G;x)=1 + 2*x + x^2" in out
    code, out, _ = run(capsys, "invariant-check", "--p", "6", "--triangle-free")
    assert code == 0 and kv(out)["collisions"] == "0"


def test_console_script_entry_point(i5):
    res = subprocess.run([sys.executable, "-m", "mec_atlas.cli", "enumerate", i5],
                         capture_output=True, text=True, check=True)
    assert "M=5" in res.stdout
