import json
import subprocess
import sys

import pytest

from figures import FIGURE_2CUBE
from hdist.cli import main, run
from hdist.faces import FaceLabel
from oracles import parse_figure_label


def ok(*argv):
    res = run(list(argv))
    assert res.exit_code == 0, res.payload
    return res.payload


def test_adem():
    assert ok("adem", "--expr", "Sq2 Sq2") == "Sq3 Sq1"
    assert ok("adem", "--expr", "Sq1 Sq1") == "0"


def test_kappa():
    assert ok("kappa", "--expr", "Sq2") == "Sq1"
    assert ok("kappa", "--expr", "Sq1") == "1"
    assert ok("kappa2", "--expr", "Sq2 Sq1") == "Sq1"


def test_check_compat():
    out = ok("check-compat", "--n", "1")
    assert out.startswith("check-compat: pass")
    doc = json.loads(ok("check-compat", "--n", "2", "--json"))
    assert doc["passed"] and doc["checked"] == 12


def test_wedge_and_universality():
    assert "pass" in ok("wedge", "--n", "3")
    assert "pass" in ok("universality", "--n", "3")


def test_faces_text_has_the_figure_labels():
    lines = ok("faces", "--n", "2").splitlines()
    assert len(lines) == 8
    got = dict(line.split(None, 1) for line in lines)
    assert set(got) == set(FIGURE_2CUBE)
    for code, text in FIGURE_2CUBE.items():
        assert got[code] == str(parse_figure_label(text, 2))


def test_faces_json():
    doc = json.loads(ok("faces", "--n", "3", "--format", "json"))
    assert doc["n"] == 3 and len(doc["faces"]) == 26
    front = next(f for f in doc["faces"] if f["code"] == "I0I")
    assert FaceLabel.from_json(front["label"]) == parse_figure_label(r"\varphi_a^{x_0, x_1 + x_2, x_3}", 3)


def test_faces_tikz():
    out = ok("faces", "--n", "2", "--format", "tikz")
    assert out.startswith("\\begin{tikzpicture}") and out.endswith("\\end{tikzpicture}")
    assert "\\varphi_a^{x_0 + x_1, x_2}" in out
    assert "ax_0 + \\varphi_a^{x_1, x_2}" in out
    assert out.count("\\draw [->-=0.5]") == 4
    tikz3 = ok("faces", "--n", "3", "--format", "tikz")
    assert tikz3.count("\\draw [->-=0.5]") == 12
    assert "\\varphi_a^{x_0, x_1} \\oplus \\varphi_a^{x_2, x_3}" in tikz3


def test_tikz_refused_above_three():
    assert run(["faces", "--n", "4", "--format", "tikz"]).exit_code == 2


def test_basis():
    assert ok("basis", "--degree", "3").splitlines() == ["Sq3", "Sq2 Sq1"]
    assert ok("basis", "--degree", "0") == "1"


def test_verify_builtin():
    assert "pass" in ok("verify-derivation", "--builtin", "kappa", "--upto", "12")
    assert "pass" in ok("verify-derivation", "--builtin", "kappa2", "--upto", "12")
    assert "pass" in ok("verify-derivation", "--builtin", "kappa2", "--upto", "8", "--mode", "leibniz-pairs")
    assert "pass" in ok("verify-derivation", "--builtin", "kappa", "--upto", "8", "--mode", "leibniz-pairs")


def test_verify_table_failure(tmp_path):
    table = tmp_path / "perturbed.txt"
    table.write_text("shift: -1\nrule: Sq(m-1)\n2 -> 0\n")
    res = run(["verify-derivation", "--table", str(table), "--upto", "4", "--json"])
    assert res.exit_code == 1
    doc = json.loads(res.payload)
    assert doc["passed"] is False
    assert doc["counterexample"]["inputs"] == [2, 2]
    assert doc["counterexample"]["residual"] == "Sq3 + Sq2 Sq1"


def test_verify_table_pass(tmp_path):
    table = tmp_path / "kappa.txt"
    table.write_text("rule: Sq(m-1)\n")
    assert run(["verify-derivation", "--table", str(table), "--upto", "10"]).exit_code == 0


@pytest.mark.parametrize("argv", [
    [],
    ["nope"],
    ["faces"],
    ["faces", "--n", "0"],
    ["faces", "--n", "2", "--format", "svg"],
    ["adem", "--expr", "Sq2", "--bogus"],
    ["verify-derivation", "--upto", "4"],
    ["verify-derivation", "--builtin", "kappa", "--table", "x", "--upto", "4"],
    ["verify-derivation", "--builtin", "kappa", "--upto", "1"],
    ["verify-derivation", "--table", "/nonexistent/table", "--upto", "4"],
    ["basis", "--degree", "-1"],
])
def test_usage_errors(argv):
    res = run(argv)
    assert res.exit_code == 2
    assert res.payload


def test_malformed_grammar_names_token():
    res = run(["adem", "--expr", "Sq2 Sqx"])
    assert res.exit_code == 2
    assert "'Sqx'" in res.payload


def test_bad_table_is_usage_error(tmp_path):
    table = tmp_path / "bad.txt"
    table.write_text("2 => Sq1\n")
    assert run(["verify-derivation", "--table", str(table), "--upto", "4"]).exit_code == 2


def test_help():
    res = run(["--help"])
    assert res.exit_code == 0
    assert "verify-derivation" in res.payload


def test_main_streams(capsys):
    assert main(["adem", "--expr", "Sq1 Sq2"]) == 0
    assert capsys.readouterr().out == "Sq3\n"
    assert main(["adem", "--expr", "Sq"]) == 2
    assert "Sq" in capsys.readouterr().err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "hdist", "kappa", "--expr", "Sq3 Sq1"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip() == "Sq3 + Sq2 Sq1"
