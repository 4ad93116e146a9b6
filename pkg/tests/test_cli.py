import json
import subprocess
import sys
from pathlib import Path

import pytest

from profsol.cli import load_examples, main

GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "classify_c2_real_quadratic.txt": ["classify", "--type", "C", "--rank", "2", "--field", "deg=2,r1=2,r2=0"],
    "classify_c2_real_quadratic.json": ["--json", "classify", "--type", "C", "--rank", "2", "--field", "deg=2,r1=2,r2=0"],
    "classify_a2_q.txt": ["classify", "--type", "A", "--rank", "2", "--field", "deg=1,r1=1,r2=0"],
    "classify_f4_q.json": ["classify", "--type", "F", "--rank", "4", "--field", "deg=1,r1=1,r2=0", "--json"],
    "kerb_c2_cubic.txt": ["kerb", "--type", "C", "--rank", "2", "--field", "deg=3,r1=3,r2=0"],
    "kerb_c2_cubic.json": ["kerb", "--type", "C", "--rank", "2", "--field", "deg=3,r1=3,r2=0", "--json"],
    "qform_four_signs.txt": ["qform-check", "1,1,1,1", "-1,-1,-1,-1"],
    "qform_four_signs.json": ["--json", "qform-check", "1,1,1,1", "-1,-1,-1,-1"],
    "examples.txt": ["examples"],
}


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(capsys, name):
    code, out, _ = run(capsys, CASES[name])
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_classify_examples(capsys):
    _, out, _ = run(capsys, ["--json", "classify", "--type", "C", "--rank", "2",
                             "--field", "deg=2,r1=2,r2=0"])
    rep = json.loads(out)
    assert rep["outcome"] == "NotSolitary" and "Sp(1,1)" in rep["witness"]
    assert (rep["ker_b_count"], rep["ker_g_count"]) == (2, 5)
    _, out, _ = run(capsys, ["classify", "--type", "F4", "--field", "r1=1,r2=0", "--json"])
    assert json.loads(out)["outcome"] == "CSPConditional"
    _, out, _ = run(capsys, ["classify", "--type", "F4", "--field", "r1=1,r2=0", "--json",
                             "--policy-f4", "false"])
    assert json.loads(out)["outcome"] == "SolitaryOrNotGrothendieckRigid"


def test_fsp_command(capsys):
    code, out, _ = run(capsys, ["fsp", "--type", "B", "--rank", "3", "--field", "deg=1,r1=1,r2=0"])
    assert code == 0 and out.strip() == "fsp: false"


def test_witness_command(capsys):
    code, out, _ = run(capsys, ["witness", "--type", "B", "--rank", "5", "--field", "r1=1,r2=0"])
    assert code == 0 and out.strip() == "witness: Spin(2,9) over Q"
    code, out, _ = run(capsys, ["witness", "--type", "A2", "--field", "r1=1,r2=0"])
    assert code == 1


def test_crossval_command(capsys):
    code, out, _ = run(capsys, ["crossval", "--type", "D6", "--field", "r1=1,r2=0"])
    assert code == 0 and "0 disagreements" in out
    code, _, err = run(capsys, ["crossval", "--type", "D6", "--field", "r1=2,r2=3"])
    assert code == 2 and "locally determined" in err


@pytest.mark.parametrize("argv", [
    ["classify", "--type", "B", "--rank", "2", "--field", "r1=1,r2=0"],
    ["classify", "--type", "C", "--rank", "2", "--field", "r1=2"],
    ["classify", "--type", "C", "--rank", "2"],
    ["fsp", "--type", "X9", "--field", "r1=1,r2=0"],
    ["qform-check", "1,0", "1,1"],
    ["bogus"],
    ["--policy-a1", "perhaps", "examples"],
])
def test_argument_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, argv)
    assert code == 2 and "error" in err


def test_examples_tampered_fixture(tmp_path, capsys):
    text = (Path(__file__).parents[1] / "src/profsol/data/named_examples.txt").read_text()
    flipped = text.replace("SL_3(Z);A2;deg=1,r1=1,r2=0,label=Q;solitary_or_ngr",
                           "SL_3(Z);A2;deg=1,r1=1,r2=0,label=Q;not_solitary")
    assert flipped != text
    f = tmp_path / "flipped.txt"
    f.write_text(flipped)
    code, out, _ = run(capsys, ["examples", "--fixture", str(f)])
    assert code == 1
    assert "FAIL  SL_3(Z)" in out and "28/29 passed" in out


def test_examples_missing_or_empty_fixture(tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing here\n")
    assert run(capsys, ["examples", "--fixture", str(empty)])[0] == 3
    assert run(capsys, ["examples", "--fixture", str(tmp_path / "absent.txt")])[0] == 3
    bad = tmp_path / "bad.txt"
    bad.write_text("X;A2;r1=1,r2=0;maybe\n")
    assert run(capsys, ["examples", "--fixture", str(bad)])[0] == 3


def test_example_fixture_counts():
    examples = load_examples()
    sides = [e.expected for e in examples]
    assert sides.count("solitary_or_ngr") == 14
    assert sides.count("not_solitary") == 15


def test_json_is_deterministic(capsys):
    argv = ["--json", "classify", "--type", "E", "--rank", "7", "--field", "r1=3,r2=1"]
    first = run(capsys, argv)[1]
    second = run(capsys, argv)[1]
    assert first == second
    proc = subprocess.run([sys.executable, "-m", "profsol", *argv], capture_output=True,
                          text=True, check=True)
    assert proc.stdout == first


def test_global_flags_after_subcommand(capsys):
    a = run(capsys, ["--json", "--policy-a1", "true", "classify", "--type", "A1",
                     "--field", "r1=4,r2=0"])[1]
    b = run(capsys, ["classify", "--type", "A1", "--field", "r1=4,r2=0", "--json",
                     "--policy-a1", "true"])[1]
    assert a == b and json.loads(a)["outcome"] == "NotSolitary"
