import subprocess
import sys
from pathlib import Path

import pytest

from bluescheme.cli import main
from bluescheme.poset_doc import PosetDocument

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_proj_gr24_report(capsys):
    code, out, _ = run(capsys, "proj", "--builtin", "gr24")
    assert code == 0
    assert "36 points; ranks 6/12/11/6/1; 6 closed" in out
    assert out == (GOLDEN / "proj_gr24.txt").read_text()


def test_proj_p2(capsys):
    code, out, _ = run(capsys, "proj", "--builtin", "p2")
    assert code == 0 and out.splitlines()[1].startswith("7 points;")


def test_proj_ungraded_exits_4(capsys):
    code, out, err = run(capsys, "proj", "--builtin", "a2")
    assert code == 4 and out == "" and "not graded" in err


def test_spec_builtins(capsys):
    code, out, _ = run(capsys, "spec", "--builtin", "gr24-cone")
    assert code == 0 and out.splitlines()[1].startswith("37 primes;")
    code, out, _ = run(capsys, "spec", "--builtin", "a2")
    assert code == 0 and out.splitlines()[1].startswith("4 primes;")


def test_spec_malformed_file_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.bp"
    path.write_text("blueprint b {\n  gens a b;\n  rel a == ;\n}\n")
    code, out, err = run(capsys, "spec", "--file", str(path))
    assert code == 2 and out == ""
    assert f"{path}:3:12:" in err


def test_spec_missing_file_exits_2(tmp_path, capsys):
    code, _, err = run(capsys, "spec", "--file", str(tmp_path / "nope.bp"))
    assert code == 2 and "cannot read" in err


def test_spec_file_input(tmp_path, capsys):
    path = tmp_path / "gr.bp"
    path.write_text("blueprint gr24 { gens x12 x13 x14 x23 x24 x34 : deg 1; rel x12*x34 + x14*x23 == x13*x24; }")
    code, out, _ = run(capsys, "proj", "--file", str(path))
    assert code == 0 and out == (GOLDEN / "proj_gr24.txt").read_text()


def test_enumeration_guard_exits_3(tmp_path, capsys):
    path = tmp_path / "big.bp"
    path.write_text("blueprint big { gens " + " ".join(f"t{i}" for i in range(25)) + "; }")
    code, _, err = run(capsys, "spec", "--file", str(path))
    assert code == 3 and "enumeration limit" in err


@pytest.mark.parametrize("h", ["x12", "x13"])
def test_chart_golden(capsys, h):
    code, out, _ = run(capsys, "chart", "--builtin", "gr24", "--at", h)
    assert code == 0
    assert out == (GOLDEN / f"chart_gr24_{h}.txt").read_text()


def test_chart_x12_is_m2(capsys):
    _, out, _ = run(capsys, "chart", "--builtin", "gr24", "--at", "x12")
    assert "matches m2: a*d == b*c + D" in out
    _, out, _ = run(capsys, "chart", "--builtin", "gr24", "--at", "x13")
    assert "matches m2t: a*d + b*c == D" in out


def test_chart_unknown_generator_exits_5(capsys):
    code, _, err = run(capsys, "chart", "--builtin", "gr24", "--at", "x99")
    assert code == 5 and "x99" in err


def test_chart_degree_two_exits_4(tmp_path, capsys):
    path = tmp_path / "w.bp"
    path.write_text("blueprint w { gens T : deg 1; gens w : deg 2; }")
    code, _, _ = run(capsys, "chart", "--file", str(path), "--at", "w")
    assert code == 4


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--q", "2")
    assert code == 0 and "2\t35\t35\tyes" in out
    code, out, _ = run(capsys, "count", "--q", "3")
    assert code == 0 and "3\t130\t130\tyes" in out


def test_count_non_prime_exits_6(capsys):
    code, out, err = run(capsys, "count", "--q", "4")
    assert code == 6
    assert "4\t357\t-\t-" in out and "not prime" in err


def test_dot_and_json_golden(tmp_path, capsys):
    dot, js = tmp_path / "g.dot", tmp_path / "g.json"
    assert run(capsys, "proj", "--builtin", "gr24", "--dot", str(dot), "--json", str(js))[0] == 0
    assert dot.read_bytes() == (GOLDEN / "gr24.dot").read_bytes()
    assert js.read_bytes() == (GOLDEN / "gr24.json").read_bytes()


def test_output_is_byte_identical_across_runs(tmp_path, capsys):
    blobs = []
    for i in range(2):
        js = tmp_path / f"{i}.json"
        _, out, _ = run(capsys, "spec", "--builtin", "gr24-cone", "--json", str(js))
        blobs.append((out, js.read_bytes()))
    assert blobs[0] == blobs[1]


def test_json_round_trip():
    text = (GOLDEN / "gr24.json").read_text()
    doc = PosetDocument.from_json(text)
    assert doc.to_json() == text
    assert doc.counts["by_rank"] == [6, 12, 11, 6, 1]
    assert len(doc.edges) == 96
    closed = [p for p in doc.points if p.closed]
    assert len(closed) == 6 and all(len(p.segments) == 5 for p in closed)


def test_budget_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("BLUESCHEME_BUDGET", "0")
    # with no rewriting at all the Plücker relation forces nothing
    _, out, _ = run(capsys, "spec", "--builtin", "gr24-cone")
    assert out.splitlines()[1].startswith("64 primes;")
    _, out, _ = run(capsys, "spec", "--builtin", "gr24-cone", "--budget", "3")
    assert out.splitlines()[1].startswith("37 primes;")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "bluescheme", "proj", "--builtin", "p1"],
                         capture_output=True, text=True, check=True)
    assert res.stdout.splitlines()[1].startswith("3 points;")
