import json
import subprocess
import sys

import pytest

from cohomdim import analysis
from cohomdim.cli import main


def run(capsysbinary, *argv):
    code = main(list(argv))
    out, err = capsysbinary.readouterr()
    return code, out.decode("utf-8"), err.decode("utf-8")


def test_example_hl_analyze_machine(capsysbinary):
    code, out, _ = run(capsysbinary, "example-hl", "--a", "2", "--char", "7", "--analyze", "--machine")
    assert code == 0
    assert '"w": {"2": 1, "0": 0, "7": 0}' in out and '"v": 3' in out
    assert len(json.loads(out)["delta"]["lambda_t"]) == 10


def test_emit_then_analyze(tmp_path, capsysbinary):
    path = tmp_path / "hl.txt"
    code, out, _ = run(capsysbinary, "example-hl", "--a", "2", "--char", "0", "--emit", str(path))
    assert code == 0 and out == ""
    assert "ideal I4: X1 + X3 + X6, 1/5*X1 + X4 + 1/2*X6" in path.read_text()
    code, out, _ = run(capsysbinary, "analyze", str(path), "--coeff-chars", "2,0", "--machine")
    assert code == 0
    assert json.loads(out)["w"] == {"2": 1, "0": 0}
    code, out, _ = run(capsysbinary, "analyze", str(path))
    assert code == 0 and "== verdicts" in out


def test_two_planes_file(tmp_path, capsysbinary):
    path = tmp_path / "planes.txt"
    path.write_text("ring: char=2 vars=[X1,X2,X3,X4]\nideal I1: X1, X2\nideal I2: X3, X4\n"
                    "coeff-chars: 0, 2, 3\n")
    code, out, _ = run(capsysbinary, "analyze", str(path), "--machine")
    assert code == 0
    doc = json.loads(out)
    assert (doc["t"], doc["v"]) == (1, 2) and doc["w"] == {"0": 1, "2": 1, "3": 1}
    assert doc["verdicts"]["0"]["conclusion"] == "H^3_I ≅ (H^4_m)^1"


def test_multi_base_file(tmp_path, capsysbinary):
    path = tmp_path / "multi.txt"
    path.write_text("ring: char=0 vars=[X1,X2,X3,X4,X5,X6]\nideal I1: X1, X2\nideal I2: X3, X4\n"
                    "base P: X5, X6\nbase Q: X5, X1 + X3\n")
    code, out, _ = run(capsysbinary, "analyze", str(path), "--machine")
    assert code == 0
    doc = json.loads(out)
    assert [b["w"]["0"] for b in doc["bases"]] == [1, 0]
    assert doc["overall"] == {"0": "cd > v"}


def test_exit_codes(tmp_path, capsysbinary):
    code, _, err = run(capsysbinary, "example-hl", "--a", "1", "--char", "7")
    assert code == 1 and "a ≠ 1" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("ring: char=7 vars=[X1]\nideal I: X1 +\n")
    code, _, err = run(capsysbinary, "analyze", str(bad))
    assert code == 2 and "2:14:" in err
    contained = tmp_path / "contained.txt"
    contained.write_text("ring: char=7 vars=[X1,X2,X3]\nideal A: X1\nideal B: X1, X2\n")
    assert run(capsysbinary, "analyze", str(contained))[0] == 1
    inhom = tmp_path / "inhom.txt"
    inhom.write_text("ring: char=7 vars=[X1,X2]\nideal J: X1^2 + X2\n")
    code, _, err = run(capsysbinary, "analyze", str(inhom))
    assert code == 1 and "homogeneous" in err
    assert run(capsysbinary, "bounds", "--d", "4", "--c", "2", "--p", "1")[0] == 1
    assert run(capsysbinary, "analyze", str(tmp_path / "missing.txt"))[0] == 1


def test_invariant_breach_exit_code(monkeypatch, capsysbinary):
    monkeypatch.setattr(analysis, "reduced_betti_number", lambda *a: 99)
    code, _, err = run(capsysbinary, "example-hl", "--a", "2", "--char", "7", "--analyze")
    assert code == 3 and "invariant" in err


def test_homology_and_bounds(tmp_path, capsysbinary):
    code, out, _ = run(capsysbinary, "homology", "--builtin", "rp2", "--char", "2", "--degrees", "0,1,2")
    assert code == 0 and out == "H~_0(GF(2)) = 0\nH~_1(GF(2)) = 1\nH~_2(GF(2)) = 1\n"
    cx = tmp_path / "circle.txt"
    cx.write_text("# a triangle boundary\n1,2\n2,3\n1,3\n")
    code, out, _ = run(capsysbinary, "homology", "--complex", str(cx), "--char", "0")
    assert code == 0 and "H~_1(QQ) = 1" in out
    code, out, _ = run(capsysbinary, "bounds", "--d", "6", "--c", "2", "--p", "1")
    assert code == 0
    assert "= 4" in out.splitlines()[0] and "= 3" in out.splitlines()[1]


def test_gb_and_search(tmp_path, capsysbinary):
    path = tmp_path / "p.txt"
    path.write_text("ring: char=0 vars=[X1,X2,X3]\nideal J: X1 - X2, X2 - X3\n")
    code, out, _ = run(capsysbinary, "gb", str(path), "--ideal", "J", "--order", "lex")
    assert code == 0 and out == "X1 - X3\nX2 - X3\n"
    assert run(capsysbinary, "gb", str(path), "--ideal", "K")[0] == 1
    code, out, _ = run(capsysbinary, "search", "--vars", "6", "--height", "2", "--primes", "2",
                       "--trials", "5", "--seed", "1", "--coeff-chars", "0,2")
    assert code == 0 and json.loads(out) == {"trials": 5, "skipped": 0, "findings": []}


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cohomdim", "bounds", "--d", "7", "--c", "3"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and "5" in res.stdout


@pytest.mark.parametrize("argv", [[], ["analyze"], ["bounds", "--d", "x", "--c", "1"]])
def test_usage_errors_exit_via_argparse(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
