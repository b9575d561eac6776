import json
import subprocess
import sys

import pytest

from squareice.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--x", "1")
    assert code == 0
    assert out.splitlines() == ["N,x,r,value,routes,agree", "4,1,,42,closed+determinant+oracle,true"]


def test_enumerate_large_skips_oracle(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "10", "--x", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["command"] == "enumerate --n 10 --x 2 --format json"
    rec = doc["records"][0]
    assert rec["value"] == str(2 ** 45) and rec["routes"] == "closed+determinant"


def test_enumerate_trivial(capsys):
    _, out, _ = run(capsys, "enumerate", "--n", "1", "--x", "3")
    assert out.splitlines()[1].split(",")[3] == "1"


@pytest.mark.parametrize("n,x,row", [(5, 3, [90, 495, 855, 495, 90]), (4, 1, [7, 14, 14, 7]),
                                     (2, 2, [1, 1])])
def test_refined(capsys, n, x, row):
    code, out, _ = run(capsys, "refined", "--n", str(n), "--x", str(x))
    lines = out.splitlines()[1:]
    assert code == 0
    assert [int(l.split(",")[3]) for l in lines] == row
    assert all(l.endswith(",true") for l in lines)


def test_refined_single_r_and_scientific(capsys):
    _, out, _ = run(capsys, "refined", "--n", "5", "--x", "3", "--r", "3", "--scientific")
    header, line = out.splitlines()
    assert header == "N,x,r,value,routes,agree,approx"
    assert line == "5,3,3,855,refined3+determinant+oracle,true,8.550000e+02"


@pytest.mark.parametrize("argv", [["enumerate", "--n", "4", "--x", "5"], ["refined", "--n", "3", "--x", "1", "--r", "9"],
                                  ["verify", "--suite", "nope"], ["frobnicate"], [], ["enumerate", "--n", "x"]])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and "error" in err


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "appendix", "--max", "6")
    assert code == 0
    names = [l.split(",")[4] for l in out.splitlines()[1:]]
    assert names == ["fQ", "gff", "Pdec+Pmix", "E-V"]
    code, out, _ = run(capsys, "verify", "--suite", "determinant", "--max", "8")
    assert code == 0 and ",fail," not in out
    code, out, _ = run(capsys, "verify", "--suite", "moments", "--max", "20")
    assert code == 0


def test_disagreement_exit_code(capsys, monkeypatch):
    from squareice import closed_forms
    monkeypatch.setattr(closed_forms, "closed_count", lambda n, x: 41)
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--x", "1")
    assert code == 2 and out.rstrip().endswith("false")


def test_output_is_deterministic_and_written_to_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    assert main(["verify", "--suite", "all", "--max", "4", "--format", "json", "--out", str(target)]) == 0
    first = target.read_bytes()
    main(["verify", "--suite", "all", "--max", "4", "--format", "json", "--out", str(target)])
    assert target.read_bytes() == first
    doc = json.loads(first)
    assert all(r["agree"] == "true" for r in doc["records"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "squareice", "enumerate", "--n", "3", "--x", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "3,3,,9," in proc.stdout
