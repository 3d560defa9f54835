import json
import subprocess
import sys
from fractions import Fraction

import pytest

from leonard_ekr import ParameterArray, realize
from leonard_ekr.cli import main

from conftest import alternating, array


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


@pytest.fixture
def arr_file(tmp_path):
    def write(p, name="arr.json"):
        path = tmp_path / name
        path.write_text(json.dumps(p.to_json()))
        return str(path)
    return write


def test_bound_johnson(capsys):
    code, out = run(capsys, "bound", "--preset", "johnson", "--v", "7", "--d", "3", "--t", "1")
    assert code == 0
    assert out["bound"] == "15" and out["feasible"] is True
    assert out["bound_closed_form"] == "15" and out["match"] is True
    assert out["f"] == ["1", "0", "5/7", "2/7"]
    assert out["params"]["r"] == "-5" and out["params"]["s_star"] == "-7/2"


def test_bound_from_file_uses_closed_scalar(capsys, arr_file):
    code, out = run(capsys, "bound", "--input", arr_file(array("hamming-3-4")), "--t", "2")
    assert code == 0 and out["bound"] == "9" and out["match"] is True


def test_verify_hamming(capsys):
    code, out = run(capsys, "verify", "--preset", "hamming", "--n", "3", "--d", "4")
    assert code == 0 and out["all_passed"]
    assert all(c["passed"] for c in out["checks"])
    assert any(c["name"].startswith("family bound") for c in out["checks"])


def test_verify_degenerate_array(capsys, arr_file):
    code, out = run(capsys, "verify", "--input", arr_file(alternating(5)))
    assert code == 0
    assert any(c["name"] == "EKR construction refused" and c["passed"] for c in out["checks"])


def test_d4_down_twice(capsys, arr_file, tmp_path):
    src = arr_file(array("qracah-4"))
    code, once = run(capsys, "d4", "--g", "down", "--input", src)
    assert code == 0
    mid = tmp_path / "mid.json"
    mid.write_text(json.dumps(once))
    code, twice = run(capsys, "d4", "--g", "down", "--input", str(mid))
    assert ParameterArray.from_json(twice) == array("qracah-4")


def test_realize_round_trip(capsys):
    code, out = run(capsys, "realize", "--family", "krawtchouk", "--d", "3", "--r", "5",
                    "--s", "2", "--s-star", "-1/3")
    assert code == 0
    from leonard_ekr import KrawtchoukParams, krawtchouk
    r = realize(krawtchouk(KrawtchoukParams(3, 5, 2, Fraction(-1, 3))))
    assert [[Fraction(x) for x in row] for row in out["gram"]] == [list(row) for row in r.gram.rows]
    assert [Fraction(x) for x in out["v"]] == list(r.v)


def test_ekr_single_and_all(capsys):
    args = ["ekr", "--family", "q-racah", "--d", "3", "--q", "1/3", "--s", "2", "--s-star", "-5",
            "--r1", "7/2"]
    code, out = run(capsys, *args, "--t", "0")
    assert code == 0
    assert set(out) >= {"t", "w_split", "w_dual_standard", "w_standard", "delta"}
    assert out["w_dual_standard"] == ["1"] * 4
    code, out = run(capsys, *args)
    assert [s["t"] for s in out["systems"]] == [0, 1, 2, 3]


def test_info(capsys):
    code, out = run(capsys, "info", "--preset", "johnson", "--v", "9", "--d", "4")
    assert out["beta"] == "2" and out["ekr_admissible"] is True
    assert out["vartheta"][0] == "1" and out["vartheta"][-1] == "1"


def test_validate_reports(capsys, arr_file):
    p = array("johnson-7-3")
    data = p.to_json()
    data["varphi"][1] = "0"
    bad = arr_file(ParameterArray.from_json(data), "bad.json")
    code, out = run(capsys, "validate", "--input", bad)
    assert code == 3 and "varphi[2] zero" in out["failures"]
    code, out = run(capsys, "validate", "--input", arr_file(p))
    assert code == 0 and out["valid"]


@pytest.mark.parametrize("argv, expected", [
    (["bound", "--preset", "johnson", "--v", "6", "--d", "3", "--t", "1"], 2),
    (["bound", "--preset", "johnson", "--v", "7", "--d", "3"], 2),
    (["bound", "--preset", "johnson", "--v", "7", "--d", "3", "--t", "9"], 2),
    (["info", "--preset", "hamming", "--n", "2", "--d", "2", "--family", "krawtchouk"], 2),
    (["info", "--family", "q-racah", "--d", "3", "--q", "2", "--s", "3", "--s-star", "5",
      "--r1", "7", "--r2", "1"], 3),
    (["d4", "--preset", "hamming", "--n", "2", "--d", "2", "--g", "sideways"], 2),
])
def test_exit_codes(capsys, argv, expected):
    code, out = run(capsys, *argv)
    assert code == expected and "error" in out


def test_malformed_file(capsys, tmp_path):
    path = tmp_path / "x.json"
    path.write_text('{"d": 2, "theta": ["0", "1"]')
    code, _ = run(capsys, "info", "--input", str(path))
    assert code == 2


def test_inadmissible_exit(capsys, arr_file):
    code, out = run(capsys, "bound", "--input", arr_file(alternating(5)), "--t", "1")
    assert code == 4 and "q = -1" in out["detail"]


def test_decimal_and_output(capsys, tmp_path):
    dest = tmp_path / "out.json"
    code = main(["bound", "--preset", "hamming", "--n", "3", "--d", "4", "--t", "1",
                 "--decimal", "2", "--output", str(dest)])
    assert code == 0 and capsys.readouterr().out == ""
    out = json.loads(dest.read_text())
    assert out["bound"] == "27" and out["approximate_decimal"]["bound"] == "27.00"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "leonard_ekr", "bound", "--preset", "hamming",
                           "--n", "2", "--d", "2", "--t", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["f"] == ["1", "0", "1"]
