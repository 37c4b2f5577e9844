import json
import subprocess
import sys

import pytest

from bpskalc.cli import run
from bpskalc.exactpoly import LaurentPoly
from bpskalc.shuffle import a_element, shuffle_mul


def out_json(capsys):
    return json.loads(capsys.readouterr().out)


def test_a_element_json(capsys):
    assert run(["a-element", "-d", "2", "-v", "1", "--format", "json"]) == 0
    assert LaurentPoly.from_json_obj(out_json(capsys)) == a_element(2, 1).value


def test_e_class_text(capsys):
    assert run(["e-class", "-d", "2", "-v", "1"]) == 0
    assert "z1" in capsys.readouterr().out


def test_shuffle_mul_files(tmp_path, capsys):
    f = LaurentPoly.mono(1, z=(1,))
    lhs = tmp_path / "f.json"
    lhs.write_text(f.to_json())
    assert run(["shuffle-mul", "--lhs", str(lhs), "--rhs", str(lhs), "--kernel", "xip", "--format", "json"]) == 0
    assert LaurentPoly.from_json_obj(out_json(capsys)) == shuffle_mul(f, f, "xip")
    assert run(["shuffle-mul", "--lhs", str(lhs), "--rhs", str(lhs), "--kernel", "w", "--format", "json"]) == 0
    assert len(out_json(capsys)["denominator"]) == 2


def test_divcheck_exit_codes(capsys):
    assert run(["divcheck", "-d", "2", "-v", "1"]) == 0
    assert run(["divcheck", "-d", "2", "-v", "0"]) == 1
    assert "q1q2-1" in capsys.readouterr().out


def test_wheel_one_based(capsys):
    assert run(["wheel", "-d", "3", "-v", "1", "--indices", "1,2,3", "--format", "json"]) == 0
    assert out_json(capsys)["vanishes"] is True
    assert run(["wheel", "-d", "3", "-v", "1", "--indices", "1,1,1"]) == 2
    assert run(["wheel", "-d", "3", "-v", "1", "--indices", "0,1,2"]) == 2


def test_bwb_compare(capsys):
    assert run(["bwb-expand", "-n", "2", "-d", "1", "-v", "0", "--compare-shuffle", "--format", "json"]) == 0
    assert out_json(capsys)["matches_shuffle"] is True


@pytest.mark.parametrize("args", [
    ["--mode", "1236bis", "-n", "3", "-d", "1", "-v", "1", "-a", "2"],
    ["--mode", "cor44", "-n", "2", "-d", "1", "-v", "0", "--route", "S"],
    ["--mode", "primitive", "-n", "2", "-d", "1", "-v", "1"],
])
def test_coproduct_modes(args):
    assert run(["coproduct-check"] + args) == 0


def test_primitives(capsys):
    assert run(["primitives", "-n", "2", "--shuffle", "-d", "1", "-v", "0", "--seed", "11", "--format", "json"]) == 0
    obj = out_json(capsys)
    assert obj["dimension"] == 1 and obj["kernel_dims"] == [1, 1, 1]


def test_magic_weights(capsys):
    assert run(["magic-weights", "-d", "2", "-w", "0", "--format", "json"]) == 0
    assert out_json(capsys) == [["-1", "1"], ["0", "0"]]


def test_dtseries(capsys):
    assert run(["dtseries", "-N", "6", "--check", "--format", "json"]) == 0
    obj = out_json(capsys)
    assert obj["ok"] and obj["macmahon"] == [1, 1, 3, 6, 13, 24, 48]


def test_usage_errors(capsys):
    assert run(["a-element", "-d", "2"]) == 2
    assert run(["a-element", "-d", "9", "-v", "1"]) == 2
    with pytest.raises(SystemExit) as exc:
        run(["no-such-command"])
    assert exc.value.code == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "bpskalc", "magic-weights", "-d", "1", "-w", "0"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "(0)"
