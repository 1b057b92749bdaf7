import json
import subprocess
import sys

import pytest

from f1hall.cli import main
from conftest import QUIVER_DIR

A2 = str(QUIVER_DIR / "a2.json")
POINT = str(QUIVER_DIR / "point.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_reps(capsys):
    code, out, _ = run(capsys, "reps", "--quiver", A2, "--dim", "1,1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [d["class"] for d in doc] == ["1,1;a=", "1,1;a=0>0"]
    assert doc[1]["literal"] == {"dims": {"1": 1, "2": 1}, "maps": {"a": [[0, 0]]}}


def test_mul_s2_s1(capsys):
    s2 = '{"dims":{"2":1},"maps":{}}'
    code, out, _ = run(capsys, "mul", "--quiver", A2, s2, "1,0;a=", "--format", "json")
    assert code == 0
    assert json.loads(out) == [
        {"class": "1,1;a=", "coeff": "1/1"},
        {"class": "1,1;a=0>0", "coeff": "1/1"},
    ]


def test_comul_text(capsys):
    code, out, _ = run(capsys, "comul", "--quiver", POINT, "2")
    assert code == 0
    assert out.splitlines() == ["1 [0] ⊗ [2]", "1 [1] ⊗ [1]", "1 [2] ⊗ [0]"]


def test_act_and_coact(capsys):
    code, out, _ = run(capsys, "act", "--quiver", POINT, '{"dims":{"1":1}}', '{"dims":{},"form":{}}')
    assert code == 0 and out.strip() == "2 [2;b=1,0]"
    h_pt = '{"dims":{"1":2},"maps":{},"form":{"1":[1,0]}}'
    code, out, _ = run(capsys, "coact", "--quiver", POINT, h_pt, "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc) == 2
    assert doc == [
        {"class": ["0", "2;b=1,0"], "coeff": "1/1"},
        {"class": ["1", "0;b="], "coeff": "1/1"},
    ]


def test_forms_asymmetric_dim_warns(capsys):
    code, out, err = run(capsys, "forms", "--quiver", A2, "--dim", "1,0", "--format", "json")
    assert code == 0
    assert json.loads(out) == []
    assert "warning" in err


def test_forms_lists_classes(capsys):
    code, out, _ = run(capsys, "forms", "--quiver", "point", "--dim", "3")
    assert code == 0 and len(out.split()) == 2


def test_primitives(capsys):
    code, out, _ = run(capsys, "primitives", "--quiver", A2, "--cap", "1,1", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert sorted(doc["primitives"]) == ["0,1;a=", "1,0;a=", "1,1;a=0>0"]
    assert len(doc["plus"]) == 2 and len(doc["minus"]) == 1


def test_verify_all_point_cap_4(capsys):
    code, out, _ = run(capsys, "verify", "all", "--quiver", POINT, "--cap", "4", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert all(r["passed"] for r in reports)
    assert "wall_time" not in reports[0]


def test_verify_exit_code_on_failure(capsys):
    # non_hopf needs room for H(pt); at cap 1 no witness exists
    code, out, _ = run(capsys, "verify", "non_hopf", "--quiver", POINT, "--cap", "1")
    assert code == 1 and out.startswith("FAIL")


def test_verify_is_byte_identical(capsys):
    _, first, _ = run(capsys, "verify", "all", "--quiver", A2, "--cap", "2,2", "--format", "json")
    _, second, _ = run(capsys, "verify", "all", "--quiver", A2, "--cap", "2,2", "--format", "json", "--jobs", "2")
    assert first == second


@pytest.mark.parametrize(
    "content",
    [
        "not json",
        '{"vertices": "1"}',
        '{"vertices":["1"],"arrows":[{"name":"a","src":"1","tgt":"9"}]}',
        '{"vertices":["1","2"],"arrows":[],"involution":{"vertices":{"1":"2"},"arrows":{}}}',
    ],
)
def test_malformed_quiver_file(tmp_path, capsys, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    code, _, err = run(capsys, "reps", "--quiver", str(path), "--dim", "1")
    assert code != 0 and err.startswith("error:")


def test_non_contravariant_involution(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(
        '{"vertices":["1","2"],"arrows":[{"name":"a","src":"1","tgt":"2"}],'
        '"involution":{"vertices":{"1":"1","2":"2"},"arrows":{"a":"a"}}}'
    )
    code, _, err = run(capsys, "verify", "yetter_drinfeld", "--quiver", str(path), "--cap", "1,1")
    assert code != 0 and "contravariant" in err


def test_missing_file_and_bad_literal(capsys):
    code, _, err = run(capsys, "reps", "--quiver", "/nonexistent.json", "--dim", "1")
    assert code != 0 and "cannot read" in err
    code, _, err = run(capsys, "mul", "--quiver", A2, '{"dims":{"1":1},"maps":{"a":[[0,0]]}}', "1,0;a=")
    assert code != 0 and "error" in err
    code, _, err = run(capsys, "coact", "--quiver", POINT, "2;b=0,0")
    assert code != 0
    code, _, err = run(capsys, "reps", "--quiver", A2, "--dim", "1")
    assert code != 0 and "2 vertices" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "f1hall", "verify", "yetter_drinfeld", "--quiver", POINT, "--cap", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.startswith("PASS yetter_drinfeld")
