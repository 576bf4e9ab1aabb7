import json

import pytest

from qtensor import builtin, load_group
from qtensor.cli import EXIT_CAPPED, EXIT_INVALID, EXIT_OK, main, parse_config
from qtensor.groups import are_isomorphic


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_defaults():
    cfg = parse_config(["tensor", "C2"])
    assert cfg.q == 0 and cfg.max_cosets == 1_000_000 and cfg.max_order == 16


def test_tensor_c2(capsys):
    code, out, _ = run(capsys, "tensor", "builtin:C2", "--q", "0")
    r = json.loads(out)
    assert code == EXIT_OK and r["tensor_order"] == 2 and r["wedge_order"] == 1


def test_tensor_q_list(capsys):
    code, out, _ = run(capsys, "tensor", "S3", "--q-list", "0,1")
    assert code == EXIT_OK and [r["q"] for r in json.loads(out)] == [0, 1]


def test_compare_d4_q8(capsys):
    code, out, _ = run(capsys, "compare", "builtin:D4", "builtin:Q8", "--mode", "isoclinic")
    r = json.loads(out)
    assert code == EXIT_OK and r["verdict"] is True and r["witness"]["mode"] == "classical"


def test_compare_negative_still_exit_zero(capsys):
    code, out, _ = run(capsys, "compare", "C2", "C4", "--mode", "q", "--q", "2")
    assert code == EXIT_OK and json.loads(out)["verdict"] is False


def test_order_guard(capsys):
    code, _, err = run(capsys, "tensor", "builtin:S5", "--q", "2")
    assert code == EXIT_INVALID and "120" in err


def test_bad_inputs(capsys):
    assert run(capsys, "tensor", "builtin:Nope")[0] == EXIT_INVALID
    assert run(capsys, "tensor", "C2", "--q", "-1")[0] == EXIT_INVALID
    assert run(capsys, "compare", "C2", "C4", "--mode", "strong")[0] == EXIT_INVALID
    assert run(capsys, "frobnicate")[0] == EXIT_INVALID


def test_capped(capsys):
    code, out, _ = run(capsys, "tensor", "E2^3", "--max-cosets", "100")
    assert code == EXIT_CAPPED and json.loads(out)["status"] == "capped"


def test_unwritable_path(capsys, tmp_path):
    code, _, _ = run(capsys, "tensor", "C2", "--out", str(tmp_path / "missing" / "r.json"))
    assert code == EXIT_INVALID


def test_info_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "info", "D4")
    info = json.loads(out)
    assert code == EXIT_OK and info["d"] == 2 and info["center_order"] == 2
    path = tmp_path / "d4.json"
    path.write_text(json.dumps(info["group"]))
    assert are_isomorphic(load_group(f"file:{path}"), builtin("D4"))


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == EXIT_OK and "Q8" in json.loads(out)["builtin"]


def test_verify_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", "--corpus", "C2,S3", "--q-list", "0,1"]
    assert main(args + ["--out", str(a)]) == EXIT_OK
    assert main(args + ["--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    assert "wall_time" not in a.read_text()


def test_verify_text_and_timings(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemma", "--corpus", "C2", "--q", "1", "--format", "text")
    assert code == EXIT_OK and out.strip().endswith("OK") and "[lemma]" in out
    code, out, _ = run(capsys, "verify", "--suite", "oracle", "--corpus", "C2", "--q", "0", "--timings")
    assert code == EXIT_OK and "wall_time" in out


def test_text_failure_lines():
    from qtensor.cli import CommandConfig, _text

    data = {"ok": False, "suites": [{"suite": "theorem", "counts": {"pass": 0, "fail": 1, "skipped": 0, "capped": 0},
            "items": [{"statement": "eta-image", "groups": ["S3"], "q": 0, "status": "fail", "detail": "x",
                       "counterexample": ["S3", 0]}]}]}
    text = _text(data, CommandConfig(command="verify"))
    assert "FAIL eta-image" in text and "FAILED" in text
