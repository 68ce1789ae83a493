"""The batch front door: flags, exit codes, report schema, determinism."""

import json

import pytest

from osphom.cli import main
from osphom.superalg import algebra_to_config, preset_algebra
from osphom.linalg import FieldSpec

Q = FieldSpec.Q()


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_sto_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "sto", "--m", "2", "--n", "2",
                       "--preset", "dual_numbers_id:Q")
    assert code == 0
    rep = json.loads(out)
    assert rep["suite"] == "sto-relations"
    assert all(c["status"] == "pass" for c in rep["checks"])


def test_verify_algebra_bad_config_exits_1(tmp_path, capsys):
    # genuinely non-associative: (e1 e1) e1 = e2 e1 = 0 but e1 (e1 e1) = 1
    cfg = {
        "name": "broken",
        "field": {"kind": "Q"},
        "parity": [0, 0, 0],
        "unit": ["1/1", "0/1", "0/1"],
        "mul": [[0, 0, [[0, "1/1"]]], [0, 1, [[1, "1/1"]]], [0, 2, [[2, "1/1"]]],
                [1, 0, [[1, "1/1"]]], [2, 0, [[2, "1/1"]]],
                [1, 1, [[2, "1/1"]]], [1, 2, [[0, "1/1"]]]],
        "involution": [["1/1", "0/1", "0/1"], ["0/1", "1/1", "0/1"], ["0/1", "0/1", "1/1"]],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(cfg))
    code, out, _ = run(capsys, "verify", "--suite", "algebra", "--config", str(path))
    assert code == 1
    rep = json.loads(out)
    failing = {c["name"]: c for c in rep["checks"] if c["status"] == "fail"}
    assert "associativity" in failing
    assert failing["associativity"]["witness"] == [1, 1, 1]  # the failing triple


def test_malformed_config_exits_2(tmp_path, capsys):
    path = tmp_path / "garbage.json"
    path.write_text("{\"field\": {\"kind\": \"Q\"}}")
    code, _, err = run(capsys, "verify", "--suite", "algebra", "--config", str(path))
    assert code == 2 and "error" in err


def test_unknown_preset_and_suite_exit_2(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "algebra", "--preset", "nope:Q")
    assert code == 2
    code, _, _ = run(capsys, "verify", "--suite", "nope", "--preset", "ground_field_id:Q")
    assert code == 2
    code, _, _ = run(capsys, "verify", "--suite", "algebra")
    assert code == 2


def test_homology_functors(capsys):
    code, out, _ = run(capsys, "homology", "--functor", "hd1",
                       "--preset", "ground_field_id:Q")
    assert code == 0 and json.loads(out)["dim"] == 0
    code, out, _ = run(capsys, "homology", "--functor", "z",
                       "--preset", "ground_field_id:F3")
    assert code == 0 and json.loads(out)["dim"] == 2
    code, out, _ = run(capsys, "homology", "--functor", "rrr",
                       "--preset", "s_plus_sop:Q")
    assert code == 0 and json.loads(out)["dim"] == 2
    code, _, _ = run(capsys, "homology", "--functor", "nope",
                     "--preset", "ground_field_id:Q")
    assert code == 2


def test_h2_formula_selection(capsys):
    code, out, _ = run(capsys, "h2", "--m", "1", "--n", "1",
                       "--preset", "ground_field_id:F3")
    rep = json.loads(out)
    assert code == 0 and rep["oracle"] == 2 and rep["formula"] == 2 and rep["match"]
    code, out, _ = run(capsys, "h2", "--m", "2", "--n", "1", "--preset", "s_plus_sop:Q")
    rep = json.loads(out)
    assert code == 0 and rep["oracle"] == rep["formula"] == 2
    code, out, _ = run(capsys, "h2", "--m", "2", "--n", "2",
                       "--preset", "ground_field_id:Q")
    rep = json.loads(out)
    assert code == 0 and rep["oracle"] == rep["formula"] == 0
    # (2,1) without the central skew unit: formula omitted, oracle only
    code, out, _ = run(capsys, "h2", "--m", "2", "--n", "1",
                       "--preset", "ground_field_id:Q")
    rep = json.loads(out)
    assert code == 0 and rep["formula"] is None and rep["match"]


def test_reports_deterministic_modulo_timestamp(capsys):
    outs = []
    for _ in range(2):
        _, out, _ = run(capsys, "verify", "--suite", "algebra",
                        "--preset", "matrix_prp:Q:1")
        d = json.loads(out)
        d.pop("timestamp")
        outs.append(json.dumps(d, sort_keys=True))
    assert outs[0] == outs[1]


def test_out_file(tmp_path, capsys):
    target = tmp_path / "rep.json"
    code, out, _ = run(capsys, "homology", "--functor", "hc1",
                       "--preset", "grassmann_id:Q", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["dim"] == 1


def test_config_round_trip_through_cli(tmp_path, capsys):
    cfg = algebra_to_config(preset_algebra("matrix_prp", Q, (1,)))
    path = tmp_path / "m11.json"
    path.write_text(json.dumps(cfg))
    code, out, _ = run(capsys, "verify", "--suite", "algebra", "--config", str(path))
    assert code == 0
    code, out, _ = run(capsys, "h2", "--m", "1", "--n", "1", "--config", str(path))
    assert code == 0 and json.loads(out)["match"]
