"""CLI surface: exit codes, document structure, determinism."""
import json

import pytest

from krull.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    doc = json.loads(out) if out.strip() else None
    return code, doc, err


def test_gb_golden(capsys):
    code, doc, _ = run_json(capsys, "gb", "--ring", "Q[x,y]",
                            "--ideal", "x^2+y^2-1, x-y")
    assert code == 0
    assert doc["schema"] == 1
    assert doc["results"]["basis"] == ["x - y", "y^2 - 1/2"]


def test_gb_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "gb", "--ring", "Q[x,x]", "--ideal", "x")
    assert code == 2
    assert "duplicate" in err


def test_gb_missing_ideal_exit_2(capsys):
    code, _, _ = run(capsys, "gb", "--ring", "Q[x]")
    assert code == 2


def test_decompose_squarefree(capsys):
    code, doc, _ = run_json(capsys, "decompose", "--ring", "Q[x,y]",
                            "--ideal", "x*y")
    assert code == 0
    assert set(doc["results"]["irreducible_components"]) == {"(x)", "(y)"}
    assert doc["results"]["index_of_reducibility"] == 2


def test_decompose_example_one(capsys):
    code, doc, _ = run_json(capsys, "decompose", "--example-1", "3")
    assert code == 0
    res = doc["results"]
    assert len(res["primary_decomposition"]) == 2
    assert sorted(res["assh_dims"]) == [1, 3]
    assert res["unmixed_component"] == ["y"]


def test_decompose_non_monomial_exit_4(capsys):
    code, _, err = run(capsys, "decompose", "--ring", "Q[x,y]",
                       "--ideal", "x+y")
    assert code == 4
    assert "unsupported" in err


def test_invariants_plane(capsys):
    code, doc, _ = run_json(capsys, "invariants", "--ring", "Q[x,y]",
                            "--ideal", "x, y", "--nmax", "6")
    assert code == 0
    res = doc["results"]
    assert res["e_coeffs"] == [1, 0, 0]
    assert res["f_coeffs"] == [1, 0]
    assert res["socle_dim"] == 1
    assert res["hs_series"][:3] == [1, 3, 6]


def test_invariants_example_two(capsys):
    code, doc, _ = run_json(capsys, "invariants", "--example-2", "2", "2",
                            "--ideal", "x + 2*y + 3*z", "--nmax", "6")
    assert code == 0
    res = doc["results"]
    assert res["dim"] == 1
    assert res["ir_series"] == [2] * 7
    assert res["h0m"]["length"] == 1
    assert res["e_coeffs"] == [4, -1]
    assert res["f_coeffs"] == [2]


def test_check_cm_control(capsys):
    code, doc, _ = run_json(capsys, "check", "--ring", "Q[x,y]",
                            "--samples", "2", "--seed", "3", "--degree", "2")
    assert code == 0
    assert doc["results"]["cm"]["is_cm"] is True
    assert doc["results"]["all_checks_hold"] is True


def test_check_deterministic(capsys):
    args = ("check", "--example-2", "2", "2", "--samples", "2", "--seed", "5")
    code1, doc1, _ = run_json(capsys, *args)
    code2, doc2, _ = run_json(capsys, *args)
    assert code1 == code2 == 0
    assert doc1["results"] == doc2["results"]


def test_verify_example_two_passes(capsys):
    code, doc, _ = run_json(capsys, "verify-example", "--example", "2",
                            "--seed", "7", "--samples", "20")
    assert code == 0
    assert doc["results"]["verdict"] == "pass"
    assert doc["results"]["ir_values"] == [2] * 20
    assert doc["results"]["degenerate_samples"] == []


def test_verify_example_one_precondition(capsys):
    code, _, err = run(capsys, "verify-example", "--example", "1", "--d", "2")
    assert code == 2
    assert "d >= 3" in err


def test_verify_example_two_precondition(capsys):
    code, _, _ = run(capsys, "verify-example", "--example", "2", "--a", "1")
    assert code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "doc.json"
    code, out, _ = run(capsys, "gb", "--ring", "Q[x]", "--ideal", "x",
                       "--json", "--out", str(target))
    assert code == 0
    assert out == ""
    doc = json.loads(target.read_text())
    assert doc["results"]["basis"] == ["x"]


def test_field_override(capsys):
    code, doc, _ = run_json(capsys, "gb", "--ring", "Q[x,y]",
                            "--field", "F7", "--ideal", "x^2+y^2-1, x-y")
    assert code == 0
    # 1/2 = 4 mod 7
    assert doc["results"]["basis"] == ["x + 6*y", "y^2 + 3"]
