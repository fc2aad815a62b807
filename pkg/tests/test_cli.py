import json

import pytest

from coeffpolys import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_basis_laguerre_json(capsys):
    code, out, _ = run(capsys, "basis", "--family", "laguerre", "--n", "2", "--format", "json")
    assert code == 0
    body = json.loads(out)
    assert body["polynomials"] == [["1/1"], ["1/1", "-1/1"], ["1/1", "-2/1", "1/2"]]


def test_basis_monomial(capsys):
    code, out, _ = run(capsys, "basis", "--family", "monomial", "--n", "1")
    assert code == 0
    assert json.loads(out)["polynomials"][1] == ["0/1", "1/1"]


def test_nonpositive_alpha_is_a_usage_error(capsys):
    code, out, err = run(capsys, "basis", "--family", "hermite-prob", "--alpha", "0/1", "--n", "3")
    assert code == 2
    assert out == ""
    assert "alpha" in err


def test_missing_family_is_a_usage_error(capsys):
    assert run(capsys, "basis", "--n", "2")[0] == 2


def test_unparseable_option_exits_two(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["basis", "--family", "laguerre", "--alpha", "one half"])
    assert info.value.code == 2


def test_coeffs_laguerre(capsys):
    code, out, _ = run(capsys, "coeffs", "--family", "laguerre", "--n", "1")
    assert code == 0
    assert json.loads(out)["operator"]["q"] == [["1/1"], ["1/1", "-2/1"]]


def test_coeffs_legendre_closed_form(capsys):
    code, out, _ = run(capsys, "coeffs", "--family", "legendre", "--n", "3", "--check-closed-form")
    assert code == 0
    body = json.loads(out)
    assert body["operator"]["q"][1] == [] and body["operator"]["q"][3] == []
    assert body["closed_form_agreement"] == [True] * 4


def test_coeffs_without_closed_form_family(capsys):
    code, _, err = run(capsys, "coeffs", "--family", "monomial", "--n", "2", "--check-closed-form")
    assert code == 2


def test_coeffs_chebyshev_csv(capsys):
    code, out, _ = run(capsys, "coeffs", "--family", "chebyshev", "--n", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,c0,c1,c2"
    assert lines[3] == "2,-1/1,0/1,1/1"


def test_verify_ddq(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ddq", "--n", "20")
    assert code == 0
    body = json.loads(out)
    assert body["passed"] and all(c["ok"] for c in body["checks"])


def test_verify_interlacing_laguerre(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "interlacing", "--family", "laguerre", "--n", "10")
    assert code == 0
    rep = json.loads(out)["checks"][0]["report"]
    assert rep["strictly_interlacing"] and rep["all_in_unit_interval"]


def test_verify_stability(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "stability", "--family", "hermite-phys")
    assert code == 0
    assert json.loads(out)["orientation"] == "preserving"


def test_failed_check_exits_one(capsys):
    # seed 0 disk inputs include a counterexample for the Legendre map
    code, out, err = run(capsys, "verify", "--suite", "disk-image", "--family", "legendre",
                         "--count", "100", "--seed", "0")
    assert code == 1
    body = json.loads(out)
    assert body["first_failure"]["factors"]
    assert "failed" in err


def test_interval_inputs_pass(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "disk-image", "--family", "legendre",
                     "--count", "30", "--seed", "0", "--inputs", "interval")
    assert code == 0


def test_seeded_runs_are_byte_identical(capsys):
    argv = ["verify", "--suite", "classification", "--n", "8", "--count", "5", "--seed", "42"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    assert json.loads(first)["seed"] == 42


def test_output_dir_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(cli.OUTPUT_DIR_ENV, str(tmp_path))
    code, out, _ = run(capsys, "basis", "--family", "chebyshev", "--n", "3", "--format", "csv",
                       "--output", "sub/cheb.csv", "-v")
    assert code == 0 and out == ""
    text = (tmp_path / "sub" / "cheb.csv").read_text()
    assert text.splitlines()[-1] == "3,0/1,-3/1,0/1,4/1"


def test_verbose_logs_stay_off_stdout(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, err = run(capsys, "verify", "--suite", "genfun", "--order", "4", "--n", "4",
                         "--output", str(target), "-v")
    assert code == 0 and out == ""
    assert "wrote" in err
    assert json.loads(target.read_text())["passed"]


def test_order_below_n_is_rejected(capsys):
    assert run(capsys, "coeffs", "--family", "laguerre", "--n", "5", "--order", "3")[0] == 2


def test_custom_recurrence_flag(capsys):
    rec = json.dumps({"c": ["0/1", "0/1"], "lambda": ["1/1"], "p0": "1/1"})
    code, out, _ = run(capsys, "basis", "--family", "custom", "--recurrence", rec, "--n", "2")
    assert code == 0
    assert json.loads(out)["polynomials"][2] == ["-1/1", "0/1", "1/1"]
