import json

import pytest

from onesided.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(capsys):
    assert run(capsys, "eval", "y*x - 1")[1].strip() == "0"
    code, out, _ = run(capsys, "eval", "E[0,0]", "--json")
    assert code == 0
    assert json.loads(out) == {"n": 1, "ring": "Q", "terms": [
        {"alpha": [0], "beta": [0], "coeff": "1"}, {"alpha": [1], "beta": [1], "coeff": "-1"}]}


def test_eval_n2_and_ring(capsys):
    assert run(capsys, "eval", "--n", "2", "--ring", "Zmod:5", "3*x1*7")[1].strip() == "x1"


def test_involution_pi_laurent(capsys):
    assert run(capsys, "involution", "x^2 y")[1].strip() == "x*y^2"
    assert run(capsys, "pi", "3x - 2y + 1")[1].strip() == "2"
    assert run(capsys, "laurent", "x^2 y^3")[1].strip() == "x^-1"


def test_act(capsys):
    assert run(capsys, "act", "--f", "E[2,3]", "--poly", "x^3")[1].strip() == "x^2"
    assert run(capsys, "act", "--side", "right", "--f", "x-1", "--poly", "1+y")[1].strip() == "-y"


def test_divide(capsys):
    assert run(capsys, "divide", "--f", "1-y", "--t", "x-1", "--side", "right")[1].strip() == "found: y"
    code, out, _ = run(capsys, "divide", "--f", "E[0,0]", "--t", "x-1", "--side", "left",
                       "--max-deg", "8", "--json")
    rep = json.loads(out)
    assert code == 0 and rep == {"status": "not-found-up-to-degree", "degree_used": 8, "quotient": None}


def test_tau(capsys):
    assert run(capsys, "tau", "--t", "y-1", "--a", "x")[1].strip() == "1 + x - x*y"


def test_regularity(capsys):
    code, out, _ = run(capsys, "regularity", "--t", "x-1", "--max-deg", "3", "--json")
    rep = json.loads(out)
    assert rep["passed"] and len(rep["boxes"]) == 4


def test_kernel_json_lines(capsys):
    code, out, _ = run(capsys, "kernel", "--n", "2", "--mult", "x1-x2", "--side", "right",
                       "--deg", "1", "--subspace", "e-span", "--json")
    lines = out.strip().splitlines()
    assert len(lines) == 8
    assert all(json.loads(line)["n"] == 2 for line in lines)


def test_coherence(capsys):
    code, out, _ = run(capsys, "coherence", "--max-deg", "2", "--json")
    rep = json.loads(out)
    assert [k["kernel_dimension"] for k in rep["kernels"]] == [1, 8, 27] and rep["passed"]


def test_oracle_check(capsys):
    code, out, _ = run(capsys, "oracle-check", "--trials", "200", "--max-len", "8", "--n", "3", "--json")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "identities", "--ring", "Z")
    assert code == 0 and "PASS  identities" in out


def test_verify_field_required(capsys):
    code, _, err = run(capsys, "verify", "--all", "--ring", "Zmod:6")
    assert code == 2 and "field required" in err


def test_parse_error_exit(capsys):
    code, _, err = run(capsys, "eval", "x2")
    assert code == 2 and "parse error" in err


def test_bad_ring(capsys):
    code, _, err = run(capsys, "eval", "--ring", "R", "x")
    assert code == 2


def test_missing_subcommand():
    with pytest.raises(SystemExit):
        main([])
