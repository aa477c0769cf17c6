import json

import pytest

from wittlab.cli import main


def run_cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_witt_polys_json_a1(capsys):
    code, out, _ = run_cli(capsys, ["witt-polys", "--p", "2", "--len", "2", "--json"])
    assert code == 0
    payload = json.loads(out)
    # A_1 = X_1 + Y_1 - X_0 Y_0 in exponent-vector form, string coefficients
    a1 = payload["add"][1]
    assert a1["vars"] == ["X0", "X1", "Y0", "Y1"]
    assert a1["terms"] == [[[0, 0, 0, 1], "1"], [[0, 1, 0, 0], "1"], [[1, 0, 1, 0], "-1"]]


def test_witt_polys_byte_stable(capsys):
    _, out1, _ = run_cli(capsys, ["witt-polys", "--p", "3", "--len", "3", "--json"])
    _, out2, _ = run_cli(capsys, ["witt-polys", "--p", "3", "--len", "3", "--json"])
    assert out1 == out2


def test_classify_exit_and_classes(capsys):
    code, out, _ = run_cli(
        capsys, ["classify", "--p", "2", "--n", "3", "--field-deg", "2", "--json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "ok"
    assert len(payload["classes"]) == 3


def test_classify_byte_stable(capsys):
    args = ["classify", "--p", "3", "--n", "2", "--field-deg", "1", "--json"]
    _, out1, _ = run_cli(capsys, args)
    _, out2, _ = run_cli(capsys, args)
    assert out1 == out2


def test_hopf_kernel_text(capsys):
    code, out, _ = run_cli(
        capsys, ["hopf", "--p", "2", "--family", "kernel", "--r", "1", "--s", "1", "--m", "2"]
    )
    assert code == 0
    assert "T1^2 = T0" in out
    assert "T0(x)T0" in out
    assert "axioms_pass: True" in out


def test_hopf_selfdual_json(capsys):
    code, out, _ = run_cli(
        capsys, ["hopf", "--p", "2", "--family", "selfdual-example", "--json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["generators"] == ["T0", "T1", "U0", "U1"]
    assert payload["invariants"]["order_exponent"] == 4
    assert payload["axioms_pass"]


def test_duality_report(capsys):
    code, out, _ = run_cli(
        capsys, ["duality", "--p", "2", "--r", "1", "--s", "2", "--m", "2", "--json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "ok"
    assert payload["dimension_identity"]
    assert payload["invariants_match"]


def test_unknown_subcommand_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_missing_subcommand_exit_2(capsys):
    assert main([]) == 2


def test_guard_exit_2(capsys, monkeypatch):
    monkeypatch.setenv("WD_GUARD_DIM", "4")
    code, out, _ = run_cli(
        capsys, ["hopf", "--p", "2", "--family", "selfdual-example", "--json"]
    )
    assert code == 2
    assert json.loads(out)["status"] == "budget-exceeded"
