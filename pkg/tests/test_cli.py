"""Tests for the command-line surface: outputs, exit codes, determinism."""

import json

import pytest

from fpimmunity.cli import format_poly, main
from fpimmunity.gf import make_prime_field
from fpimmunity.ring import MultilinearPoly


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_format_poly():
    F3 = make_prime_field(3)
    poly = MultilinearPoly(4, F3, {0b0101: 1, 0b1001: 2, 0b0110: 2,
                                   0b1010: 1})
    assert format_poly(poly, 3) == "x1x3 - x2x3 - x1x4 + x2x4"
    assert format_poly(None, 3) == "0"
    assert format_poly(MultilinearPoly(2, F3, {0: 2}), 3) == "-1"
    F2 = make_prime_field(2)
    assert format_poly(MultilinearPoly(2, F2, {0b11: 1}), 2) == "x1x2"


def test_immunity_family_text(capsys):
    code, out, err = run(capsys, "immunity", "--family", "notmod",
                         "--n", "6", "--q", "3", "--p", "2")
    assert code == 0
    assert "degree: 2" in out
    assert "checked: True" in out


def test_immunity_family_json(capsys):
    code, out, _ = run(capsys, "immunity", "--family", "mod",
                       "--n", "6", "--q", "3", "--p", "2",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["degree"] == 3
    assert doc["checked"] is True


def test_immunity_table_file(capsys, tmp_path):
    path = tmp_path / "and2.txt"
    path.write_text("2 2\n0001\n")
    code, out, _ = run(capsys, "immunity", "--table", str(path),
                       "--format", "tsv")
    assert code == 0
    degree, method, checked, witness = out.strip().split("\t")
    assert degree == "2"
    assert checked == "1"
    assert witness == "x1x2"


def test_immunity_cross_check(capsys):
    code, out, _ = run(capsys, "immunity", "--family", "mod",
                       "--n", "5", "--q", "2", "--p", "3", "--cross-check")
    assert code == 0
    assert "degree:" in out


def test_immunity_cross_check_rejects_asymmetric(capsys, tmp_path):
    path = tmp_path / "asym.txt"
    path.write_text("2 2\n0010\n")
    code, _, err = run(capsys, "immunity", "--table", str(path),
                       "--cross-check")
    assert code == 2
    assert "symmetric" in err


def test_immunity_usage_errors(capsys):
    code, _, err = run(capsys, "immunity", "--family", "mod",
                       "--table", "nope", "--p", "2")
    assert code == 2
    code, _, err = run(capsys, "immunity", "--family", "mod",
                       "--n", "4", "--q", "2", "--p", "4")
    assert code == 2
    assert "not prime" in err
    code, _, err = run(capsys, "immunity", "--table", "/no/such/file")
    assert code == 2


def test_symmetric_subcommand(capsys):
    code, out, _ = run(capsys, "symmetric",
                       "--sym", "0,1,1,0,1,1,0", "--p", "2")
    assert code == 0
    assert "degree: 2" in out
    assert "method: symmetric" in out


def test_hilbert_subcommand(capsys):
    code, out, _ = run(capsys, "hilbert", "--family", "mod",
                       "--n", "6", "--q", "3", "--p", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "m\th_m\tbinom_sum\tdistance_bound"
    row2 = lines[3].split("\t")
    assert row2 == ["2", "22", "22", "2"]


def test_residue_subcommand(capsys):
    code, out, _ = run(capsys, "residue", "--n", "4", "--q", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True
    assert doc["measured_immunity"] > doc["bound_d"]
    # the subfield case reports its failure honestly with exit code 1
    code, out, _ = run(capsys, "residue", "--n", "6", "--q", "9")
    assert code == 1
    doc = json.loads(out)
    assert doc["pass"] is False


def test_matrix_subcommand(capsys):
    code, out, _ = run(capsys, "matrix", "rank",
                       "--entries", "1,2;2,4", "--p", "5")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "matrix", "det",
                       "--entries", "1,1;1,3", "--p", "5")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "matrix", "strong",
                       "--entries", "1,0;0,1", "--p", "2")
    assert code == 0 and out.strip() == "false"
    code, out, _ = run(capsys, "matrix", "pascal", "--p", "2")
    assert code == 0
    assert out.strip().splitlines() == ["1\t0", "1\t1"]
    code, out, _ = run(capsys, "matrix", "tensor",
                       "--entries", "1,0;1,1", "--entries2", "1,0;1,1",
                       "--p", "2")
    assert code == 0
    assert out.strip().splitlines()[-1] == "1\t1\t1\t1"


def test_output_determinism(capsys):
    argv = ["immunity", "--family", "notmod", "--n", "7", "--q", "3",
            "--p", "3", "--format", "json"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_verify_small_grid(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(ln.startswith("PASS") for ln in lines[:-1])
    total = lines[-1]
    assert total.endswith("checks passed")
    passed, ran = total.split()[0].split("/")
    assert passed == ran


def test_verify_fault_injection(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--inject-fault")
    assert code == 1
    fail_lines = [ln for ln in out.splitlines() if ln.startswith("FAIL")]
    assert len(fail_lines) == 1
    assert "complement-degree-formula" in fail_lines[0]
    assert "(4, 3, 2)" in fail_lines[0]


def test_verify_parallel_matches_serial(capsys):
    serial = run(capsys, "verify", "--max-n", "3")
    parallel = run(capsys, "verify", "--max-n", "3", "--jobs", "2")
    assert serial == parallel
