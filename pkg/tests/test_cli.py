"""End-to-end command-line checks: golden outputs, JSON fidelity, exit codes."""

import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from qlinalg import Matrix, char_poly, inverse_gauss_jordan
from qlinalg.cli import main

Q = Fraction

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---- golden files ------------------------------------------------------------------


def test_solve_trace_golden(capsys):
    code, out, _ = run(capsys, "solve", "3 2 | 5 ; -2 1 | -6", "--trace")
    assert code == 0
    assert out == (GOLDEN / "solve_trace.txt").read_text()


def test_det_golden(capsys):
    code, out, _ = run(capsys, "det", "1 0 2; 3 1 -1; 1 2 4")
    assert code == 0
    assert out == (GOLDEN / "det.txt").read_text()


def test_eigen_golden(capsys):
    code, out, _ = run(capsys, "eigen", "2 0 1; 0 1 -2; 0 0 -1")
    assert code == 0
    assert out == (GOLDEN / "eigen.txt").read_text()


def test_gram_schmidt_golden(capsys):
    code, out, _ = run(capsys, "gram-schmidt", "1 0 1 1; 0 1 0 1; 0 1 1 1")
    assert code == 0
    assert out == (GOLDEN / "gram_schmidt.txt").read_text()


# ---- JSON output -------------------------------------------------------------------


def test_solve_json_round_trips_exact_fractions(capsys):
    code, out, _ = run(
        capsys, "solve", "3 2 | 5 ; -2 1 | -6", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verb"] == "solve"
    assert payload["result"]["kind"] == "unique"
    values = [Q(s) for s in payload["result"]["values"]]
    assert values == [Q(17, 7), Q(-8, 7)]


def test_inverse_json_is_lossless(capsys):
    code, out, _ = run(capsys, "inverse", "1 2; 3 4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["invertible"] is True
    rebuilt = Matrix([[Q(s) for s in row] for row in payload["matrix"]])
    assert rebuilt == inverse_gauss_jordan(Matrix([[1, 2], [3, 4]]))


def test_eigen_json_carries_exact_coefficients(capsys):
    code, out, _ = run(capsys, "eigen", "2 0 1; 0 1 -2; 0 0 -1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    coeffs = tuple(Q(s) for s in payload["char_poly"]["coefficients"])
    assert coeffs == char_poly(
        Matrix([[2, 0, 1], [0, 1, -2], [0, 0, -1]])
    ).coefficients
    assert payload["diagonalizable"] is True
    spaces = {e["value"]: e["basis"] for e in payload["eigenvalues"]}
    assert [[Q(s) for s in v] for v in spaces["-1"]] == [[Q(-1, 3), 1, 1]]


def test_json_trace_replays_to_the_printed_matrix(capsys):
    # multiplying the reported elementary matrices onto the input, oldest
    # first, must land exactly on the reported reduced matrix
    code, out, _ = run(
        capsys, "rref", "0 2 4; 1 1 1; 2 0 -2", "--trace", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    current = Matrix([[0, 2, 4], [1, 1, 1], [2, 0, -2]])
    for step in payload["trace"]:
        e = Matrix([[Q(s) for s in row] for row in step["elementary"]])
        current = e @ current
    final = Matrix([[Q(s) for s in row] for row in payload["matrix"]])
    assert current == final


def test_power_json(capsys):
    code, out, _ = run(
        capsys, "power", "2 0 1; 0 1 -2; 0 0 -1", "--power", "6",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["matrix"] == [
        ["64", "0", "21"],
        ["0", "1", "0"],
        ["0", "0", "1"],
    ]


# ---- exit codes --------------------------------------------------------------------


def test_inconsistent_system_is_an_answer(capsys):
    code, out, _ = run(capsys, "solve", "1 1 | 1; 1 1 | 2")
    assert code == 0
    assert out == "inconsistent (row 2: 0 = 1)\n"


def test_singular_inverse_is_an_answer(capsys):
    code, out, _ = run(capsys, "inverse", "2 3; 4 6")
    assert code == 0
    assert out == "not invertible (det = 0)\n"


def test_not_linear_is_an_answer(capsys):
    code, out, _ = run(capsys, "transform", "x1; 13")
    assert code == 0
    assert out == "not linear: coordinate 2 has constant 13\n"


def test_not_diagonalizable_is_an_answer(capsys):
    code, out, _ = run(
        capsys, "diagonalize", "1 0 0 0; 0 1 1 1; 0 0 -1 1; 0 0 0 -1"
    )
    assert code == 0
    assert "not diagonalizable: eigenvalue -1" in out
    assert "geometric multiplicity 1 < algebraic multiplicity 2" in out


def test_unsplit_spectrum_is_an_answer(capsys):
    code, out, _ = run(capsys, "diagonalize", "0 -1; 1 0")
    assert code == 0
    assert "eigenvalues do not all lie in Q" in out
    assert "1 + x^2" in out


def test_singular_cramer_coefficient_exits_one(capsys):
    code, _, err = run(capsys, "cramer", "1 1 | 2; 1 1 | 3")
    assert code == 1
    assert err.startswith("error:")


def test_negative_power_of_singular_exits_one(capsys):
    code, _, err = run(capsys, "power", "1 1; 1 1", "--power", "-1")
    assert code == 1
    assert "error:" in err


def test_all_zero_gram_schmidt_exits_one(capsys):
    code, _, err = run(capsys, "gram-schmidt", "0 0; 0 0")
    assert code == 1
    assert "error:" in err


def test_dependent_map_points_exit_one(capsys):
    code, _, err = run(capsys, "transform", "1 2 -> 1; 2 4 -> 2")
    assert code == 1
    assert "error:" in err


def test_missing_bar_is_a_usage_error(capsys):
    code, _, err = run(capsys, "solve", "1 1 1; 1 1 2")
    assert code == 2
    assert "'|'" in err


def test_unexpected_bar_is_a_usage_error(capsys):
    code, _, err = run(capsys, "det", "1 2 | 3; 4 5 | 6")
    assert code == 2


def test_ragged_rows_exit_two(capsys):
    code, _, err = run(capsys, "det", "1 2; 3")
    assert code == 2
    assert "error:" in err


def test_malformed_scalar_exits_two(capsys):
    code, _, err = run(capsys, "det", "1 two; 3 4")
    assert code == 2


def test_cofactor_method_refuses_trace(capsys):
    code, _, err = run(
        capsys, "det", "1 0; 0 1", "--method", "cofactor", "--trace"
    )
    assert code == 2


def test_bad_entry_flag_exits_two(capsys):
    code, _, err = run(capsys, "inv-entry", "1 0; 0 1", "--entry", "0,1")
    assert code == 2
    assert "1-based" in err


# ---- input channels ----------------------------------------------------------------


def test_matrix_from_file(capsys, tmp_path):
    path = tmp_path / "m.txt"
    path.write_text("1 0 2\n3 1 -1\n1 2 4\n")
    code, out, _ = run(capsys, "det", str(path))
    assert code == 0
    assert out == "16\n"


def test_system_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("3 2 | 5 ; -2 1 | -6"))
    code, out, _ = run(capsys, "solve", "-")
    assert code == 0
    assert out == "unique: x1 = 17/7, x2 = -8/7\n"


# ---- a few more verbs, straight through the front door ------------------------------


def test_transform_pairs_with_apply(capsys):
    code, out, _ = run(
        capsys, "transform", "2 0 -> 0 1 4; -1 1 -> 2 1 5", "--apply", "3 5"
    )
    assert code == 0
    assert "T(3, 5) = (10, 9, 41)" in out


def test_kernel_of_coordinate_formulas(capsys):
    code, out, _ = run(capsys, "kernel", "-5x1; 2x2+x3; -x1; 0")
    assert code == 0
    assert "dimension: 1" in out
    assert "(0, -1/2, 1)" in out


def test_range_of_coordinate_formulas(capsys):
    code, out, _ = run(capsys, "range", "-5x1; 2x2+x3; -x1; 0")
    assert code == 0
    assert "(-5, 0, -1, 0)" in out
    assert "(0, 2, 0, 0)" in out


def test_subspace_verdict_no(capsys):
    code, out, _ = run(capsys, "subspace", "x; 1")
    assert code == 0
    assert out.startswith("subspace: no")


def test_dot_verb(capsys):
    code, out, _ = run(capsys, "dot", "2 4 1 3", "0 1 2 5")
    assert code == 0
    assert out == "21\n"


def test_cramer_verb(capsys):
    code, out, _ = run(capsys, "cramer", "2 -1 | 7; 3 4 | -5")
    assert code == 0
    assert out == "x1 = 23/11, x2 = -31/11\n"


def test_span_member_verb(capsys):
    code, out, _ = run(
        capsys, "span-member", "1 1 1 1; 0 0 1 1", "1 1 2 2"
    )
    assert code == 0
    assert out.startswith("member: yes")
