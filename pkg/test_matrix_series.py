import os
from fractions import Fraction

import pytest

from matrix_series import (DIAGONAL, IDENTITY, UNIPOTENT, Mat2, MatrixInputError, PreconditionError,
                           cayley_hamilton_gap, check_batch, check_examples, check_inputs, det, mat_pow, power_sum,
                           random_sl2, read_matrices, rhs_factored, suite, to_exact, to_float, trace,
                           verify_identity)


def test_unipotent_example_is_exact():
    report = verify_identity(UNIPOTENT)
    assert report.lhs == Mat2(9, 45, 0, 9)
    assert report.exact
    assert report.max_rel_error == 0.0


def test_diagonal_example_both_paths():
    exact = verify_identity(to_exact(DIAGONAL), 0.0)
    assert exact.lhs == Mat2(1022, 0, 0, Fraction(511, 512))
    assert exact.rhs == exact.lhs
    approx = verify_identity(to_float(DIAGONAL))
    assert approx.max_rel_error <= 1e-12


def test_examples_report():
    reports = check_examples()
    assert [r.name for r in reports] == ["matrix_example_unipotent", "matrix_example_diagonal"]
    assert all(r.passed for r in reports)


def test_power_and_trace():
    assert mat_pow(UNIPOTENT, 5) == Mat2(1, 5, 0, 1)
    assert mat_pow(IDENTITY, 1) == IDENTITY
    assert trace(DIAGONAL) == Fraction(5, 2)
    assert det(DIAGONAL) == 1
    assert power_sum(IDENTITY) == Mat2(9, 0, 0, 9)
    assert rhs_factored(IDENTITY) == Mat2(9, 0, 0, 9)
    with pytest.raises(ValueError):
        mat_pow(UNIPOTENT, 0)


def test_determinant_precondition():
    with pytest.raises(PreconditionError):
        verify_identity(Mat2(1, 1, 1, 1))
    with pytest.raises(PreconditionError):
        cayley_hamilton_gap(Mat2(2, 0, 0, 2))


def test_identity_needs_det_one():
    # det = 4
    A = Mat2(2, 0, 0, 2)
    assert power_sum(A) != rhs_factored(A)


def test_random_matrices_are_reproducible():
    first, second = random_sl2(7, 20), random_sl2(7, 20)
    assert first == second
    assert all(abs(det(A) - 1) < 1e-9 for A in first)
    with pytest.raises(MatrixInputError):
        random_sl2(7, 0)


def test_random_batch_passes():
    reports = suite(count=1000, seed=42, progress=False)
    by_name = {r.name: r for r in reports}
    assert by_name["matrix_random_power_sum"].passed
    assert by_name["matrix_random_power_sum"].cases == 1000
    assert by_name["matrix_random_trace_cube"].passed
    assert by_name["matrix_random_power_sum"].details["seed"] == 42


def test_batch_reports_first_failure():
    reports = check_batch("strict", [UNIPOTENT, DIAGONAL], tol_rel=-1.0, progress=False)
    assert [r.name for r in reports] == ["strict_power_sum", "strict_trace_cube"]
    assert all(not r.passed for r in reports)
    assert reports[0].counterexample.startswith("#0 A=[[1, 1], [0, 1]]")
    assert reports[0].cases == 2


def test_cayley_hamilton_exact():
    A = Mat2(Fraction(3), Fraction(1), Fraction(2), Fraction(1))
    assert cayley_hamilton_gap(A) == 0


def test_nonfinite_entries_rejected():
    with pytest.raises(MatrixInputError):
        Mat2(float("nan"), 0, 0, 1)


def test_sample_matrices(samples_dir):
    matrices = read_matrices(os.path.join(samples_dir, "matrices.txt"))
    assert len(matrices) == 5
    assert matrices[1] == Mat2(2, 0, 0, Fraction(1, 2))
    assert all(A.is_exact for A in matrices)
    reports = check_inputs(matrices)
    assert [r.name for r in reports][:2] == ["matrix_input[0000]", "matrix_input[0001]"]
    assert all(r.passed for r in reports)


@pytest.mark.parametrize("content", ["1 2 3\n", "1 2 3 x\n", "1 2 3 1/0\n"])
def test_malformed_matrix_files(tmp_path, content):
    path = tmp_path / "m.txt"
    path.write_text(content)
    with pytest.raises(MatrixInputError):
        read_matrices(path)


def test_missing_matrix_file(tmp_path):
    with pytest.raises(MatrixInputError):
        read_matrices(tmp_path / "absent.txt")
