"""
Power sums of 2x2 matrices with determinant 1:

    A + A^2 + ... + A^9 = (tr(A) + 1)(tr(A^3) + 1) A^5

power_sum() accumulates the left side directly and serves as the oracle for
rhs_factored(). Entries may be floats or fractions.Fraction; with Fraction
entries both sides are computed exactly.

Input file format: one matrix per line, four entries row-major, separated by
whitespace. Entries may be integers, decimals or fractions such as 1/2.

Usage:
    python run_checks.py matrix --random 1000 --seed 42
    python run_checks.py matrix --input samples/matrices.txt
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import pandas as pd
from tqdm import tqdm

from reports import CheckReport, verdict

logger = logging.getLogger(__name__)

SUM_TERMS = 9
MIDDLE_POWER = 5
DET_TOL = 1e-9
DEFAULT_REL_TOL = 1e-6
DEFAULT_RANDOM_MATRICES = 1000
DEFAULT_SEED = 42
ENTRY_RANGE = 3.0
MIN_PIVOT = 1e-3
FLOAT_EXAMPLE_TOL = 1e-12


class PreconditionError(ValueError):
    """The matrix does not have determinant 1."""


class MatrixInputError(ValueError):
    """Unreadable matrix file or invalid generator arguments."""


@dataclass(frozen=True)
class Mat2:
    a11: object
    a12: object
    a21: object
    a22: object

    def __post_init__(self):
        for value in self.entries:
            if not isinstance(value, Fraction) and not math.isfinite(value):
                raise MatrixInputError(f"matrix entries must be finite, got {value!r}")

    @property
    def entries(self) -> tuple:
        return self.a11, self.a12, self.a21, self.a22

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, (int, Fraction)) for v in self.entries)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(*(u + v for u, v in zip(self.entries, other.entries)))

    def scale(self, s) -> "Mat2":
        return Mat2(*(s * v for v in self.entries))

    def __str__(self):
        return "[[{}, {}], [{}, {}]]".format(*(str(v) for v in self.entries))


IDENTITY = Mat2(1, 0, 0, 1)
UNIPOTENT = Mat2(1, 1, 0, 1)
DIAGONAL = Mat2(2, 0, 0, Fraction(1, 2))


def mat_mul(A: Mat2, B: Mat2) -> Mat2:
    return Mat2(A.a11 * B.a11 + A.a12 * B.a21, A.a11 * B.a12 + A.a12 * B.a22,
                A.a21 * B.a11 + A.a22 * B.a21, A.a21 * B.a12 + A.a22 * B.a22)


def mat_pow(A: Mat2, k: int) -> Mat2:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"power must be a positive integer, got {k!r}")
    out = A
    for _ in range(k - 1):
        out = out @ A
    return out


def trace(A: Mat2):
    return A.a11 + A.a22


def det(A: Mat2):
    return A.a11 * A.a22 - A.a12 * A.a21


def power_sum(A: Mat2) -> Mat2:
    total, term = A, A
    for _ in range(SUM_TERMS - 1):
        term = term @ A
        total = total + term
    return total


def rhs_factored(A: Mat2) -> Mat2:
    scalar = (trace(A) + 1) * (trace(mat_pow(A, 3)) + 1)
    return mat_pow(A, MIDDLE_POWER).scale(scalar)


def to_exact(A: Mat2) -> Mat2:
    return Mat2(*(Fraction(v) for v in A.entries))


def to_float(A: Mat2) -> Mat2:
    return Mat2(*(float(v) for v in A.entries))


@dataclass
class IdentityReport:
    lhs: Mat2
    rhs: Mat2
    max_abs_error: float
    max_rel_error: float
    det_input: float
    tol_rel: float

    def __post_init__(self):
        if self.max_abs_error < 0 or self.max_rel_error < 0:
            raise ValueError("errors are nonnegative")

    @property
    def passed(self) -> bool:
        return self.max_rel_error <= self.tol_rel

    @property
    def exact(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {
            "lhs": [str(v) for v in self.lhs.entries],
            "rhs": [str(v) for v in self.rhs.entries],
            "max_abs_error": self.max_abs_error,
            "max_rel_error": self.max_rel_error,
            "det": self.det_input,
        }


def verify_identity(A: Mat2, tol_rel: float = DEFAULT_REL_TOL) -> IdentityReport:
    """Compare power_sum(A) with rhs_factored(A).

    Entries of magnitude below 1 are compared absolutely.
    """
    d = det(A)
    if abs(d - 1) > DET_TOL:
        raise PreconditionError(f"det(A) = {float(d)!r}, the identity needs det(A) = 1")
    lhs, rhs = power_sum(A), rhs_factored(A)
    abs_err = [abs(u - v) for u, v in zip(lhs.entries, rhs.entries)]
    rel_err = [e / max(abs(u), 1) for e, u in zip(abs_err, lhs.entries)]
    return IdentityReport(lhs, rhs, float(max(abs_err)), float(max(rel_err)), float(d), tol_rel)


def cayley_hamilton_gap(A: Mat2):
    """|tr(A^3) - (tr(A)^3 - 3 tr(A))| for a det-1 matrix, relative to max(1, |tr(A^3)|)."""
    if abs(det(A) - 1) > DET_TOL:
        raise PreconditionError(f"det(A) = {float(det(A))!r}, the trace relation needs det(A) = 1")
    t3 = trace(mat_pow(A, 3))
    t = trace(A)
    return abs(t3 - (t ** 3 - 3 * t)) / max(1, abs(t3))


def random_sl2(seed: int, count: int) -> list:
    """Reproducible det-1 matrices: a, b, c uniform in [-3, 3] with |a| >= 1e-3, d = (1 + bc) / a."""
    if count < 1:
        raise MatrixInputError(f"count must be at least 1, got {count}")
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        a = rng.uniform(-ENTRY_RANGE, ENTRY_RANGE)
        while abs(a) < MIN_PIVOT:
            a = rng.uniform(-ENTRY_RANGE, ENTRY_RANGE)
        b, c = rng.uniform(-ENTRY_RANGE, ENTRY_RANGE, size=2)
        out.append(Mat2(float(a), float(b), float(c), float((1 + b * c) / a)))
    return out


def read_matrices(path) -> list:
    try:
        df = pd.read_csv(path, sep=r"\s+", header=None, dtype=str, comment="#", engine="python")
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
        raise MatrixInputError(f"{path}: {exc}") from exc
    if df.shape[1] != 4:
        raise MatrixInputError(f"{path}: expected 4 entries per line, got {df.shape[1]}")
    out = []
    for lineno, row in enumerate(df.itertuples(index=False), 1):
        try:
            out.append(Mat2(*(Fraction(v) for v in row)))
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise MatrixInputError(f"{path}: row {lineno}: {exc}") from exc
    logger.debug("read %d matrices from %s", len(out), path)
    return out


def _expect(name, A, expected, ref):
    """Exact and float paths of one example against its known sum."""
    exact = verify_identity(to_exact(A), 0.0)
    approx = verify_identity(to_float(A))
    failure = None
    if exact.lhs != expected or not exact.exact:
        failure = f"A={A}: exact sum {exact.lhs}, factored {exact.rhs}, expected {expected}"
    elif approx.max_rel_error > FLOAT_EXAMPLE_TOL:
        failure = f"A={A}: float path off by {approx.max_rel_error:.3e} relative"
    return verdict(name, ref, failure, 2, str, expected=str(expected),
                   float_rel_error=approx.max_rel_error)


def check_examples() -> list:
    return [
        _expect("matrix_example_unipotent", UNIPOTENT, Mat2(9, 45, 0, 9),
                "A = [[1,1],[0,1]]: Σ_{k=1}^{9} A^k = (tr A + 1)(tr A³ + 1) A^5 = [[9,45],[0,9]]"),
        _expect("matrix_example_diagonal", DIAGONAL, Mat2(1022, 0, 0, Fraction(511, 512)),
                "A = diag(2, 1/2): Σ_{k=1}^{9} A^k = (tr A + 1)(tr A³ + 1) A^5 = diag(1022, 511/512)"),
    ]


def check_batch(name: str, matrices: list, tol_rel: float = DEFAULT_REL_TOL, progress: bool = True,
                **details) -> list:
    """The identity and the trace relation over a batch; first failure in order wins."""
    worst = 0.0
    worst_trace = 0.0
    failure = trace_failure = None
    for i, A in enumerate(tqdm(matrices, desc=name, unit="matrix", disable=not progress)):
        report = verify_identity(A, tol_rel)
        worst = max(worst, report.max_rel_error)
        if failure is None and not report.passed:
            failure = f"#{i} A={A}: relative error {report.max_rel_error:.3e} > {tol_rel:g}"
        gap = float(cayley_hamilton_gap(A))
        worst_trace = max(worst_trace, gap)
        if trace_failure is None and gap > tol_rel:
            trace_failure = f"#{i} A={A}: tr(A³) differs from tr(A)³ - 3 tr(A) by {gap:.3e}"
    return [
        verdict(f"{name}_power_sum", "Σ_{k=1}^{9} A^k = (tr(A) + 1)(tr(A³) + 1) A^5, det A = 1",
                failure, len(matrices), str, max_rel_error=worst, tol_rel=tol_rel, **details),
        verdict(f"{name}_trace_cube", "tr(A³) = tr(A)³ − 3 tr(A), det A = 1",
                trace_failure, len(matrices), str, max_rel_error=worst_trace, **details),
    ]


def check_inputs(matrices: list, tol_rel: float = DEFAULT_REL_TOL) -> list:
    """One report per matrix read from a file."""
    reports = []
    for i, A in enumerate(matrices):
        result = verify_identity(A, tol_rel)
        failure = None if result.passed else f"A={A}: sum {result.lhs}, factored {result.rhs}"
        reports.append(verdict(f"matrix_input[{i:04d}]", "Σ_{k=1}^{9} A^k = (tr(A) + 1)(tr(A³) + 1) A^5",
                               failure, 1, str, exact=A.is_exact, **result.to_dict()))
    return reports


def suite(count: int = DEFAULT_RANDOM_MATRICES, seed: int = DEFAULT_SEED, tol_rel: float = DEFAULT_REL_TOL,
          progress: bool = True) -> list:
    matrices = random_sl2(seed, count)
    logger.info("verifying %d random det-1 matrices (seed %d)", count, seed)
    return check_examples() + check_batch("matrix_random", matrices, tol_rel, progress, seed=seed)
