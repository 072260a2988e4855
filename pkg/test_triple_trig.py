import pytest

from boolalg import BoolAlgebra, DomainError
from reports import PASS
from triple_trig import (PI, J, check_exp_addition, check_fundamental, check_product_algebra, cos3, exp3, one,
                         sin3, suite, triple, triple_at, zero)


def test_suite_passes(small_alg):
    reports = suite(small_alg)
    assert all(r.status == PASS for r in reports), [r.counterexample for r in reports if not r.passed]
    names = {r.name.split("[")[0] for r in reports}
    assert {"triple_exp_cos_addition", "triple_sin_addition", "triple_fundamental_formulas",
            "triple_euler_formula", "triple_product_formula", "triple_pi_identities",
            "triple_shape_facts"} <= names


def test_functions_on_one_triple(alg1):
    X = triple(alg1, 1, 0, 1)
    assert str(X) == "(1,0,1)"
    assert exp3(X) == triple(alg1, 0, 1, 1)
    assert cos3(X) == triple(alg1, 1, 1, 0)
    assert sin3(X) == triple(alg1, 0, 0, 1)


def test_constants(alg2):
    assert J(alg2) == triple(alg2, 0, 3, 3)
    assert PI(alg2) == triple(alg2, 3, 0, 0)
    assert cos3(PI(alg2)) == one(alg2)
    assert sin3(PI(alg2)) == zero(alg2)
    assert exp3(J(alg2) & PI(alg2)) == one(alg2)


def test_pair_scan_counts():
    assert check_exp_addition(BoolAlgebra(1)).cases == 8 * 8
    assert check_exp_addition(BoolAlgebra(2)).cases == 64 * 64


def test_fundamental_reports_both_variants(alg1):
    report = check_fundamental(alg1)
    assert report.passed
    assert report.details["variants"] == ["three-term", "two-term"]


def test_triple_order_is_lexicographic(alg1):
    assert str(triple_at(alg1, 0)) == "(0,0,0)"
    assert str(triple_at(alg1, 1)) == "(0,0,1)"
    assert str(triple_at(alg1, 4)) == "(1,0,0)"


def test_product_algebra_laws():
    assert check_product_algebra(BoolAlgebra(1)).passed
    assert check_product_algebra(BoolAlgebra(2)).passed
    with pytest.raises(DomainError):
        check_product_algebra(BoolAlgebra(3))


def test_exhaustive_cap():
    with pytest.raises(DomainError):
        check_exp_addition(BoolAlgebra(5))


def test_mixed_algebras_rejected():
    with pytest.raises(DomainError):
        triple(BoolAlgebra(1), 0, 0, 0) | triple(BoolAlgebra(2), 0, 0, 0)
