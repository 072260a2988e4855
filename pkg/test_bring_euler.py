import pytest

from boolalg import BoolAlgebra, DomainError
from bring_euler import (ExpBase, big_e, cb, check_base_independence, check_euler_pair, check_pair_decomposition,
                         check_pair_exp_equality, check_scalar_identities, exp_e, nonzero_bases, sb, suite)
from reports import PASS, REFUTED
from weak_bring import pair


def test_zero_base_rejected(alg2):
    with pytest.raises(DomainError):
        ExpBase(alg2.element(0))


def test_scalar_functions(alg2):
    base = ExpBase(alg2.element(0b01))
    x = alg2.element(0b01)
    assert exp_e(base, x).mask == 0b11
    assert exp_e(base, alg2.element(0b11)).mask == 0b01
    assert cb(x).mask == 0b10
    assert sb(x) == x


def test_scalar_identities_every_base(small_alg):
    for base in nonzero_bases(small_alg):
        reports = check_scalar_identities(small_alg, base)
        assert len(reports) == 5
        assert all(r.status == PASS for r in reports)


def test_euler_pair_formula(small_alg):
    for base in nonzero_bases(small_alg):
        assert check_euler_pair(small_alg, base).passed
        # e^h = h
        assert big_e(base, pair(small_alg, 0, small_alg.full)) == pair(small_alg, 0, small_alg.full)


def test_printed_equality_refuted_with_smallest_witness(alg1):
    as_printed, variant = check_pair_exp_equality(alg1, ExpBase(alg1.element(1)))
    assert as_printed.status == REFUTED
    assert not as_printed.asserted
    assert "u=(0,0) v=(0,1)" in as_printed.counterexample
    assert variant.status == PASS


@pytest.mark.parametrize("n", [1, 2, 3])
def test_homomorphism_holds_for_every_base(n):
    alg = BoolAlgebra(n)
    for base in nonzero_bases(alg):
        assert check_pair_exp_equality(alg, base).variant.passed
        assert check_pair_decomposition(alg, base).passed


def test_base_independence(small_alg):
    report = check_base_independence(small_alg)
    assert report.passed
    assert report.cases == (small_alg.size - 1) * small_alg.size


def test_suite_merges_bases(alg2):
    reports = {r.name: r for r in suite(alg2)}
    printed = reports["pair_exp_equality_as_printed[n=2]"]
    assert printed.status == REFUTED
    assert printed.details["bases"] == ["01", "10", "11"]
    assert reports["pair_exp_homomorphism[n=2]"].cases == 3 * 16 * 16
    assert all(r.acceptable for r in reports.values())


def test_single_base_suite(alg2):
    reports = suite(alg2, ExpBase(alg2.element(0b10)))
    assert all(r.details.get("bases", ["10"]) == ["10"] for r in reports)


def test_pair_cap():
    alg = BoolAlgebra(4)
    with pytest.raises(DomainError):
        check_pair_exp_equality(alg, ExpBase(alg.element(1)))
