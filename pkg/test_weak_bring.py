import os

import numpy as np
import pytest

from boolalg import BoolAlgebra, DomainError
from reports import FAIL, PASS
from weak_bring import (AXIOM_COUNT, BRingCandidate, TableFormatError, boolean_algebra_ring, build_pair_ring,
                        check_axioms, check_commutative_product, check_decomposition, h, integers_mod, pair,
                        pair_at, read_table, suite, unit, write_table)


def test_pair_ring_is_a_weak_bring(small_alg):
    report = check_axioms(build_pair_ring(small_alg))
    assert report.passed, [e.counterexample for e in report if not e.passed]
    assert report.failed() == []
    assert len(report.entries) == AXIOM_COUNT


def test_axiom_names_and_notes(alg1):
    report = check_axioms(build_pair_ring(alg1))
    assert report.axiom(1).name == "pair_ring[n=1]:axiom_01"
    assert report.axiom(10).details["note"] == "as-printed"
    assert "note" not in report.axiom(9).details


def test_associativity_scan_covers_every_triple(alg2):
    report = check_axioms(build_pair_ring(alg2))
    assert report.axiom(4).cases == 16 ** 3
    assert report.axiom(2).cases == 16 ** 2


@pytest.mark.parametrize("cand", [integers_mod(4), integers_mod(6), boolean_algebra_ring(BoolAlgebra(2))],
                         ids=lambda c: c.name)
def test_rings_and_boolean_algebras_are_weak_brings(cand):
    assert check_axioms(cand).passed


def test_left_projection_join_is_refuted():
    cand = BRingCandidate(2, [[0, 0], [1, 1]], [[0, 0], [0, 1]], [0, 1], 0, 1, name="left")
    report = check_axioms(cand)
    assert 2 in report.failed()
    assert report.axiom(2).status == FAIL
    assert "x=0, y=1" in report.axiom(2).counterexample
    assert report.axiom(3).status == PASS


def test_unit_law_violation_names_the_element():
    cand = BRingCandidate(2, [[0, 1], [1, 1]], [[0, 0], [0, 0]], [1, 0], 0, 1, name="zero_product")
    report = check_axioms(cand)
    assert report.axiom(5).status == FAIL
    assert report.axiom(5).counterexample == "zero_product x=1: 0/0 != 1/1"
    assert report.axiom(6).status == PASS


def test_suite_skips_pair_ring_above_three_atoms():
    assert suite(BoolAlgebra(4)) == []


def test_h_is_idempotent(small_alg):
    assert h(small_alg) & h(small_alg) == h(small_alg)
    p = pair(small_alg, 1, small_alg.full)
    assert unit(small_alg) & p == p


def test_twisted_product(alg1):
    # (a, b) ^ (c, d) = (ac, ad v bc v bd)
    assert pair(alg1, 1, 0) & pair(alg1, 0, 1) == pair(alg1, 0, 1)
    assert pair(alg1, 1, 1) & pair(alg1, 1, 0) == pair(alg1, 1, 1)
    assert str(pair_at(alg1, 2)) == "(1,0)"


def test_pair_suite_extras(small_alg):
    ring = build_pair_ring(small_alg)
    assert check_commutative_product(ring).passed
    assert check_decomposition(small_alg).passed
    assert all(r.passed for r in suite(small_alg))


def test_pair_ring_cap():
    with pytest.raises(DomainError):
        build_pair_ring(BoolAlgebra(4))


def test_candidate_validation():
    with pytest.raises(TableFormatError):
        BRingCandidate(2, [[0, 2], [1, 1]], [[0, 0], [0, 1]], [0, 1], 0, 1)
    with pytest.raises(TableFormatError):
        BRingCandidate(2, [[0, 1]], [[0, 0], [0, 1]], [0, 1], 0, 1)
    with pytest.raises(TableFormatError):
        BRingCandidate(2, [[0, 1], [1, 1]], [[0, 0], [0, 1]], [0, 1], 0, 5)


def test_table_file(tmp_path, samples_dir):
    cand = read_table(os.path.join(samples_dir, "z4_ring.txt"))
    assert cand.m == 4
    assert check_axioms(cand).passed

    path = tmp_path / "copy.txt"
    write_table(cand, path)
    again = read_table(path)
    assert np.array_equal(again.prod_table, cand.prod_table)
    assert again.name == "table[copy.txt]"


@pytest.mark.parametrize("content", [
    "2 0", "2 0 1\n0 1\n1 1\n", "2 0 1 x", "0 0 0",
    "2 0 1 0 1 1 1 0 0 0 1 1 0\n",
    "2 0 1\n0 1 1\n1\n0 0\n0 1\n1 0\n",
])
def test_malformed_table_files(tmp_path, content):
    path = tmp_path / "bad.txt"
    path.write_text(content)
    with pytest.raises(TableFormatError):
        read_table(path)


def test_missing_table_file(tmp_path):
    with pytest.raises(TableFormatError):
        read_table(tmp_path / "absent.txt")
