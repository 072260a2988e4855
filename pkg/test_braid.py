import os

import numpy as np
import pytest

from boolalg import BoolAlgebra, DomainError
from braid import (SOLUTION_COUNT_M2, BraidError, BraidVerdict, SquareMapTable, TableFormatError, blend,
                   braid_check, check_blend, check_complement_map, check_enumeration, check_map,
                   check_parametrised_family, composites, enumerate_solutions, identity, pair_map, phi_complement,
                   phi_param, read_map, suite, swap, write_map)
from reports import FAIL


@pytest.mark.parametrize("m", [1, 2, 5])
def test_identity_and_swap_are_solutions(m):
    assert braid_check(identity(m)).holds
    assert braid_check(swap(m)).holds


def test_constant_map_fails():
    phi = SquareMapTable(2, np.array([[[0, 1], [0, 1]], [[0, 1], [0, 1]]]))
    found = braid_check(phi)
    assert found.holds is False
    assert found.witness == (0, 0, 0)
    assert found.lhs == (0, 1, 1)
    assert found.rhs == (0, 0, 1)
    lhs, rhs = composites(phi, 0, 0, 0)
    assert tuple(int(v) for v in lhs) == found.lhs
    report = check_map(phi, "constant")
    assert report.status == FAIL
    assert report.name == "braid_constant[m=2]"


def test_single_cell_change_is_refuted():
    table = np.array([[[1, 1], [0, 1]], [[1, 0], [1, 1]]])
    phi = SquareMapTable(2, table)
    found = braid_check(phi)
    assert not found.holds
    assert found.witness == (0, 0, 0)
    assert found.lhs == (1, 1, 0)
    assert found.rhs == (0, 1, 1)
    assert check_map(phi, "one_cell").status == FAIL


def test_verdict_consistency():
    with pytest.raises(ValueError):
        BraidVerdict(True, witness=(0, 0, 0))


def test_complement_map(small_alg):
    assert braid_check(phi_complement(small_alg)).holds
    assert check_complement_map(small_alg).passed


def test_parametrised_family(small_alg):
    for x in small_alg.masks():
        assert braid_check(phi_param(small_alg, small_alg.element(x))).holds
    report = check_parametrised_family(small_alg)
    assert report.passed
    assert report.details["parameters"] == small_alg.size


def test_blend_matches_family(small_alg):
    for x in small_alg.masks():
        assert blend(small_alg, small_alg.element(x)) == phi_param(small_alg, small_alg.element(x))
    assert phi_param(small_alg, small_alg.element(0)) == identity(small_alg.size)
    assert phi_param(small_alg, small_alg.element(small_alg.full)) == pair_map(small_alg)
    assert check_blend(small_alg).passed


def test_complement_map_values(alg1):
    phi = phi_complement(alg1)
    assert phi(0, 1) == (0, 1)
    assert phi(1, 0) == (1, 0)


def test_enumeration_is_frozen():
    count, solutions = enumerate_solutions(2)
    assert count == SOLUTION_COUNT_M2 == 43
    assert identity(2) in solutions
    assert swap(2) in solutions
    assert pair_map(BoolAlgebra(1)) in solutions
    report = check_enumeration()
    assert report.passed
    assert report.cases == 256


def test_enumeration_only_for_two_points():
    with pytest.raises(BraidError):
        enumerate_solutions(3)


def test_family_cap():
    with pytest.raises(DomainError):
        phi_param(BoolAlgebra(4), BoolAlgebra(4).element(1))


def test_suite(alg2):
    assert [r.name for r in suite(alg2)] == ["braid_complement_map[n=2]", "braid_parametrised_family[n=2]",
                                             "braid_blend_form[n=2]"]


def test_table_validation():
    with pytest.raises(TableFormatError):
        SquareMapTable(2, np.zeros((2, 2)))
    with pytest.raises(TableFormatError):
        SquareMapTable(2, np.full((2, 2, 2), 2))


def test_map_file(tmp_path, samples_dir):
    phi = read_map(os.path.join(samples_dir, "swap_map.txt"))
    assert phi == swap(3)
    path = tmp_path / "p.txt"
    write_map(pair_map(BoolAlgebra(1)), path)
    assert read_map(path) == pair_map(BoolAlgebra(1))


@pytest.mark.parametrize("content", ["", "2\n0 0 -> 0 0\n", "2\n0 0 -> 0 0\n0 0 -> 1 1\n0 1 -> 0 1\n1 0 -> 1 0\n",
                                     "2\n0 0 => 0 0\n", "x\n"])
def test_malformed_map_files(tmp_path, content):
    path = tmp_path / "bad.txt"
    path.write_text(content)
    with pytest.raises(TableFormatError):
        read_map(path)
