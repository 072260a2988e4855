import os

import pytest

from boolalg import BoolAlgebra

SAMPLES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "samples")
collect_ignore = ["examples"]


@pytest.fixture(params=[1, 2, 3], ids=lambda n: f"n={n}")
def small_alg(request):
    """Boolean algebras small enough for every exhaustive check."""
    return BoolAlgebra(request.param)


@pytest.fixture
def alg1():
    return BoolAlgebra(1)


@pytest.fixture
def alg2():
    return BoolAlgebra(2)


@pytest.fixture
def samples_dir():
    return SAMPLES
