import sys
from pathlib import Path

import pytest

from hilbext.algebra import FiniteHilbertAlgebra, enumerate_algebras

HERE = Path(__file__).parent
FIXTURES = HERE.parent / "fixtures"
sys.path.insert(0, str(HERE))


def chain3():
    return FiniteHilbertAlgebra(((2, 2, 2), (0, 2, 2), (0, 1, 2)), 2, 0, labels=("0", "a", "1"))


def vee():
    return FiniteHilbertAlgebra(((2, 1, 2), (0, 2, 2), (0, 1, 2)), 2, labels=("x", "y", "1"))


def small_algebras(max_n=4, cls="hilbert"):
    return [H for n in range(1, max_n + 1) for H in enumerate_algebras(n, cls)]


@pytest.fixture
def H3():
    return chain3()


@pytest.fixture
def Hp():
    return vee()


@pytest.fixture
def fixtures_dir():
    return FIXTURES
