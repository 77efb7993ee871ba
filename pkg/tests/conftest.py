"""
Pytest configuration and fixtures for sd-enumerators tests.
"""
import numpy as np
import pytest

from sdenumerators.codes import LinearCode, builtin_code
from sdenumerators.config import Settings
from sdenumerators.enumerator import derivative
from sdenumerators.quadring import QuadRat


@pytest.fixture
def repetition2():
    """The length-2 repetition code {00, 11}."""
    return LinearCode(2, (0b11,), name="rep2")


@pytest.fixture
def e8():
    """The extended Hamming code [8,4,4]."""
    return builtin_code("e8")


@pytest.fixture
def c2x4():
    """Four copies of the length-2 repetition code."""
    return builtin_code("c2x4")


@pytest.fixture
def golay24():
    """The extended Golay code [24,12,8]."""
    return builtin_code("golay24")


@pytest.fixture(scope="session")
def golay_d19():
    """Order-19 derivative of the Golay code, computed once."""
    return derivative(builtin_code("golay24"), 19)


@pytest.fixture
def small_blocks():
    """Settings that split enumeration into many small blocks on two threads."""
    return Settings(workers=2, chunk_bits=3)


@pytest.fixture
def length8_candidates():
    """The eight symmetric even-weight length-8 distributions with A_0 = 1."""
    return [(1, 0, a2, 0, 14 - 2 * a2, 0, a2, 0, 1) for a2 in range(8)]


@pytest.fixture
def random_quadrats():
    """Seeded generator of lists of QuadRat values with small rational components."""
    rng = np.random.default_rng(20240229)

    def draw(count):
        parts = rng.integers(-40, 41, size=(count, 2))
        dens = rng.integers(1, 9, size=(count, 2))
        return [
            QuadRat(f"{int(a)}/{int(p)}", f"{int(b)}/{int(q)}")
            for (a, b), (p, q) in zip(parts, dens)
        ]

    return draw
