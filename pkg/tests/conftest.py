import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from latspec import (
    build_affine,
    build_boolean,
    build_product,
    build_projective,
    build_uniform,
)


@pytest.fixture(scope="session")
def m3():
    return build_uniform(2, 3)


@pytest.fixture(scope="session")
def b1():
    return build_boolean(1)


@pytest.fixture(scope="session")
def b2():
    return build_boolean(2)


@pytest.fixture(scope="session")
def b3():
    return build_boolean(3)


@pytest.fixture(scope="session")
def fano():
    return build_projective(3, 2)


@pytest.fixture(scope="session")
def ag22():
    return build_affine(2, 2)


@pytest.fixture(scope="session")
def small_lattices(m3, b1, b2, b3, fano, ag22):
    """A cross-section of families for exhaustive law checks."""
    return [
        build_boolean(0),
        b1,
        b2,
        b3,
        m3,
        build_uniform(1, 1),
        build_uniform(2, 4),
        build_uniform(3, 4),
        fano,
        build_projective(2, 3),
        ag22,
        build_affine(1, 3),
        build_product(m3, b1),
        build_product(b2, b2),
    ]
