import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from grouplab.corpus import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    quaternion8,
    symmetric,
)


@pytest.fixture(scope="session")
def s3():
    return symmetric(3)


@pytest.fixture(scope="session")
def s4():
    return symmetric(4)


@pytest.fixture(scope="session")
def s5():
    return symmetric(5)


@pytest.fixture(scope="session")
def a4():
    return alternating(4)


@pytest.fixture(scope="session")
def a5():
    return alternating(5)


@pytest.fixture(scope="session")
def d8():
    return dihedral(8)


@pytest.fixture(scope="session")
def q8():
    return quaternion8()


@pytest.fixture(scope="session")
def s3s3():
    return direct_product(symmetric(3), symmetric(3))


@pytest.fixture(scope="session")
def c6():
    return cyclic(6)


@pytest.fixture(scope="session")
def e49():
    return elementary_abelian(7, 2)
