import random

import pytest

from edet.algebras import OCTONIONS, QUATERNIONS, MatrixRing, nonpower_associative_algebra
from edet.rings import QQ, PrimeField


@pytest.fixture
def rng():
    return random.Random(20111203)


@pytest.fixture(scope="session")
def nonpa():
    return nonpower_associative_algebra()


@pytest.fixture(scope="session")
def rings():
    return {
        "rational": QQ,
        "mod7": PrimeField(7),
        "quaternion": QUATERNIONS,
        "octonion": OCTONIONS,
        "matrixring2": MatrixRing(2),
    }
