import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hecsbox.curve import HyperellipticCurve, find_point
from hecsbox.field import PrimeField

EXAMPLE_F = [3, 1, 2, 0, 0, 1]  # x^5 + 2x^2 + x + 3
P_BIG = 10**34 + 1233


@pytest.fixture(scope="session")
def F11():
    return PrimeField(11)


@pytest.fixture(scope="session")
def Fbig():
    return PrimeField(P_BIG)


@pytest.fixture(scope="session")
def curve1(F11):
    return HyperellipticCurve(F11, [], EXAMPLE_F)


@pytest.fixture(scope="session")
def curve2(Fbig):
    return HyperellipticCurve(Fbig, [], EXAMPLE_F)


@pytest.fixture(scope="session")
def curve13h():
    # nonzero h to exercise the general model
    return HyperellipticCurve(PrimeField(13), [1, 1], EXAMPLE_F)


@pytest.fixture(scope="session")
def example2_points(curve2):
    return [(find_point(curve2, 0), 1), (find_point(curve2, 1), 1)]
