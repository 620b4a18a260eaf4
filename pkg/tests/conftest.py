from fractions import Fraction as Q

import pytest

from hopfkit import family as fam


@pytest.fixture(scope="session")
def hcm1():
    return fam.build_hcm(Q(1), 8)


@pytest.fixture(scope="session")
def ucm1():
    return fam.build_ucm(Q(1), 8)


@pytest.fixture(scope="session")
def kheis1():
    return fam.build_kheis(Q(1))


@pytest.fixture(scope="session")
def uheis2():
    return fam.build_uheis(Q(2))


@pytest.fixture(scope="session")
def ubplus1():
    return fam.build_ubplus(Q(1))
