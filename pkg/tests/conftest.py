import pytest

from ryserplanes.constructions import build_h1, build_h2


@pytest.fixture(scope="session")
def h1_32():
    return build_h1(3, 2)


@pytest.fixture(scope="session")
def h1_33():
    return build_h1(3, 3)


@pytest.fixture(scope="session")
def h2_42():
    return build_h2(4, 2)
