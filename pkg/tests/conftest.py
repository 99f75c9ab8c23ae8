import pytest

from fcbsc.gf import field_make


@pytest.fixture(scope="session")
def gf2():
    return field_make(2)


@pytest.fixture(scope="session")
def gf3():
    return field_make(3)


@pytest.fixture(scope="session")
def gf4():
    return field_make(2, 2, [1, 1, 1])

