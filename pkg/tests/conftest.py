import pytest

from circproto import find_pugs

PUBLISHED = [1, 3, 6, 12, 13, 16, 19, 22, 26, 29, 32, 35, 38, 41]


@pytest.fixture(scope="session")
def pugs14():
    return find_pugs(14, 1.0)


@pytest.fixture(scope="session")
def pugs14_relaxed():
    return find_pugs(14, 1.0, strict=False)


@pytest.fixture(scope="session")
def pugs20():
    return find_pugs(20, 1.0)
