import pytest

from disktile.corpus import generate


@pytest.fixture(scope="session")
def corpus4():
    tilings = []
    for n in range(1, 5):
        tilings.extend(generate(n))
    return tilings


@pytest.fixture(scope="session")
def corpus5():
    tilings = []
    for n in range(1, 6):
        tilings.extend(generate(n))
    return tilings


@pytest.fixture(scope="session")
def corpus7():
    tilings = []
    for n in range(1, 8):
        tilings.extend(generate(n))
    return tilings
