import pytest

from srg import load_example


@pytest.fixture(scope="session")
def fig1a():
    return load_example("fig1a")


@pytest.fixture(scope="session")
def fig1b():
    return load_example("fig1b")


@pytest.fixture(scope="session")
def mapk():
    return load_example("mapk")
