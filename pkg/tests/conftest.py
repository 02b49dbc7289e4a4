import pytest

from helpers import load_fixture


@pytest.fixture(scope="session")
def fig1():
    return load_fixture("fig1")


@pytest.fixture(scope="session")
def fig2a():
    return load_fixture("fig2a")


@pytest.fixture(scope="session")
def fig2b():
    return load_fixture("fig2b")


@pytest.fixture(scope="session")
def fig3():
    return load_fixture("fig3")


@pytest.fixture(scope="session")
def fig4():
    return load_fixture("fig4")
