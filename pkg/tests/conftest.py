import pytest

from nislie.catalog import named


@pytest.fixture(scope="session")
def hei_double():
    return named("hei-double")


@pytest.fixture(scope="session")
def ba_double():
    return named("ba-double")


@pytest.fixture(scope="session")
def h104():
    return named("h1-0-4")


@pytest.fixture(scope="session")
def h105():
    return named("h1-0-5")


@pytest.fixture(scope="session")
def gl22():
    return named("gl-2-2")
