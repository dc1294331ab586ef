import pytest

from ibsest.io import parse_observation_file
from ibsest.verify import fixture_dir


@pytest.fixture(scope="session")
def fixtures():
    return fixture_dir()


@pytest.fixture(scope="session")
def table1(fixtures):
    return parse_observation_file(fixtures / "table1.obs")


@pytest.fixture(scope="session")
def table3(fixtures):
    return parse_observation_file(fixtures / "table3.obs")


@pytest.fixture(scope="session")
def table5(fixtures):
    return parse_observation_file(fixtures / "table5.obs")
