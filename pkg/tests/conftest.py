import pytest

from oddmoduli.canonical_ideal import initial_forms
from oddmoduli.cli import run_pipeline
from oddmoduli.semigroup import from_generators


def odd(g):
    return from_generators(range(g, 2 * g - 1))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running checks")


@pytest.fixture(scope="session")
def G5():
    return initial_forms(odd(5))


@pytest.fixture(scope="session")
def G6():
    return initial_forms(odd(6))


@pytest.fixture(scope="session")
def run5():
    return run_pipeline([5, 6, 7, 8], samples=0)


@pytest.fixture(scope="session")
def run6():
    return run_pipeline([6, 7, 8, 9, 10], samples=0)
