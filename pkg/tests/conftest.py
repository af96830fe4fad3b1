import pytest
from hypothesis import HealthCheck, settings

from pairrank.registry import get_instance

settings.register_profile(
    "suite",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def instance_31():
    return get_instance("3.1").problem


@pytest.fixture(scope="session")
def instance_32():
    return get_instance("3.2").problem


@pytest.fixture(scope="session")
def instance_33():
    return get_instance("3.3").problem


@pytest.fixture(scope="session")
def instance_33_prime():
    return get_instance("3.3-prime").problem


@pytest.fixture(scope="session")
def instance_41():
    return get_instance("4.1").problem
