import pytest
from hypothesis import HealthCheck, settings

from greenring import RingContext

settings.register_profile(
    "ci",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def ctx24():
    return RingContext(2, 4)


@pytest.fixture(scope="session")
def ctx33():
    return RingContext(3, 3)


@pytest.fixture(scope="session")
def ctx52():
    return RingContext(5, 2)


@pytest.fixture(scope="session")
def ctx72():
    return RingContext(7, 2)


@pytest.fixture(scope="session")
def ctx32():
    return RingContext(3, 2)
