import pytest

from normtrace.curve import build_curve
from normtrace.gf import build_field


@pytest.fixture(scope="session")
def f8():
    return build_field(2, 3)


@pytest.fixture(scope="session")
def f27():
    return build_field(3, 3)


@pytest.fixture(scope="session")
def f64():
    return build_field(2, 6)


@pytest.fixture(scope="session")
def curve23():
    return build_curve(2, 3)


@pytest.fixture(scope="session")
def curve33():
    return build_curve(3, 3)


@pytest.fixture(scope="session")
def curve24():
    return build_curve(2, 4)
