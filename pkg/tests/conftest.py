import pytest

from primroot import build_context


@pytest.fixture(scope="session")
def ctx7():
    return build_context(7)


@pytest.fixture(scope="session")
def ctx41():
    return build_context(41)


@pytest.fixture(scope="session")
def ctx101():
    return build_context(101)


@pytest.fixture(scope="session")
def ctx10007():
    return build_context(10007)
