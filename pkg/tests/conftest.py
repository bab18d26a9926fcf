import pytest

from horncalc.horn import HornTable


@pytest.fixture(scope="session")
def cache():
    return HornTable()
