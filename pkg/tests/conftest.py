import pytest

from downsum import classical_numbers, correction_family


@pytest.fixture(scope="session")
def family20():
    """One order-20 weight family shared by the structural tests."""
    return correction_family(20)


@pytest.fixture(scope="session")
def constants20(family20):
    return classical_numbers(family20)
