import pytest

from amalgam.instances import standard_instances


@pytest.fixture(scope="session")
def instances():
    return standard_instances()
