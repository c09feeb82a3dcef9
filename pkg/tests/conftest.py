import pytest

from implicanet import datasets


@pytest.fixture(scope="session")
def symbolic_table():
    return datasets.load_symbolic_table()


@pytest.fixture(scope="session")
def reference_context():
    return datasets.load_context()


@pytest.fixture(scope="session")
def reference_study():
    return datasets.load_study()
