import pytest

from ordifind.data import load_socmed
from ordifind.factorize import ordifind
from ordifind.lattice import build_lattice


@pytest.fixture(scope="session")
def socmed():
    return load_socmed()


@pytest.fixture(scope="session")
def socmed_lattice(socmed):
    return build_lattice(socmed)


@pytest.fixture(scope="session")
def socmed_factorization(socmed, socmed_lattice):
    return ordifind(socmed, socmed_lattice)
