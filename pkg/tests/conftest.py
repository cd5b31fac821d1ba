"""Shared fixtures: bundled data objects, loaded once per session."""

import pytest

from matroid_forge.erection import enumerate_erections
from matroid_forge.formats import bundled_data_dir, load_matrix, load_matroid
from matroid_forge.reproduce import run_reproduce


@pytest.fixture(scope="session")
def data_dir():
    return bundled_data_dir()


@pytest.fixture(scope="session")
def rank3_matroid(data_dir):
    """The bundled 13-point rank-3 matroid with 15 nontrivial lines."""
    return load_matroid(data_dir / "M.matroid")


@pytest.fixture(scope="session")
def rank4_matroid(data_dir):
    """Its unique nontrivial erection: rank 4, same ground set."""
    return load_matroid(data_dir / "N.matroid")


@pytest.fixture(scope="session")
def erection_family(rank3_matroid):
    return enumerate_erections(rank3_matroid)


@pytest.fixture(scope="session")
def realization(data_dir):
    """Rational 3x13 matrix whose column matroid is the rank-3 matroid."""
    return load_matrix(data_dir / "A.matrix")


@pytest.fixture(scope="session")
def formal_matrix(data_dir):
    return load_matrix(data_dir / "yuzvinsky_a1.matrix")


@pytest.fixture(scope="session")
def informal_matrix(data_dir):
    return load_matrix(data_dir / "yuzvinsky_a2.matrix")


@pytest.fixture(scope="session")
def fano_gf2(data_dir):
    return load_matrix(data_dir / "fano.gf2.matrix")


@pytest.fixture(scope="session")
def fano_gf3(data_dir):
    return load_matrix(data_dir / "fano.gf3.matrix")


@pytest.fixture(scope="session")
def report():
    """One full reproduction run shared by the acceptance tests."""
    return run_reproduce()
