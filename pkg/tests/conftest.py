import pytest

from amalg import build_dihedral_model

from oracles import bfs_letter_words


@pytest.fixture(scope="session")
def model():
    return build_dihedral_model()


@pytest.fixture(scope="session")
def big(model):
    return model.big


@pytest.fixture(scope="session")
def small_spec(model):
    return model.big.small


@pytest.fixture(scope="session")
def bfs6():
    return bfs_letter_words(6)
