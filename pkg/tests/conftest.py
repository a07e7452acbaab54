import pytest

from latticecubes.census import build_irreducible_list


@pytest.fixture(scope="session")
def registry19():
    return build_irreducible_list(19)


@pytest.fixture(scope="session")
def registry30():
    return build_irreducible_list(30)


@pytest.fixture(scope="session")
def registry50():
    return build_irreducible_list(50)
