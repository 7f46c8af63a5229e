import pytest

from latpoly import LatticePolytope, load_corpus


@pytest.fixture(scope="session")
def square():
    return LatticePolytope(2, ((0, 0), (1, 0), (0, 1), (1, 1)))


@pytest.fixture(scope="session")
def triangle_t():
    return LatticePolytope(2, ((0, 0), (2, 0), (0, 2)))


@pytest.fixture(scope="session")
def reeve():
    return LatticePolytope(3, ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)))


@pytest.fixture(scope="session")
def unit_simplex_2d():
    return LatticePolytope(2, ((0, 0), (1, 0), (0, 1)))


@pytest.fixture(scope="session")
def unit_simplex_3d():
    return LatticePolytope(3, ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)))


@pytest.fixture(scope="session")
def cube():
    return LatticePolytope(3, tuple((x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)))


@pytest.fixture(scope="session")
def segment_two():
    return LatticePolytope(1, ((0,), (2,)))


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()
