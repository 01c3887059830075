import pytest

from k3walls import families
from k3walls import lattice as lat
from k3walls import mukai as mk


@pytest.fixture(scope="session")
def elliptic():
    """Elliptic K3 with a section: Pic = Z sigma + Z f, H = sigma + 3f."""
    p = lat.PicardLattice([[-2, 1], [1, 0]], ["sigma", "f"])
    h = (1, 3)
    v = mk.MukaiVector(2, (1, 3), 1, p)
    return p, h, v


@pytest.fixture(scope="session")
def a1_instance():
    return families.generate_example(families.ExampleSpec("A", 1, 1, 1))


@pytest.fixture(scope="session")
def a2_instance():
    return families.generate_example(families.ExampleSpec("A", 2, 1, 1))


@pytest.fixture(scope="session")
def a3_instance():
    return families.generate_example(families.ExampleSpec("A", 3, 1, 1))


@pytest.fixture(scope="session")
def d4_instance():
    return families.generate_example(families.ExampleSpec("D", 4, 1, 1))
