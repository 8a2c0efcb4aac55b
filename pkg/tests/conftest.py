import pytest
from hypothesis import settings

import actalab as al

settings.register_profile("ci", derandomize=True, max_examples=60)
settings.load_profile("ci")


def build_zoo():
    return [
        al.build("cyclic_group", n=1),
        al.build("cyclic_group", n=2),
        al.build("cyclic_group", n=3),
        al.build("inverse_omega_chain", n=2),
        al.build("null_adjoined", n=2),
        al.build("semilattice_of_groups", n1=2, n0=2),
        al.build("nat_min_adjoined", n=3),
    ]


@pytest.fixture(scope="session")
def zoo_monoids():
    return build_zoo()


@pytest.fixture(scope="session")
def trivial():
    return al.build("cyclic_group", n=1)


@pytest.fixture(scope="session")
def z2():
    return al.build("cyclic_group", n=2)


@pytest.fixture(scope="session")
def z3():
    return al.build("cyclic_group", n=3)


@pytest.fixture(scope="session")
def null2():
    return al.build("null_adjoined", n=2)


@pytest.fixture(scope="session")
def natmin3():
    return al.build("nat_min_adjoined", n=3)


@pytest.fixture(scope="session")
def semilattice22():
    return al.build("semilattice_of_groups", n1=2, n0=2)


@pytest.fixture(scope="session")
def left_zero():
    """Adjoined-identity left-zero monoid: aS ∩ bS = ∅, R(a,b) = ∅."""
    return al.validate_monoid(
        ["1", "a", "b"],
        [["1", "a", "b"], ["a", "a", "a"], ["b", "b", "b"]],
        "1",
        name="left_zero_adjoined(2)",
    )
