import pytest

from repgeo import FreeContext, PrimeField, cyclic_group, make_representation, product_group
from repgeo.audit import build_demo_reps


@pytest.fixture(scope="session")
def gf2():
    return PrimeField(2)


@pytest.fixture(scope="session")
def gf3():
    return PrimeField(3)


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2, "a")


@pytest.fixture(scope="session")
def v4():
    return product_group(cyclic_group(2, "a"), cyclic_group(2, "b"))


@pytest.fixture(scope="session")
def r1(gf2):
    return build_demo_reps(2)[0]


@pytest.fixture(scope="session")
def r2(gf2):
    return build_demo_reps(2)[1]


@pytest.fixture(scope="session")
def trivial_rep(gf2, z2):
    return make_representation(gf2, 2, z2, {"a": [[1, 0], [0, 1]]})


@pytest.fixture(scope="session")
def ctx1():
    return FreeContext(("x",), ("y",))
