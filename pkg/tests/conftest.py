import pytest

from gkasami import build_family, family_params, make_field
from gkasami.families import FamilyKind


@pytest.fixture(scope="session")
def ctx4():
    return make_field(4)


@pytest.fixture(scope="session")
def ctx6():
    return make_field(6)


@pytest.fixture(scope="session")
def ctx8():
    return make_field(8)


@pytest.fixture(scope="session")
def family4(ctx4):
    return build_family(family_params(ctx4, FamilyKind.GENERALIZED, 1))


@pytest.fixture(scope="session")
def family6(ctx6):
    return build_family(family_params(ctx6, FamilyKind.GENERALIZED, 2))
