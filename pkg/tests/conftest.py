import numpy as np
import pytest

from etgrs.algebra.field import FieldSpec, field_make
from etgrs.codes.etgrs import EtgrsParams


@pytest.fixture(scope="session")
def gf13() -> FieldSpec:
    return field_make(13)


@pytest.fixture(scope="session")
def gf11() -> FieldSpec:
    return field_make(11)


@pytest.fixture(scope="session")
def gf8() -> FieldSpec:
    return field_make(2, 3)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture()
def example1(gf13) -> EtgrsParams:
    return EtgrsParams.build(gf13, 3, [1, 2, 5, 6, 7], 9, 9)


@pytest.fixture()
def example3(gf8) -> EtgrsParams:
    # alpha = 1, g, g^2, g^4, g^5 and eta = g^2 under the Conway modulus x^3 + x + 1
    return EtgrsParams.build(gf8, 3, [1, 2, 4, 6, 7], 4, 0)


@pytest.fixture()
def example4(gf11) -> EtgrsParams:
    return EtgrsParams.build(gf11, 3, [0, 4, 5, 8, 9], 1, 1)


@pytest.fixture(scope="session")
def gf16() -> FieldSpec:
    return field_make(2, 4)


@pytest.fixture(scope="session")
def gf7() -> FieldSpec:
    return field_make(7)


@pytest.fixture(scope="session")
def gf9() -> FieldSpec:
    return field_make(3, 2)


@pytest.fixture(scope="session")
def gf4() -> FieldSpec:
    return field_make(2, 2)
