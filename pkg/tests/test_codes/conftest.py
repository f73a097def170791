import pytest

from etgrs.codes.linear import grs_code


@pytest.fixture()
def rs_5_2(gf13):
    return grs_code(gf13([1, 2, 3, 4, 5]), gf13([1, 1, 1, 1, 1]), 2)


@pytest.fixture()
def grs_7_3(gf13):
    return grs_code(gf13([1, 2, 3, 4, 5, 6, 7]), gf13([3, 1, 4, 1, 5, 9, 2]), 3)
