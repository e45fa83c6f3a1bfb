import pytest

from goppastrata.config import load_code


@pytest.fixture(scope="session")
def rs7():
    return load_code("rs_gf7_m3")


@pytest.fixture(scope="session")
def rs7_odd():
    return load_code("rs_gf7_m2")


@pytest.fixture(scope="session")
def rs11():
    return load_code("rs_gf11_m6")


@pytest.fixture(scope="session")
def herm4():
    return load_code("hermitian_q2_m4")
