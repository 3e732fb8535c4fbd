import pytest

from toricsym.datasets import load_bundled


@pytest.fixture(scope="session")
def p2_fan():
    return load_bundled("p2")


@pytest.fixture(scope="session")
def p1xp1_fan():
    return load_bundled("p1xp1")


@pytest.fixture(scope="session")
def dp1_fan():
    return load_bundled("dp1")


@pytest.fixture(scope="session")
def dp2_fan():
    return load_bundled("dp2")


@pytest.fixture(scope="session")
def dp3_fan():
    return load_bundled("dp3")


@pytest.fixture(scope="session")
def fano52_fan():
    return load_bundled("fano3fold_5_2")


@pytest.fixture(scope="session")
def w112_fan():
    return load_bundled("weighted_112")


@pytest.fixture(scope="session")
def del_pezzo_fans(p2_fan, p1xp1_fan, dp3_fan, dp1_fan, dp2_fan):
    return {
        "p2": p2_fan,
        "p1xp1": p1xp1_fan,
        "dp3": dp3_fan,
        "dp1": dp1_fan,
        "dp2": dp2_fan,
    }
