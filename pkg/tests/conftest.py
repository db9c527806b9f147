import pytest

from mxplus1 import MapParams, density_series


@pytest.fixture(scope="session")
def t3():
    return MapParams(3)


@pytest.fixture(scope="session")
def t5():
    return MapParams(5)


# Full-resolution series to k=900 are shared across tests; they carry
# every per-k total and shaded count the golden checks need.

@pytest.fixture(scope="session")
def series3_full():
    return density_series(MapParams(3), 900, 1)


@pytest.fixture(scope="session")
def series5_full():
    return density_series(MapParams(5), 900, 1)
