import pytest

from fractions import Fraction

from equiangular import constructions, saturate
from equiangular.exactnum import parse_scalar


@pytest.fixture(scope="session")
def witt():
    return constructions.witt276()


@pytest.fixture(scope="session")
def witt_pillars():
    return constructions.witt276_base_and_pillars()


@pytest.fixture(scope="session")
def enum_8_third():
    return saturate.enumerate_pd_bases(8, Fraction(1, 3))


@pytest.fixture(scope="session")
def m_8_third():
    return saturate.m_alpha(8, Fraction(1, 3))


@pytest.fixture(scope="session")
def table3_fast():
    """All Table-3 cells except the minutes-scale (10, 1/5) one; the elapsed
    wall time is stored under the "elapsed" key for the acceptance bound."""
    import time

    t0 = time.monotonic()
    cells = {}
    for r, a in [
        (8, "1/3"), (8, "1/5"), (8, "1/7"),
        (9, "1/3"), (9, "1/5"), (9, "1/7"), (9, "1/sqrt(17)"),
        (10, "1/3"),
    ]:
        cells[(r, a)] = saturate.m_alpha(r, parse_scalar(a), count_scanned=False)
    cells["elapsed"] = time.monotonic() - t0
    return cells


@pytest.fixture(scope="session")
def mstar_reports():
    return {r: saturate.m_star(r) for r in (8, 9, 10)}
