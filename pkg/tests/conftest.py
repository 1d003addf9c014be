from fractions import Fraction

import pytest
from hypothesis import strategies as st

from eisgeom.exactnum import CycElem, EisInt

SEED = 20261018

small_fraction = st.fractions(min_value=-20, max_value=20, max_denominator=12)
cyc = st.builds(CycElem.from_parts, small_fraction, small_fraction, small_fraction, small_fraction)
nonzero_cyc = cyc.filter(bool)
eis = st.builds(EisInt, st.integers(-30, 30), st.integers(-30, 30))


@pytest.fixture(scope="session")
def table1():
    from eisgeom.geometry import enumerate_table1

    return {n: enumerate_table1(n) for n in range(4)}


@pytest.fixture(scope="session")
def generic_c():
    from eisgeom import cache

    return cache.batches("c", 3)[0]


@pytest.fixture(scope="session")
def generic_pinf():
    from eisgeom import cache

    return cache.batches("pinf", 3)[0]


@pytest.fixture(scope="session")
def c_mirrors(table1):
    from eisgeom.geometry import union_classes

    return union_classes(*(r.roots for r in table1.values()))


@pytest.fixture(scope="session")
def pinf_mirrors(generic_pinf):
    from eisgeom.geometry import union_classes

    return union_classes(*(r.roots for r in generic_pinf.values()))


def frac(x) -> Fraction:
    return Fraction(x)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.VERDICTS):
        terminalreporter.write_line(mod.VERDICTS[n])
