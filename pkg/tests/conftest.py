from pathlib import Path

import pytest

from wrpinv.pdcode import load_table

DATA = Path(__file__).resolve().parents[1] / "data"
LE10 = DATA / "alternating_le10.tsv"
A11 = DATA / "alternating_11.tsv"

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


@pytest.fixture(scope="session")
def le10():
    return load_table(LE10)


@pytest.fixture(scope="session")
def a11():
    return load_table(A11)


@pytest.fixture(scope="session")
def le10_by_name(le10):
    return {str(name): pd for name, pd in le10}


@pytest.fixture(scope="session")
def a11_by_name(a11):
    return {str(name): pd for name, pd in a11}


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(test_acceptance.RESULTS):
        terminalreporter.write_line(test_acceptance.format_line(n))
