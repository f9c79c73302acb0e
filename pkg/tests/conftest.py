from functools import lru_cache

import pytest

from boxres import constructions as C
from boxres.monomial import parse_pretty


@lru_cache(maxsize=None)
def X(n):
    return C.build_X(n)


@lru_cache(maxsize=None)
def Xhat(n):
    return C.build_Xhat(n)


@lru_cache(maxsize=None)
def Y(n):
    return C.build_Y(n)


@lru_cache(maxsize=None)
def Yhat(n):
    return C.build_Yhat(n)


@lru_cache(maxsize=None)
def Xi(n, i):
    return C.build_Xi(n, i)


@pytest.fixture
def mono():
    """Letter-notation monomials: ``mono("a^2b", 3)``."""
    return parse_pretty


ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, passed = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number:>2} {'PASS' if passed else 'FAIL'}  {title}")
