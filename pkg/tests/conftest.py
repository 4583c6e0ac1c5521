import functools
import sys

import pytest
from hypothesis import settings

from frobcoh.data import fixture_text
from frobcoh.frobenius import algorithm_I
from frobcoh.polyparse import parse_problem

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def x0_23_report(p):
    """Algorithm I on the X_0(23) fixture; cached because Step A dominates."""
    return algorithm_I(parse_problem(fixture_text("x0_23"), p=p))


@pytest.fixture(scope="session")
def x0_23():
    return x0_23_report


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
