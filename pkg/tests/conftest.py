import random
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from edgetess.field import ExtScalar
from edgetess.geometry import Point2

settings.register_profile("default", deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
scalars = st.builds(ExtScalar, rationals, rationals, rationals, rationals)
nonzero_scalars = scalars.filter(lambda x: not x.is_zero())
small_rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)
small_scalars = st.builds(ExtScalar, small_rationals, small_rationals, small_rationals, small_rationals)
points = st.builds(Point2, small_scalars, small_scalars)


def random_scalar(rng: random.Random, spread: int = 9) -> ExtScalar:
    def q():
        return Fraction(rng.randint(-spread, spread), rng.randint(1, spread))

    return ExtScalar(q(), q(), q(), q())


@pytest.fixture
def rng():
    return random.Random(20090710)


_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _acceptance.append((marker.args[0], item.name, rep.outcome, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, name, outcome, duration in _acceptance:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {label:<56} {duration:7.2f}s  {name}")
