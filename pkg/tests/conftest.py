import os

import pytest
from hypothesis import HealthCheck, settings

from kummer_models.base import mk_curve, mk_point
from kummer_models.padic import mk_context

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=15, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def ctx31():
    return mk_context(3, 1)


@pytest.fixture(scope="session")
def ctx33():
    return mk_context(3, 3)


@pytest.fixture(scope="session")
def ctx51():
    return mk_context(5, 1)


@pytest.fixture(scope="session")
def A31(ctx31):
    return mk_curve(ctx31)


@pytest.fixture(scope="session")
def A33(ctx33):
    return mk_curve(ctx33)


@pytest.fixture(scope="session")
def A51(ctx51):
    return mk_curve(ctx51)


@pytest.fixture(scope="session")
def P31(ctx31):
    return mk_point(ctx31)


# acceptance criteria: one summary line per criterion ----------------------------------
_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    n, text = mark.args
    prev = _CRITERIA.get(n, (text, True))
    if rep.when == "call" or rep.failed:
        _CRITERIA[n] = (text, prev[1] and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        text, ok = _CRITERIA[n]
        terminalreporter.write_line("criterion %2d: %s  %s" % (n, "PASS" if ok else "FAIL", text))
