import pytest
from hypothesis import HealthCheck, settings

from nilcentral import QQ, FieldSpec, RingContext

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

_acceptance_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    key = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        prev = _acceptance_results.get(key, True)
        _acceptance_results[key] = prev and rep.outcome == "passed"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(_acceptance_results.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}")


@pytest.fixture
def ctx4():
    return RingContext(4)


@pytest.fixture
def ctx5():
    return RingContext(5)


@pytest.fixture(params=[QQ, FieldSpec.prime(7)], ids=["Q", "F7"])
def field(request):
    return request.param
