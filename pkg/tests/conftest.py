import pytest

from orbitlab.ideals import Ideal
from orbitlab.partitions import Partition


@pytest.fixture
def lam():
    return Partition((7, 5, 3, 3, 2))


@pytest.fixture
def ideal_a(lam):
    return Ideal(lam, (3, 1, 0, 0, 0))


@pytest.fixture
def ideal_b(lam):
    return Ideal(lam, (4, 3, 1, 1, 1))


_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, text = marker.args
        _CRITERIA.append((number, text, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, outcome, duration in sorted(_CRITERIA):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {text} ({duration:.2f}s)")
