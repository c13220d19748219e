import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_REPORT = []


@pytest.fixture
def criterion_report(request):
    """Record one pass/fail line for an acceptance criterion."""

    def record(label):
        _REPORT.append((label, request.node))

    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.acceptance_outcome = rep.outcome


def pytest_terminal_summary(terminalreporter):
    if not _REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for label, node in _REPORT:
        status = getattr(node, "acceptance_outcome", "failed")
        mark = "PASS" if status == "passed" else "FAIL"
        terminalreporter.write_line(f"[{mark}] {label}")
