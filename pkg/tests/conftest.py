from __future__ import annotations

import pytest

_results: list[tuple[int, str, str, float, float | None]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, limit=None): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    number, title = mark.args[:2]
    limit = mark.kwargs.get("limit")
    _results.append((number, title, report.outcome, report.duration, limit))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome, duration, limit in sorted(_results):
        status = "PASS" if outcome == "passed" else "FAIL"
        budget = f" (limit {limit:g} s)" if limit else ""
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {title}  {duration:.2f} s{budget}")
