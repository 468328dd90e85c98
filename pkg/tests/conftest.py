"""Print one PASS/FAIL line per acceptance criterion at the end of the run."""

import re

_CRITERION = re.compile(r"test_criterion_(\d+)")
_outcomes: dict[int, str] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    number = int(m.group(1))
    if report.failed:
        _outcomes[number] = "FAIL"
    elif report.when == "call" and report.passed:
        _outcomes.setdefault(number, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        terminalreporter.write_line(f"criterion {number:2d}: {_outcomes[number]}")
