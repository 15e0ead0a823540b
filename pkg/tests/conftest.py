import os
import re
import sys

sys.path.insert(0, os.path.dirname(__file__))

_criteria: dict[str, tuple[str, float]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_(A\d+)_", report.nodeid)
    if not m or report.when != "call":
        return
    _criteria[m.group(1)] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s[1:])):
        status, secs = _criteria[name]
        terminalreporter.write_line(f"{status} {name} ({secs:.1f}s)")
