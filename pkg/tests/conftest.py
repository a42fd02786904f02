"""Collects acceptance-criterion outcomes and prints one line per criterion."""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

# criterion number -> [title, status, notes]
_CRITERIA: dict[int, list] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    report = outcome.get_result()
    number, title = mark.args
    entry = _CRITERIA.setdefault(number, [title, "PASS", []])
    if report.failed:
        entry[1] = "FAIL"
    elif hasattr(report, "wasxfail"):
        entry[1] = "FAIL"
        entry[2].append(f"known failure: {report.wasxfail}")
    elif report.skipped and entry[1] == "PASS":
        entry[1] = "SKIP"
    if report.when == "call":
        entry[2].extend(text for name, text in item.user_properties if name == "note")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status, notes = _CRITERIA[number]
        detail = f" [{'; '.join(notes)}]" if notes else ""
        terminalreporter.write_line(f"criterion {number}: {status} - {title}{detail}")
