"""Per-criterion summary for tests marked ``@pytest.mark.acceptance(n, title)``.

A criterion passes when every test carrying its marker passes.  Expected
failures (strict xfail) count against the criterion: they document clauses
that cannot be met as worded, and the summary prints the recorded reason.
"""

from __future__ import annotations

from collections import defaultdict

import pytest

_results: dict[int, dict] = defaultdict(lambda: {"title": "", "outcomes": [], "notes": []})


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, title): acceptance criterion number n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    n = marker.args[0]
    entry = _results[n]
    if len(marker.args) > 1:
        entry["title"] = marker.args[1]
    if hasattr(report, "wasxfail"):
        entry["outcomes"].append("xfail")
        entry["notes"].append(f"{item.name}: {report.wasxfail}")
    else:
        entry["outcomes"].append(report.outcome)
        if report.outcome != "passed":
            entry["notes"].append(f"{item.name}: {report.outcome}")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_results):
        entry = _results[n]
        ok = all(o == "passed" for o in entry["outcomes"])
        status = "PASS" if ok else "FAIL"
        tr.write_line(f"criterion {n:>2}: {status}  {entry['title']} ({len(entry['outcomes'])} checks)")
        for note in entry["notes"]:
            tr.write_line(f"              {note}")
