import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "ok": True, "ran": False, "notes": []})
    if report.failed:
        entry["ok"] = False
    if report.when == "call":
        entry["ran"] = True
        entry["notes"] += [f"{k}={v}" for k, v in item.user_properties]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        verdict = "PASS" if entry["ok"] and entry["ran"] else "FAIL"
        notes = f"  ({', '.join(entry['notes'])})" if entry["notes"] else ""
        terminalreporter.write_line(f"criterion {number:2d} {verdict}  {entry['title']}{notes}")
