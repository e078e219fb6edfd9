"""Shared fixtures and the per-criterion pass/fail report."""

from __future__ import annotations

import pytest

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number n")
    config.addinivalue_line("markers", "slow: long-running sweep")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, text = mark.args
    entry = _CRITERIA.setdefault(n, {"text": text, "passed": True, "ran": False, "why": ""})
    if rep.when == "call":
        entry["ran"] = True
        if rep.failed:
            entry["passed"] = False
            entry["why"] = str(rep.longrepr).strip().splitlines()[-1][:160]
    elif rep.failed:
        entry["passed"] = False
        entry["why"] = f"{rep.when} error"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        e = _CRITERIA[n]
        state = "PASS" if e["passed"] and e["ran"] else ("SKIP" if not e["ran"] and e["passed"] else "FAIL")
        line = f"criterion {n}: {state}: {e['text']}"
        if state == "FAIL":
            line += f" ({e['why']})"
        terminalreporter.write_line(line)
