"""Shared pytest config: the numbered acceptance checklist summary.

Tests tagged @pytest.mark.checklist(n, "text") roll up into one PASS/FAIL
line per item after the run; several tests may share an item, in which
case the item passes only if all of them do.
"""

import pytest

_CHECKLIST: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "checklist(num, text): contributes to a numbered acceptance item")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("checklist")
    if marker is None:
        return
    num, text = marker.args
    entry = _CHECKLIST.setdefault(num, [text, True])
    # setup/teardown failures count against the item too
    if report.when == "call" or report.failed:
        if not report.passed:
            entry[1] = False


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CHECKLIST:
        return
    terminalreporter.section("acceptance checklist")
    for num in sorted(_CHECKLIST):
        text, ok = _CHECKLIST[num]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {num:>2}. {text}")
