"""Shared pytest hooks: summarize the acceptance criteria one line each."""

import re

_CRITERION = re.compile(r"test_criterion_(\d+)")
_verdicts = {}


def pytest_runtest_logreport(report):
    match = _CRITERION.search(report.nodeid)
    if match is None:
        return
    number = int(match.group(1))
    if report.when == "call":
        _verdicts[number] = report.passed
    elif report.failed:
        # setup or teardown failure (a broken shared fixture counts)
        _verdicts[number] = False


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for number in sorted(_verdicts):
        verdict = "pass" if _verdicts[number] else "FAIL"
        terminalreporter.write_line("  criterion %d: %s" % (number, verdict))
