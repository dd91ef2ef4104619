import re

_criteria: dict = {}


def pytest_runtest_logreport(report):
    match = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+?)(\[.*\])?$", report.nodeid)
    if not match or (report.when != "call" and not report.failed):
        return
    key = (int(match.group(1)), match.group(2).replace("_", " "))
    _criteria[key] = _criteria.get(key, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for (num, label), ok in sorted(_criteria.items()):
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {label}")
