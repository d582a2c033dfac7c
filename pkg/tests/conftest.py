import re

_CRITERIA: dict[int, str] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or (report.when == "setup" and report.failed):
        _CRITERIA[n] = ("PASS" if report.passed else "FAIL") + f"  {m.group(2).replace('_', ' ')}"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {n}: {_CRITERIA[n]}")
