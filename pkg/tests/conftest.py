import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

_criteria = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if "test_acceptance.py" not in report.nodeid or not name.startswith("test_criterion_"):
        return
    number = int(name.rsplit("_", 1)[-1])
    if report.when == "call" or report.failed:
        _criteria[number] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    from test_acceptance import CRITERIA
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        verdict = _criteria.get(number, "NOT RUN")
        terminalreporter.write_line(f"criterion {number} [{CRITERIA[number]}]: {verdict}")
