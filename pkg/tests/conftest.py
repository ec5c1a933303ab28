import pytest

# Collected outcomes for the acceptance module, reported one line per
# criterion at the end of the run.
_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call":
        _acceptance.setdefault(report.nodeid, report.outcome)
        if report.outcome != "passed":
            _acceptance[report.nodeid] = report.outcome
    elif report.failed:  # setup/teardown error
        _acceptance[report.nodeid] = "failed"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for nodeid in sorted(_acceptance):
        name = nodeid.split("::")[-1]
        outcome = _acceptance[nodeid]
        label = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}.get(
            outcome, outcome.upper())
        terminalreporter.write_line(f"{label}  {name}")
