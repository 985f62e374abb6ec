"""Prints one PASS/FAIL line per acceptance criterion after the run."""

_acceptance_results = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        name = report.nodeid.split("::")[-1].split("[")[0]
        _acceptance_results.setdefault(name, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    try:
        from tests.test_acceptance import CRITERIA
    except ImportError:
        from test_acceptance import CRITERIA
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, description in CRITERIA.items():
        outcomes = _acceptance_results.get(name)
        if not outcomes:
            continue
        label = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"{label}  {description}")
