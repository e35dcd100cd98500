import pytest
from hypothesis import settings

from affclass.truthtable import TruthTable

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items(), key=lambda kv: int(kv[0].split("_")[1])):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


@pytest.fixture
def n3_all():
    return [TruthTable(3, r) for r in range(256)]
