import pytest

from omegaminus import verify


@pytest.fixture(scope="session")
def row_reports():
    """Mandatory row reports, computed once per session."""
    cache = {}

    def get(row, m=None, q=None):
        key = (row, m, q)
        if key not in cache:
            cache[key] = verify.verify_row(row, m, q)
        return cache[key]

    return get


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
