import pytest

from catsieve.csp import family_descriptor, verify_csp

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def config_reports():
    """verify_csp reports for the configuration family, n = 1..12."""
    return {n: verify_csp(family_descriptor("config", n)) for n in range(1, 13)}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
