import pytest

from nsgp import oracle

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def small_semigroups():
    """Every numerical semigroup with 2 <= m <= 12 and F <= 20 (exhaustive)."""
    out = set()
    for m in range(2, 13):
        out |= oracle.oracle_all(m, 20)
    return sorted(out, key=lambda S: S.apery)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
