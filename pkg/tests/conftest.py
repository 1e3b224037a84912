import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from benzenoid.forcing import InvariantReport  # noqa: E402
from benzenoid.hexcore import enumerate_all_systems  # noqa: E402
from benzenoid.matchings import has_perfect_matching  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def _census(max_h):
    return [(H, InvariantReport.of(H)) for H in enumerate_all_systems(max_h)
            if has_perfect_matching(H)]


@pytest.fixture(scope="session")
def census6():
    """(system, report) for every Kekulean system with at most 6 hexagons."""
    return _census(6)


@pytest.fixture(scope="session")
def census7():
    return _census(7)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
