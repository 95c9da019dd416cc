from functools import lru_cache

import pytest

from cayley_census.groups import build_group
from cayley_census.roster import ROSTER

_ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def group(spec):
    return build_group(spec)


@pytest.fixture
def G():
    """Cached group builder: ``G("Z8")``."""
    return group


@pytest.fixture(scope="session")
def roster_groups():
    return [group(s) for s in ROSTER]


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
