import pytest

from e8lines.census import default_cache_dir, get_census
from e8lines.lattice import enumerate_roots
from e8lines.perm import FULL, PROJECTIVE, build_action, schreier_sims


@pytest.fixture(scope="session")
def e8_roots():
    return enumerate_roots(8)


@pytest.fixture(scope="session")
def full_action(e8_roots):
    return build_action(e8_roots, FULL)


@pytest.fixture(scope="session")
def projective_action(e8_roots):
    return build_action(e8_roots, PROJECTIVE)


def _census(action):
    # reads the on-disk cache; enumerates the whole group on a miss (slow)
    return get_census(action, default_cache_dir(), compute=True, progress=True)


@pytest.fixture(scope="session")
def projective_census(projective_action):
    return _census(projective_action)


@pytest.fixture(scope="session")
def full_census(full_action):
    return _census(full_action)


@pytest.fixture(scope="session")
def full_bsgs(full_action):
    return schreier_sims(full_action)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
