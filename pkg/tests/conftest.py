from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from domina.graph import complete_graph, cycle_graph, empty_graph, from_edges, path_graph  # noqa: E402

ACCEPTANCE_LINES = pytest.StashKey[list]()


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def p4():
    # a-b-c-d as 0-1-2-3
    return path_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def kbar3():
    return empty_graph(3)


@pytest.fixture
def k2():
    return from_edges(2, [(0, 1)])


@pytest.fixture(scope="session")
def acceptance_log(pytestconfig):
    """``(number, line)`` pairs, one PASS/FAIL line per acceptance criterion."""
    return pytestconfig.stash.setdefault(ACCEPTANCE_LINES, [])


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
