import pytest

from metricdim.bds import BipartiteInstance, normalize
from metricdim.graph import Graph
from metricdim.reduction import build_reduction


def path_graph(n):
    return Graph.from_edges(n, [(k, k + 1) for k in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(k, (k + 1) % n) for k in range(n)])


def complete_graph(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@pytest.fixture(scope="session")
def k2_instance():
    return BipartiteInstance.from_edges(1, 1, [(0, 1)])


@pytest.fixture(scope="session")
def k2_reduction(k2_instance):
    return build_reduction(normalize(k2_instance), "min")


@pytest.fixture(scope="session")
def p4_reduction():
    # a-b-c-d, sides {a, c} and {b, d}: normalizes to n = 6 with three edges
    inst = BipartiteInstance.from_edges(2, 2, [(0, 2), (1, 2), (1, 3)])
    return build_reduction(normalize(inst), "min")


@pytest.fixture(scope="session")
def star_reduction():
    # K_{1,3}: one vertex with three neighbors whose indices share parity
    inst = BipartiteInstance.from_edges(1, 3, [(0, 1), (0, 2), (0, 3)])
    return build_reduction(normalize(inst), "min")


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_line():
    """Record one summary line per criterion; printed at the end of the run."""

    def record(number: int, passed: bool, text: str) -> None:
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'} - {text}"
        _ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
