from hypothesis import strategies as st

from bridgelab.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    m = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << m) - 1)) if m else 0
    return Graph.from_mask(n, mask)


@st.composite
def sparse_graphs(draw, min_n=1, max_n=10):
    """Graphs with about n edges, where bridges are common."""
    n = draw(st.integers(min_n, max_n))
    edges = draw(st.lists(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=n + 2))
    return Graph(n, {(min(u, v), max(u, v)) for u, v in edges if u != v})


# one PASS/FAIL line per acceptance criterion, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
