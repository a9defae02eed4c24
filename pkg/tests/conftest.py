import pytest
from hypothesis import strategies as st

from bgrank import Partition


def brute_partitions(n, largest=None):
    """Independent recursion, kept separate from the library's enumerator."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in brute_partitions(n - k, k):
            yield (k,) + rest


def cells(p):
    return {(i, j) for i, length in enumerate(p, 1) for j in range(1, length + 1)}


def is_diagram(cellset):
    return all(
        (i == 1 or (i - 1, j) in cellset) and (j == 1 or (i, j - 1) in cellset)
        for i, j in cellset
    )


def diagram_to_partition(cellset):
    rows = {}
    for i, _ in cellset:
        rows[i] = rows.get(i, 0) + 1
    return Partition(sorted(rows.values(), reverse=True))


@st.composite
def partitions(draw, max_weight=40):
    n = draw(st.integers(0, max_weight))
    parts = []
    while n:
        k = draw(st.integers(1, min(n, parts[-1] if parts else n)))
        parts.append(k)
        n -= k
    return Partition(parts)


@pytest.fixture(scope="session")
def small_partitions():
    return {n: [Partition(p) for p in brute_partitions(n)] for n in range(23)}


def pytest_terminal_summary(terminalreporter):
    import sys

    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance.summary_lines():
        terminalreporter.write_line(line)
