from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from grundylab.graph import graph_from_edges

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_RESULTS = pytest.StashKey[list]()


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph_from_edges(n, [e for e, k in zip(pairs, keep) if k])


def pytest_configure(config):
    config.stash[_RESULTS] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(number, title, ok, elapsed, limit, detail)``."""
    def record(number, title, ok, elapsed, limit, detail=""):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {elapsed:7.2f}s (limit {limit:g}s)  {title}"
        if detail:
            line += f"  [{detail}]"
        request.config.stash[_RESULTS].append((number, line))
        print(line)
    return record


def pytest_terminal_summary(terminalreporter, config):
    rows = config.stash.get(_RESULTS, [])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(rows, key=lambda r: (int(str(r[0]).rstrip("*")), str(r[0]))):
        terminalreporter.write_line(line)
