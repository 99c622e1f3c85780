import pytest
from hypothesis import given
from hypothesis import strategies as st

from grundylab.bounds import cart_upper, cart_upper_bipartite, direct_lower, lex_lower, lex_upper
from grundylab.constructions import complete, complete_bipartite, cycle, path, star
from grundylab.graph import Graph, GraphError


def test_closed_forms():
    assert lex_lower(3, 2) == 6
    assert lex_upper(3, 2) == 7
    assert lex_upper(1, 5) == 5
    assert lex_upper(2, 2) == 4
    assert cart_upper(2, 2) == 6
    assert cart_upper(0, 3) == 3
    assert direct_lower(3, 3) == 4


@given(st.integers(1, 8), st.integers(1, 8))
def test_lex_bounds_bracket(k, l):
    assert lex_lower(k, l) <= lex_upper(k, l)
    assert lex_upper(k, 1) == k
    assert lex_upper(1, l) == l


def test_bipartite_bound():
    # path 0-1-2: middle vertex has degree 2 with neighbours of degree 1
    assert cart_upper_bipartite(path(3)) == 5
    assert cart_upper_bipartite(complete(1)) == 2
    assert cart_upper_bipartite(complete(2)) == 4
    assert cart_upper_bipartite(star(3)) == min(8, 5)
    assert cart_upper_bipartite(cycle(4)) == 6
    assert cart_upper_bipartite(complete_bipartite(2, 3)) == 7


def test_bound_errors():
    with pytest.raises(GraphError):
        lex_upper(0, 2)
    with pytest.raises(GraphError):
        cart_upper(-1, 2)
    with pytest.raises(GraphError):
        cart_upper_bipartite(Graph(0, []))


def test_documented_bound_values():
    assert cart_upper(1, 1) == 2
    for p in range(2, 6):
        assert cart_upper_bipartite(star(p)) == 5
    assert direct_lower(2, 2) == 2
    for l in range(1, 6):
        assert lex_upper(2, l) == 2 * l
        assert lex_lower(1, l) == l
