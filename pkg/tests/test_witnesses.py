import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from grundylab.coloring import (
    PartitionError,
    find_induced_binomial_tree,
    grundy_number,
    is_greedy_partition,
    partition_of,
)
from grundylab.constructions import binomial_tree, complete, graph_g3, path, psi_lift
from grundylab.graph import GraphError
from grundylab.iso import find_isomorphism
from grundylab.products import direct_product, lex_product
from grundylab.witnesses import (
    grow_binomial_tree,
    lift_coloring_intervals,
    lift_pendant_copy,
    witness_blownup_cartesian,
    witness_kpp_cartesian,
    witness_lex_pairs,
)
from grundylab.constructions import g3_lex_witness


@settings(max_examples=30)
@given(graphs(min_n=1, max_n=5), graphs(min_n=1, max_n=4))
def test_lex_pair_colouring_multiplies(g, h):
    k, cg = grundy_number(g)
    l, ch = grundy_number(h)
    colors = witness_lex_pairs(g, cg, h, ch)
    lay = lex_product(g, h)
    assert max(colors) == k * l
    assert is_greedy_partition(lay.product, partition_of(lay.product, colors))


def test_lex_pairs_rejects_partial_partition():
    k, cg = grundy_number(path(3))
    with pytest.raises(PartitionError):
        witness_lex_pairs(path(3), cg, path(2), partition_of(path(2), [1, 2]).__class__([{0}]))


@pytest.mark.parametrize("p", [2, 3, 4])
def test_kpp_witness(p):
    lay, part = witness_kpp_cartesian(p)
    assert len(part) == p + 1
    assert is_greedy_partition(lay.product, part)


@pytest.mark.parametrize("n, k", [(1, 1), (2, 2), (3, 2), (2, 3), (3, 3)])
def test_blownup_witness(n, k):
    lay, part = witness_blownup_cartesian(n, k)
    assert len(part) == n * k
    assert len(part.domain) == lay.product.n
    assert is_greedy_partition(lay.product, part)


def test_witness_parameter_errors():
    with pytest.raises(GraphError):
        witness_kpp_cartesian(1)
    with pytest.raises(GraphError):
        witness_blownup_cartesian(0, 2)


def test_pendant_lift_on_g3():
    g = graph_g3()
    part, x = g3_lex_witness()
    lay = lex_product(g, complete(2))
    colors = part.coloring(lay.product.n)
    lifted = lift_pendant_copy(g, colors, x, 2)
    assert max(lifted) == 9 and len(lifted) == 32
    target = lex_product(psi_lift(g, x), complete(2)).product
    assert is_greedy_partition(target, partition_of(target, lifted))


def test_pendant_lift_needs_top_colour_on_the_copy():
    g = path(2)
    colors = [1, 2, 3, 4]
    with pytest.raises(PartitionError, match="top colour"):
        lift_pendant_copy(g, colors, 0, 2)


@settings(max_examples=30)
@given(graphs(min_n=1, max_n=4), st.integers(1, 2), st.integers(1, 3))
def test_interval_lift_scales_colours(g, l, p):
    lay = lex_product(g, complete(l))
    k, part = grundy_number(lay.product)
    out = lift_coloring_intervals(g, part.coloring(lay.product.n), p)
    assert max(out) == k * p


def test_interval_lift_on_g3():
    part, _ = g3_lex_witness()
    g = graph_g3()
    out = lift_coloring_intervals(g, part.coloring(16), 2)
    assert max(out) == 14 and len(out) == 32


def test_grow_binomial_tree_from_g3():
    g = graph_g3()
    lay = direct_product(g, complete(2))
    t4 = find_induced_binomial_tree(lay.product, 4)
    assert t4 is not None
    h, hk2, grown = grow_binomial_tree(g, sorted(t4))
    assert len(grown) == 32
    sub, _ = hk2.induced(grown)
    assert find_isomorphism(sub, binomial_tree(6)) is not None


def test_grow_binomial_tree_rejects_non_trees():
    with pytest.raises(GraphError):
        grow_binomial_tree(path(3), [0, 1, 2])


def test_pendant_lift_trivial_and_bad_vertex():
    assert lift_pendant_copy(complete(1), [1], 0, 1) == [1, 2]
    with pytest.raises(GraphError):
        lift_pendant_copy(complete(1), [1], 3, 1)


def test_interval_lift_small_cases():
    assert lift_coloring_intervals(path(3), [1, 2, 1], 1) == [1, 2, 1]
    assert lift_coloring_intervals(complete(1), [1, 2], 3) == [1, 2, 3, 4, 5, 6]
    with pytest.raises(PartitionError):
        lift_coloring_intervals(path(2), [1, 1], 2)
