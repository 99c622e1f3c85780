from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from grundylab.coloring import (
    GreedyPartition,
    InstanceTooLarge,
    PartitionError,
    SolverTimeout,
    check_partition,
    chromatic_number,
    clique_number,
    dominate_extend,
    edge_degree_bound,
    enumerate_greedy_partitions,
    extend_partition,
    find_induced_binomial_tree,
    find_violation,
    greedy_color,
    grundy_at_least,
    grundy_by_orderings,
    grundy_number,
    is_greedy_partition,
    iter_greedy_partitions,
    maximal_independent_sets,
    optimal_coloring,
    partition_of,
)
from grundylab.constructions import binomial_tree, complete, complete_bipartite, cycle, edgeless, path, star
from grundylab.graph import Graph, blow_up, graph_from_edges
from grundylab.sweep import RandomModel, random_graph


def to_nx(g):
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def test_greedy_color_examples():
    colors, k = greedy_color(path(4), [0, 3, 1, 2])
    assert [colors[v] for v in (0, 3, 1, 2)] == [1, 1, 2, 3]
    assert k == 3
    assert greedy_color(edgeless(3), [2, 0, 1]) == ([1, 1, 1], 1)
    colors, k = greedy_color(cycle(4), [0, 2, 1, 3])
    assert colors == [1, 2, 1, 2] and k == 2


def test_greedy_color_rejects_non_permutations():
    with pytest.raises(ValueError):
        greedy_color(path(3), [0, 0, 1])
    with pytest.raises(ValueError):
        greedy_color(path(3), [0, 1])


def test_partition_of_examples():
    colors, _ = greedy_color(path(4), [0, 3, 1, 2])
    assert partition_of(path(4), colors).classes == (frozenset({0, 3}), frozenset({1}), frozenset({2}))
    assert partition_of(edgeless(3), [1, 1, 1]).classes == (frozenset({0, 1, 2}),)
    with pytest.raises(PartitionError):
        partition_of(complete(2), [1, 1])
    with pytest.raises(PartitionError):
        partition_of(path(3), [1, 3, 1])


def test_is_greedy_partition_examples():
    assert is_greedy_partition(path(4), [{0, 3}, {1}, {2}])
    assert is_greedy_partition(cycle(4), [{0, 2}, {1, 3}])
    assert not is_greedy_partition(complete(2), [{0, 1}])
    bad = find_violation(path(4), [{1}, {0, 3}, {2}])
    assert bad is not None and bad.vertex == 3
    with pytest.raises(PartitionError):
        is_greedy_partition(path(3), [{0, 1}, {1, 2}])


def test_maximal_independent_sets_examples():
    assert list(maximal_independent_sets(path(3))) == [frozenset({1}), frozenset({0, 2})]
    assert list(maximal_independent_sets(complete(3))) == [frozenset({0}), frozenset({1}), frozenset({2})]
    assert list(maximal_independent_sets(edgeless(2))) == [frozenset({0, 1})]


@given(graphs(max_n=8))
def test_maximal_independent_sets_match_reference(g):
    ours = list(maximal_independent_sets(g))
    assert len(ours) == len(set(ours))
    if g.n == 0:
        return
    ref = {frozenset(c) for c in nx.find_cliques(nx.complement(to_nx(g)))}
    assert set(ours) == ref


def test_grundy_examples():
    assert grundy_number(path(4))[0] == 3
    assert grundy_number(cycle(4))[0] == 2
    for n in range(1, 7):
        assert grundy_number(complete(n))[0] == n
    assert grundy_number(binomial_tree(4))[0] == 4
    assert grundy_number(Graph(0, []))[0] == 0


@given(graphs(max_n=6))
def test_grundy_matches_ordering_oracle(g):
    k, part = grundy_number(g)
    assert k == grundy_by_orderings(g)
    assert len(part) == k
    check_partition(g, part)


@given(graphs(max_n=9))
def test_grundy_witness_and_decision_agree(g):
    k, part = grundy_number(g)
    assert is_greedy_partition(g, part)
    assert len(part.domain) == g.n
    assert grundy_at_least(g, k)
    assert not grundy_at_least(g, k + 1)


@given(graphs(max_n=9))
def test_grundy_is_deterministic(g):
    assert grundy_number(g) == grundy_number(g)


@given(graphs(min_n=1, max_n=7), st.data())
def test_false_twins_do_not_change_grundy(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    assert grundy_number(blow_up(g, v, data.draw(st.integers(2, 3))))[0] == grundy_number(g)[0]


@given(graphs(max_n=9))
def test_sandwich_chain(g):
    w, c, k = clique_number(g), chromatic_number(g), grundy_number(g)[0]
    top = g.max_degree() + 1 if g.n else 0
    assert w <= c <= k <= top
    assert k <= edge_degree_bound(g.adj, g.all_mask)


def test_grundy_size_cap_and_timeout():
    with pytest.raises(InstanceTooLarge):
        grundy_number(path(30))
    big = complete_bipartite(7, 7)
    assert grundy_number(big, max_n=None)[0] == 2
    dense = random_graph(RandomModel(22, 0.4, 7))
    with pytest.raises(SolverTimeout):
        grundy_number(dense, max_n=None, timeout=0.0)


def test_enumerate_examples():
    assert [p.classes for p in enumerate_greedy_partitions(complete(2))] == [
        (frozenset({0}), frozenset({1})), (frozenset({1}), frozenset({0}))]
    assert [p.classes for p in enumerate_greedy_partitions(edgeless(2))] == [(frozenset({0, 1}),)]
    assert max(len(p) for p in enumerate_greedy_partitions(path(3))) == 2
    with pytest.raises(InstanceTooLarge):
        next(enumerate_greedy_partitions(path(11)))


@given(graphs(max_n=6))
def test_enumeration_is_exactly_the_greedy_colourings(g):
    parts = list(enumerate_greedy_partitions(g))
    keys = {p.classes for p in parts}
    assert len(keys) == len(parts)
    for p in parts:
        assert is_greedy_partition(g, p)
    from_orders = {partition_of(g, greedy_color(g, o)[0]).classes for o in permutations(range(g.n))}
    assert keys == from_orders


@given(graphs(max_n=7))
def test_iter_greedy_partitions_matches_enumeration(g):
    k = grundy_number(g)[0]
    top = {p.classes for p in iter_greedy_partitions(g, k)}
    assert top == {p.classes for p in enumerate_greedy_partitions(g) if len(p) == k}


def test_chromatic_and_clique_examples():
    for k in range(2, 6):
        assert chromatic_number(binomial_tree(k)) == 2
    assert chromatic_number(cycle(5)) == 3
    assert clique_number(cycle(5)) == 2
    assert clique_number(complete_bipartite(3, 3)) == 2
    assert chromatic_number(Graph(0, [])) == clique_number(Graph(0, [])) == 0


@given(graphs(max_n=6))
def test_chromatic_matches_ordering_minimum(g):
    best = min((greedy_color(g, o)[1] for o in permutations(range(g.n))), default=0)
    assert chromatic_number(g) == best
    colors = optimal_coloring(g)
    assert all(colors[u] != colors[v] for u, v in g.edges())


@given(graphs(max_n=9))
def test_clique_matches_reference(g):
    ref = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
    assert clique_number(g) == ref


def test_dominate_extend_examples():
    p3 = path(3)
    out = dominate_extend(p3, GreedyPartition([{0, 2}]), {1})
    assert out.classes == (frozenset({1}), frozenset({0, 2}))
    out = dominate_extend(star(3), GreedyPartition([{1, 2, 3}]), {0})
    assert len(out) == 2
    with pytest.raises(PartitionError, match="overlap|disjoint"):
        dominate_extend(p3, GreedyPartition([{0, 2}]), {0})


def test_dominate_extend_names_undominated_vertex():
    g = path(4)
    with pytest.raises(PartitionError, match="3"):
        dominate_extend(g, GreedyPartition([{0, 3}]), {1})
    with pytest.raises(PartitionError, match="stable"):
        dominate_extend(complete(3), GreedyPartition([{0}]), {1, 2})


@given(graphs(min_n=2, max_n=8), st.data())
def test_dominating_extension_adds_a_class(g, data):
    w = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    rest = [v for v in range(g.n) if v not in w]
    for s in maximal_independent_sets(g, rest):
        if all(g.adj[v] & sum(1 << u for u in s) for v in w):
            sub, idmap = g.induced(w)
            inv = {b: a for a, b in idmap.items()}
            k, part = grundy_number(sub)
            lifted = GreedyPartition([{inv[v] for v in c} for c in part.classes])
            out = dominate_extend(g, lifted, s)
            assert len(out) == k + 1
            assert grundy_number(g.induced(set(w) | set(s))[0])[0] >= k + 1
            break


def test_extend_partition_completes_to_greedy():
    g = path(5)
    part = extend_partition(g, GreedyPartition([{1, 3}]))
    assert len(part.domain) == 5
    assert is_greedy_partition(g, part)


def test_find_induced_binomial_tree_examples():
    assert find_induced_binomial_tree(path(4), 3) is not None
    assert find_induced_binomial_tree(cycle(4), 3) is None
    assert find_induced_binomial_tree(cycle(5), 1) == frozenset({0})
    with pytest.raises(ValueError):
        find_induced_binomial_tree(path(3), 0)


@given(st.integers(2, 20), st.randoms(use_true_random=False))
def test_tree_grundy_is_largest_binomial_tree(n, rng):
    t = graph_from_edges(n, [(rng.randrange(v), v) for v in range(1, n)])
    k = grundy_number(t, max_n=None)[0]
    assert find_induced_binomial_tree(t, k) is not None
    assert find_induced_binomial_tree(t, k + 1) is None
