"""Exhaustive small-graph corpora and a few structural predicates.

Every graph on at most 7 vertices up to isomorphism comes from the networkx
graph atlas (1253 graphs, 1044 of them on exactly 7 vertices).
"""

from __future__ import annotations

from functools import lru_cache

import networkx as nx

from .graph import Graph, graph_from_edges, members

ATLAS_MAX_N = 7


def from_networkx(nxg: nx.Graph) -> Graph:
    ids = {v: i for i, v in enumerate(sorted(nxg.nodes))}
    return graph_from_edges(len(ids), [(ids[u], ids[v]) for u, v in nxg.edges])


@lru_cache(maxsize=None)
def _atlas() -> tuple[Graph, ...]:
    return tuple(from_networkx(g) for g in nx.graph_atlas_g())


def graphs_of_order(n: int) -> list[Graph]:
    """All graphs on exactly ``n`` vertices, one per isomorphism class."""
    if not 0 <= n <= ATLAS_MAX_N:
        raise ValueError(f"atlas covers orders 0..{ATLAS_MAX_N}, got {n}")
    return [g for g in _atlas() if g.n == n]


def connected_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    return [g for n in range(min_n, max_n + 1) for g in graphs_of_order(n) if g.is_connected()]


def is_complete_bipartite(g: Graph) -> bool:
    """True for ``K_{p,q}`` with ``p, q >= 1`` (so never for a single vertex)."""
    if g.n < 2 or not g.is_connected():
        return False
    side = [-1] * g.n
    side[0] = 0
    queue = [0]
    for v in queue:
        for u in members(g.adj[v]):
            if side[u] < 0:
                side[u] = 1 - side[v]
                queue.append(u)
            elif side[u] == side[v]:
                return False
    p = side.count(0)
    return g.num_edges == p * (g.n - p)
