"""Closed-form bounds on Grundy numbers of products."""

from __future__ import annotations

from .graph import Graph, GraphError


def _positive(*args: int) -> None:
    for a in args:
        if a < 1:
            raise GraphError(f"bound arguments must be positive, got {a}")


def lex_lower(k: int, l: int) -> int:
    """Lower bound ``k * l`` for ``Gamma(G[H])`` when ``Gamma(G) = k``, ``Gamma(H) = l``."""
    _positive(k, l)
    return k * l


def lex_upper(k: int, l: int) -> int:
    """Upper bound ``2^(k-1) (l-1) + k`` for ``Gamma(G[H])``."""
    _positive(k, l)
    return 2 ** (k - 1) * (l - 1) + k


def cart_upper(max_degree_g: int, l: int) -> int:
    """``Delta(G) * 2^(l-1) + l`` bounds ``Gamma(G □ H)`` for every ``H`` with ``Gamma(H) = l``."""
    if max_degree_g < 0:
        raise GraphError("maximum degree cannot be negative")
    _positive(l)
    return max_degree_g * 2 ** (l - 1) + l


def cart_upper_bipartite(g: Graph) -> int:
    """Bound on ``Gamma(G □ H)`` over complete bipartite ``H``.

    ``max_v min(2 d(v) + 2, 2 d1(v) + 3)`` where ``d1(v)`` is the largest
    degree among the neighbours of ``v`` (0 for an isolated vertex).
    """
    if g.n == 0:
        raise GraphError("graph must be non-empty")
    degs = g.degrees()
    best = 0
    for v in range(g.n):
        d1 = max((degs[u] for u in g.neighbors(v)), default=0)
        best = max(best, min(2 * degs[v] + 2, 2 * d1 + 3))
    return best


def direct_lower(k: int, l: int) -> int:
    """``k + l - 2`` bounds ``Gamma(G x H)`` from below when both factors have an edge."""
    _positive(k, l)
    return k + l - 2
