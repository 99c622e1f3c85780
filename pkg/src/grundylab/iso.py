"""Brute-force induced-subgraph matching for small graphs.

Pattern vertices are placed in BFS order so that every placement after the
first in a component is constrained to the neighbourhood of an already
placed vertex. Host candidates are tried in increasing id order, so the
first embedding found is deterministic.
"""

from __future__ import annotations

from .graph import Graph, members


def _bfs_order(p: Graph) -> list[int]:
    order: list[int] = []
    placed = 0
    for comp in p.component_masks():
        start = (comp & -comp).bit_length() - 1
        queue = [start]
        placed |= 1 << start
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in members(p.adj[v] & ~placed):
                placed |= 1 << u
                queue.append(u)
    return order


def find_induced_copy(
    pattern: Graph,
    host: Graph,
    fixed: dict[int, int] | None = None,
    exact_degrees: bool = False,
) -> dict[int, int] | None:
    """Injective map pattern -> host whose image induces a copy of ``pattern``.

    ``fixed`` pins some pattern vertices to host vertices. With
    ``exact_degrees`` every image vertex must have the same degree as its
    preimage (use when pattern and host have equal order, i.e. isomorphism).
    """
    if pattern.n > host.n:
        return None
    fixed = dict(fixed or {})
    order = [v for v in fixed] + [v for v in _bfs_order(pattern) if v not in fixed]
    pos = {v: i for i, v in enumerate(order)}
    padj, hadj = pattern.adj, host.adj
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    # earlier pattern neighbours of each pattern vertex, as a list of positions
    earlier_nbr = [[pos[u] for u in members(padj[v]) if pos[u] < i] for i, v in enumerate(order)]
    earlier_non = [[pos[u] for u in members(pattern.all_mask & ~padj[v] & ~(1 << v)) if pos[u] < i]
                   for i, v in enumerate(order)]
    image = [-1] * len(order)

    def ok(i: int, c: int, used: int) -> bool:
        if used >> c & 1:
            return False
        d = pdeg[order[i]]
        if hdeg[c] < d or (exact_degrees and hdeg[c] != d):
            return False
        row = hadj[c]
        for j in earlier_nbr[i]:
            if not row >> image[j] & 1:
                return False
        for j in earlier_non[i]:
            if row >> image[j] & 1:
                return False
        return True

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        if v in fixed:
            cands = [fixed[v]]
        elif earlier_nbr[i]:
            cands = list(members(hadj[image[earlier_nbr[i][0]]]))
        else:
            cands = range(host.n)
        for c in cands:
            if ok(i, c, used):
                image[i] = c
                if rec(i + 1, used | (1 << c)):
                    return True
        image[i] = -1
        return False

    if not rec(0, 0):
        return None
    return {order[i]: image[i] for i in range(len(order))}


def find_isomorphism(g: Graph, h: Graph, fixed: dict[int, int] | None = None) -> dict[int, int] | None:
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    return find_induced_copy(g, h, fixed=fixed, exact_degrees=True)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def has_swap_automorphism(g: Graph, a: int, b: int) -> bool:
    """True if some automorphism of ``g`` exchanges ``a`` and ``b``."""
    return find_isomorphism(g, g, fixed={a: b, b: a}) is not None
