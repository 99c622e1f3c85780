"""Named graph families and the reconstructed extremal gadgets.

Two gadgets are only described indirectly in the literature this package
replays: the 8-vertex graph ``G_3`` (Grundy number 3, yet ``G_3[K_2]`` has
Grundy number 7) and the jellyfish pendant that raises the Grundy number by
exactly two. Both are found by deterministic search, certified with the exact
solver, and stored in ``data/fixtures.json``. ``python -m
grundylab.constructions`` re-derives that file.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from itertools import combinations

from .coloring import (
    GreedyPartition,
    find_violation,
    grundy_at_least,
    grundy_number,
    iter_greedy_partitions,
)
from .graph import Graph, GraphError, disjoint_union, graph_from_edges, parse_graph6, write_graph6
from .iso import has_swap_automorphism
from .products import direct_product, lex_product

FIXTURE_FILE = "fixtures.json"


# -- standard families --------------------------------------------------------------


def _need(value: int, minimum: int, what: str) -> None:
    if value < minimum:
        raise GraphError(f"{what} must be at least {minimum}, got {value}")


def edgeless(n: int) -> Graph:
    _need(n, 1, "order")
    return Graph(n, [0] * n)


def path(n: int) -> Graph:
    _need(n, 1, "order")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n, 3, "cycle length")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n, 1, "order")
    return graph_from_edges(n, list(combinations(range(n), 2)))


def complete_bipartite(p: int, q: int) -> Graph:
    """``K_{p,q}`` with parts ``0..p-1`` and ``p..p+q-1``."""
    _need(p, 1, "part size")
    _need(q, 1, "part size")
    return graph_from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def star(p: int) -> Graph:
    """``K_{1,p}`` with centre 0."""
    return complete_bipartite(1, p)


def binomial_tree(k: int) -> Graph:
    """Binomial tree ``T_k`` on ``2^(k-1)`` vertices.

    ``T_1`` is a single vertex; ``T_k`` hangs a new leaf ``v + m`` off every
    vertex ``v`` of ``T_(k-1)`` (``m`` its order), so vertex 0 is always the root.
    """
    _need(k, 1, "binomial tree index")
    edges: list[tuple[int, int]] = []
    m = 1
    for _ in range(k - 1):
        edges += [(v, v + m) for v in range(m)]
        m *= 2
    return graph_from_edges(m, edges)


def hypercube(k: int) -> Graph:
    """``Q_k``; vertex ids are bit strings, matching iterated ``Q_(k-1) □ K_2`` encoding."""
    _need(k, 1, "dimension")
    n = 1 << k
    return graph_from_edges(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(k) if v < v ^ (1 << i)])


def blownup_clique(k: int, n: int) -> Graph:
    """``K_k[S_n]``: complete ``k``-partite graph, part ``i`` is ``i*n .. i*n+n-1``."""
    _need(k, 1, "number of parts")
    _need(n, 1, "part size")
    return graph_from_edges(
        k * n,
        [(u, v) for u in range(k * n) for v in range(u + 1, k * n) if u // n != v // n],
    )


def psi_lift(g: Graph, x: int) -> Graph:
    """Two disjoint copies of ``g`` joined by the single edge ``x_1 x_2``.

    The second copy's vertex ``v`` has id ``g.n + v``.
    """
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} out of range for graph of order {g.n}")
    return disjoint_union(g, g).add_edge(x, g.n + x)


# -- jellyfish -------------------------------------------------------------------------

JELLYFISH_CERT_GRAPHS = ("K1", "K2", "P4", "C3")


def _cert_graph(name: str) -> Graph:
    return {"K1": complete(1), "K2": complete(2), "P4": path(4), "C3": cycle(3)}[name]


def default_jellyfish() -> Graph:
    """Head ``h=0`` with a pendant ``x=1`` and a degree-3 vertex ``u=2`` carrying leaves 3, 4."""
    return graph_from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4)])


def attach_gadget(g: Graph, gadget: Graph, head: int = 0) -> Graph:
    """Attach a fresh copy of ``gadget`` to every vertex of ``g``, identifying heads.

    The non-head gadget vertices for ``v`` occupy ids
    ``g.n + v*(s-1) .. g.n + (v+1)*(s-1) - 1`` in increasing gadget-id order.
    """
    s = gadget.n
    rest = [w for w in range(s) if w != head]
    edges = list(g.edges())
    for v in range(g.n):
        base = g.n + v * (s - 1)
        ids = {head: v}
        ids.update({w: base + i for i, w in enumerate(rest)})
        edges += [(ids[a], ids[b]) for a, b in gadget.edges()]
    return graph_from_edges(g.n + g.n * (s - 1), edges)


def certify_jellyfish(gadget: Graph, head: int = 0) -> dict[str, list[int]] | None:
    """Return ``{name: [Gamma(G), Gamma(J(G))]}`` if every test graph gains exactly 2."""
    out = {}
    for name in JELLYFISH_CERT_GRAPHS:
        g = _cert_graph(name)
        base = grundy_number(g)[0]
        lifted = grundy_number(attach_gadget(g, gadget, head), max_n=None)[0]
        if lifted != base + 2:
            return None
        out[name] = [base, lifted]
    return out


def _jellyfish_shape_ok(gadget: Graph, head: int) -> bool:
    if not gadget.is_connected():
        return False
    if not any(gadget.degree(u) == 3 for u in gadget.neighbors(head)):
        return False
    return grundy_number(gadget.remove_vertex(head))[0] == 2


def search_jellyfish(max_order: int = 6) -> tuple[Graph, dict[str, list[int]]]:
    """Fallback: the first certified head-rooted gadget on at most ``max_order`` vertices.

    Gadgets are scanned by order, then by edge subsets in lexicographic order;
    the head is vertex 0.
    """
    for s in range(2, max_order + 1):
        pairs = list(combinations(range(s), 2))
        for r in range(s - 1, len(pairs) + 1):
            for es in combinations(pairs, r):
                gadget = graph_from_edges(s, es)
                if not _jellyfish_shape_ok(gadget, 0):
                    continue
                cert = certify_jellyfish(gadget, 0)
                if cert is not None:
                    return gadget, cert
    raise GraphError(f"no certified jellyfish gadget on at most {max_order} vertices")


def derive_jellyfish() -> dict:
    gadget = default_jellyfish()
    cert = certify_jellyfish(gadget) if _jellyfish_shape_ok(gadget, 0) else None
    source = "default"
    if cert is None:
        gadget, cert = search_jellyfish()
        source = "search"
    return {"graph6": write_graph6(gadget), "head": 0, "source": source, "certificate": cert}


# -- G_3 -----------------------------------------------------------------------------

_K2 = graph_from_edges(2, [(0, 1)])


def _g3_candidates():
    """8-vertex graphs with adjacent degree-3 vertices 0, 1 and all other degrees <= 2.

    Vertex 0's other neighbours are fixed to {2, 3} (no loss up to
    relabelling); vertex 1's are scanned lexicographically, then the edges among
    vertices 2..7 by size and lexicographic order.
    """
    inner = list(combinations(range(2, 8), 2))
    for nb in combinations(range(2, 8), 2):
        base = [(0, 1), (0, 2), (0, 3)] + [(1, v) for v in nb]
        deg = [0] * 8
        for u, v in base:
            deg[u] += 1
            deg[v] += 1
        for r in range(len(inner) + 1):
            for es in combinations(inner, r):
                d = deg[:]
                ok = True
                for u, v in es:
                    d[u] += 1
                    d[v] += 1
                    if d[u] > 2 or d[v] > 2:
                        ok = False
                        break
                if ok:
                    yield graph_from_edges(8, base + list(es))


def certify_g3(g: Graph) -> dict | None:
    """Certificate for a ``G_3`` candidate, or ``None`` if any requirement fails."""
    degs = g.degrees()
    top = [v for v in range(g.n) if degs[v] == 3]
    if len(top) != 2 or max(degs) != 3 or not g.has_edge(*top):
        return None
    if not has_swap_automorphism(g, *top):
        return None
    if grundy_number(g)[0] != 3:
        return None
    lex = lex_product(g, _K2).product
    if not grundy_at_least(lex, 7) or grundy_at_least(lex, 8):
        return None
    if grundy_number(direct_product(g, _K2).product)[0] != 4:
        return None
    return {
        "degree3": top,
        "grundy": 3,
        "grundy_lex_K2": 7,
        "grundy_direct_K2": 4,
        "swap_automorphism": True,
    }


def search_g3() -> tuple[Graph, dict]:
    for g in _g3_candidates():
        cert = certify_g3(g)
        if cert is not None:
            return g, cert
    raise GraphError("G_3 search exhausted all candidates without a certified witness")


def liftable_witness(g: Graph, l: int = 2) -> tuple[GreedyPartition, int]:
    """First optimal greedy partition of ``g[K_l]`` accepted by the pendant-copy lift.

    Returns the partition and the vertex ``x`` whose copy carries the top
    colour. Used to seed the lifted colouring for ``psi_lift(g, x)[K_l]``.
    """
    from .witnesses import lift_pendant_copy

    lex = lex_product(g, complete(l))
    k = grundy_number(lex.product)[0]
    for part in iter_greedy_partitions(lex.product, k):
        colors = part.coloring(lex.product.n)
        for x in sorted({lex.decode(v)[0] for v in part.classes[-1]}):
            try:
                lift_pendant_copy(g, colors, x, l)
            except ValueError:
                continue
            return part, x
    raise GraphError("no optimal partition survives the lift")


def derive_g3() -> dict:
    g, cert = search_g3()
    part, x = liftable_witness(g, 2)
    return {
        "graph6": write_graph6(g),
        "certificate": cert,
        "lex_K2_witness": {"x": x, "classes": [sorted(c) for c in part.classes]},
    }


def derive_fixtures() -> dict:
    return {"g3": derive_g3(), "jellyfish": derive_jellyfish()}


@lru_cache(maxsize=1)
def load_fixtures() -> dict:
    text = resources.files("grundylab").joinpath("data", FIXTURE_FILE).read_text()
    return json.loads(text)


def graph_g3() -> Graph:
    return parse_graph6(load_fixtures()["g3"]["graph6"])


def g3_lex_witness() -> tuple[GreedyPartition, int]:
    """The stored 7-class greedy partition of ``G_3[K_2]`` and its top-colour vertex."""
    data = load_fixtures()["g3"]["lex_K2_witness"]
    part = GreedyPartition(data["classes"])
    lex = lex_product(graph_g3(), _K2).product
    bad = find_violation(lex, part)
    if bad is not None:
        raise GraphError(f"stored G_3 witness is invalid: {bad}")
    return part, data["x"]


def jellyfish() -> tuple[Graph, int]:
    data = load_fixtures()["jellyfish"]
    return parse_graph6(data["graph6"]), data["head"]


def jellyfished(g: Graph) -> Graph:
    gadget, head = jellyfish()
    return attach_gadget(g, gadget, head)


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "edgeless": (edgeless, 1),
    "kpq": (complete_bipartite, 2),
    "star": (star, 1),
    "hypercube": (hypercube, 1),
    "binomial": (binomial_tree, 1),
    "blowclique": (blownup_clique, 2),
    "g3": (graph_g3, 0),
    "jellyfish": (lambda: jellyfish()[0], 0),
}


def construct(family: str, *args: int) -> Graph:
    try:
        fn, arity = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}") from None
    if len(args) != arity:
        raise GraphError(f"family {family!r} takes {arity} integer argument(s), got {len(args)}")
    return fn(*args)


if __name__ == "__main__":
    import sys

    json.dump(derive_fixtures(), sys.stdout, indent=2)
    sys.stdout.write("\n")
