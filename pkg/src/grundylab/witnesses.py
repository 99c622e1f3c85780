"""Explicit greedy colourings realising lower bounds on product Grundy numbers.

Every builder re-validates its output with the greedy-partition checker before
returning, so a returned partition or colouring is always a certificate.
"""

from __future__ import annotations

from collections.abc import Sequence

from .coloring import (
    GreedyPartition,
    PartitionError,
    check_partition,
    dominate_extend,
    find_violation,
    partition_of,
)
from .constructions import (
    binomial_tree,
    blownup_clique,
    complete,
    complete_bipartite,
    jellyfish,
    attach_gadget,
    psi_lift,
)
from .graph import Graph, GraphError, blow_up
from .iso import find_isomorphism
from .products import ProductLayout, cartesian_product, direct_product, lex_product


def _validated_coloring(g: Graph, colors: Sequence[int]) -> GreedyPartition:
    part = partition_of(g, colors)
    bad = find_violation(g, part)
    if bad is not None:
        raise PartitionError(str(bad))
    return part


def witness_lex_pairs(g: Graph, cg: GreedyPartition, h: Graph, ch: GreedyPartition) -> list[int]:
    """Colour ``(a, x)`` of ``G[H]`` by the pair ``(c_G(a), c_H(x))`` in lexicographic order.

    Both partitions must be full greedy partitions; the result uses
    ``len(cg) * len(ch)`` colours.
    """
    for graph, part in ((g, cg), (h, ch)):
        check_partition(graph, part)
        if len(part.domain) != graph.n:
            raise PartitionError("factor partitions must cover every vertex")
    lay = lex_product(g, h)
    ag, ah = cg.class_of(), ch.class_of()
    colors = [(ag[a] - 1) * len(ch) + ah[x] for a in range(g.n) for x in range(h.n)]
    _validated_coloring(lay.product, colors)
    return colors


def witness_kpp_cartesian(p: int) -> tuple[ProductLayout, GreedyPartition]:
    """Greedy partition with ``p + 1`` classes on part of ``K_{p,p} □ K_{p,p}``.

    Start from the 2-class colouring of the 4-cycle spanned by the first vertex
    of each side, then for ``q = 2..p`` prepend the stable set
    ``{x} x Y  u  {y} x X  u  X x {x}  u  Y x {y}`` built from the new pair
    ``x, y`` and the previous sides ``X, Y``; it dominates everything coloured so
    far.
    """
    if p < 2:
        raise GraphError("need p >= 2")
    kpp = complete_bipartite(p, p)
    lay = cartesian_product(kpp, kpp)
    enc = lay.encode
    g = lay.product
    part = GreedyPartition([{enc(0, 0), enc(p, p)}, {enc(0, p), enc(p, 0)}])
    for q in range(2, p + 1):
        x, y = q - 1, p + q - 1
        xs, ys = range(0, q - 1), range(p, p + q - 1)
        dom = {enc(x, b) for b in ys} | {enc(y, a) for a in xs}
        dom |= {enc(a, x) for a in xs} | {enc(b, y) for b in ys}
        part = dominate_extend(g, part, dom)
    check_partition(g, part)
    return lay, part


def witness_blownup_cartesian(n: int, k: int) -> tuple[ProductLayout, GreedyPartition]:
    """Greedy partition with ``n * k`` classes of ``K_n □ K_k[S_n]``.

    Part ``i`` of ``K_k[S_n]`` contributes ``n`` classes
    ``T_r = {(x_j, v_(i, (r + j) mod n))}``; parts are prepended from the last
    to the first, each ``T_r`` dominating everything placed before it.
    """
    if n < 1 or k < 1:
        raise GraphError("n and k must be positive")
    lay = cartesian_product(complete(n), blownup_clique(k, n))
    g = lay.product
    part = GreedyPartition(())
    for i in reversed(range(k)):
        for r in reversed(range(n)):
            t = {lay.encode(j, i * n + (r + j) % n) for j in range(n)}
            if part.classes:
                part = dominate_extend(g, part, t)
            else:
                part = GreedyPartition([t])
    check_partition(g, part)
    return lay, part


def lift_pendant_copy(g: Graph, colors: Sequence[int], x: int, l: int) -> list[int]:
    """Lift a greedy colouring of ``G[K_l]`` to ``psi_lift(G, x)[K_l]``.

    Both copies of ``G`` replay ``colors``; the clique over the second copy of
    ``x`` is recoloured with ``l`` fresh colours above the old maximum. The
    result is checked and a ``PartitionError`` raised if some vertex of the
    second copy loses a lower colour it relied on from that clique.
    """
    n = g.n
    lay = lex_product(g, complete(l))
    if len(colors) != lay.product.n:
        raise PartitionError(f"colouring has {len(colors)} entries, expected {lay.product.n}")
    _validated_coloring(lay.product, colors)
    if not 0 <= x < n:
        raise GraphError(f"vertex {x} out of range")
    top = max(colors)
    if top not in {colors[v] for v in lay.copy_at(x)}:
        raise PartitionError(f"top colour {top} does not appear on the copy over {x}")
    lifted = lex_product(psi_lift(g, x), complete(l)).product
    out = list(colors) + list(colors)
    for i in range(l):
        out[(n + x) * l + i] = top + 1 + i
    _validated_coloring(lifted, out)
    return out


def lift_coloring_intervals(g: Graph, colors: Sequence[int], p: int) -> list[int]:
    """Turn a greedy colouring of ``G[K_l]`` into one of ``G[K_(l p)]`` with ``p`` times the colours.

    Vertex ``(v, i)`` of colour ``j`` becomes the ``p`` vertices
    ``(v, i p + r)`` with colours ``(j - 1) p + 1 + r``.
    """
    if p < 1:
        raise GraphError("p must be positive")
    if g.n == 0 or len(colors) % g.n:
        raise PartitionError("colouring length is not a multiple of the order")
    l = len(colors) // g.n
    _validated_coloring(lex_product(g, complete(l)).product, colors)
    out = [0] * (len(colors) * p)
    for v in range(g.n):
        for i in range(l):
            j = colors[v * l + i]
            for r in range(p):
                out[v * l * p + i * p + r] = (j - 1) * p + 1 + r
    _validated_coloring(lex_product(g, complete(l * p)).product, out)
    return out


def grow_binomial_tree(g: Graph, tree: Sequence[int]) -> tuple[Graph, Graph, list[int]]:
    """Grow an induced binomial tree of ``G x K_2`` through the jellyfish construction.

    ``tree`` is a vertex set of ``G x K_2`` (ids ``2 v + i``) inducing ``T_k``.
    Vertices ``v`` with both ``(v,0)`` and ``(v,1)`` in the tree are blown up
    into two false twins, the jellyfish is attached to every vertex of the
    result, and each tree vertex ``(w, i)`` then gets a 3-vertex pendant from
    its own jellyfish. Returns ``(H, H x K_2, vertex set)`` where the vertex set
    induces ``T_(k+2)``.
    """
    k2 = complete(2)
    lay = direct_product(g, k2)
    tset = sorted(set(tree))
    order = len(tset)
    k = order.bit_length()
    if order != 1 << (k - 1):
        raise GraphError(f"{order} vertices cannot form a binomial tree")
    sub, _ = lay.product.induced(tset)
    if find_isomorphism(sub, binomial_tree(k)) is None:
        raise GraphError("vertex set does not induce a binomial tree")
    pairs = [lay.decode(t) for t in tset]
    doubled = sorted({v for v, i in pairs if (v, 1 - i) in pairs})
    gp = g
    twin = {}
    for v in doubled:
        twin[v] = gp.n
        gp = blow_up(gp, v, 2)
    moved = [(twin[v], i) if v in twin and i == 1 else (v, i) for v, i in pairs]
    gadget, head = jellyfish()
    h = attach_gadget(gp, gadget, head)
    hk2 = direct_product(h, k2)
    s = gadget.n
    rest = [w for w in range(s) if w != head]
    nbr = {w: set(gadget.neighbors(w)) for w in range(s)}
    # pendant: a head neighbour of degree 1, the degree-3 head neighbour u, and one leaf of u
    leaf = next(w for w in nbr[head] if len(nbr[w]) == 1)
    u = next(w for w in nbr[head] if len(nbr[w]) == 3)
    below = next(w for w in sorted(nbr[u]) if w != head)
    out = []
    for v, i in moved:
        base = gp.n + v * (s - 1)
        ident = {w: base + rest.index(w) for w in rest}
        out.append(hk2.encode(v, i))
        out.append(hk2.encode(ident[leaf], 1 - i))
        out.append(hk2.encode(ident[u], 1 - i))
        out.append(hk2.encode(ident[below], i))
    out.sort()
    sub, _ = hk2.product.induced(out)
    if find_isomorphism(sub, binomial_tree(k + 2)) is None:
        raise GraphError("construction did not produce an induced binomial tree")
    return h, hk2.product, out
