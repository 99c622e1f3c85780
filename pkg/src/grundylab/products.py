"""Lexicographic, Cartesian and direct products with copy/fiber bookkeeping.

Product vertex ``(a, x)`` with ``a`` in ``G`` and ``x`` in ``H`` gets the
row-major id ``a * |H| + x``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, members

KINDS = ("lexicographic", "cartesian", "direct")
KIND_ALIASES = {
    "lex": "lexicographic",
    "lexicographic": "lexicographic",
    "cart": "cartesian",
    "cartesian": "cartesian",
    "direct": "direct",
    "tensor": "direct",
}


@dataclass(frozen=True)
class ProductLayout:
    product: Graph
    kind: str
    n_g: int
    n_h: int

    def encode(self, a: int, x: int) -> int:
        if not (0 <= a < self.n_g and 0 <= x < self.n_h):
            raise GraphError(f"pair ({a},{x}) out of range for a {self.n_g}x{self.n_h} product")
        return a * self.n_h + x

    def decode(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.n_g * self.n_h:
            raise GraphError(f"product vertex {v} out of range")
        return divmod(v, self.n_h)

    def copy_at(self, a: int) -> frozenset[int]:
        """Vertices ``{a} x V(H)``: the copy of ``H`` sitting over ``a``."""
        if not 0 <= a < self.n_g:
            raise GraphError(f"G-vertex {a} out of range")
        return frozenset(range(a * self.n_h, (a + 1) * self.n_h))

    def fiber_at(self, x: int) -> frozenset[int]:
        """Vertices ``V(G) x {x}``."""
        if not 0 <= x < self.n_h:
            raise GraphError(f"H-vertex {x} out of range")
        return frozenset(a * self.n_h + x for a in range(self.n_g))

    def label(self, v: int) -> str:
        a, x = self.decode(v)
        return f"({a},{x})"


def _check_factors(g: Graph, h: Graph) -> None:
    if g.n == 0 or h.n == 0:
        raise GraphError("product factors must be non-empty")


def _build(g: Graph, h: Graph, kind: str) -> ProductLayout:
    _check_factors(g, h)
    nh = h.n
    block = (1 << nh) - 1
    rows = []
    for a in range(g.n):
        ga = g.adj[a]
        # rows of H spread over every G-neighbour b of a
        spread_all = 0
        for b in members(ga):
            spread_all |= block << (b * nh)
        for x in range(nh):
            hx = h.adj[x]
            if kind == "lexicographic":
                row = spread_all | (hx << (a * nh))
            elif kind == "cartesian":
                row = hx << (a * nh)
                for b in members(ga):
                    row |= 1 << (b * nh + x)
            else:
                row = 0
                for b in members(ga):
                    row |= hx << (b * nh)
            rows.append(row)
    return ProductLayout(Graph(g.n * nh, rows), kind, g.n, nh)


def lex_product(g: Graph, h: Graph) -> ProductLayout:
    """``G[H]``: ``(a,x)~(b,y)`` iff ``ab`` in ``E(G)``, or ``a = b`` and ``xy`` in ``E(H)``."""
    return _build(g, h, "lexicographic")


def cartesian_product(g: Graph, h: Graph) -> ProductLayout:
    """``G □ H``: move along exactly one coordinate."""
    return _build(g, h, "cartesian")


def direct_product(g: Graph, h: Graph) -> ProductLayout:
    """``G x H``: move along both coordinates at once."""
    return _build(g, h, "direct")


def product(g: Graph, h: Graph, kind: str) -> ProductLayout:
    try:
        kind = KIND_ALIASES[kind]
    except KeyError:
        raise GraphError(f"unknown product kind {kind!r}") from None
    return _build(g, h, kind)


def expected_edge_count(g: Graph, h: Graph, kind: str) -> int:
    eg, eh = g.num_edges, h.num_edges
    if kind == "lexicographic":
        return g.n * eh + eg * h.n * h.n
    if kind == "cartesian":
        return g.n * eh + h.n * eg
    if kind == "direct":
        return 2 * eg * eh
    raise GraphError(f"unknown product kind {kind!r}")
