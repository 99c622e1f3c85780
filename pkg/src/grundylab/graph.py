"""Immutable simple graphs stored as per-vertex adjacency bit rows.

Vertices are the dense ids ``0..n-1``. Row ``adj[v]`` is an int whose bit
``u`` is set iff ``uv`` is an edge. Every surgery operation returns a new
graph; deletions re-index the surviving vertices monotonically and, where
useful, hand back the old->new id map.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import TextIO

MAX_VERTICES = 256

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Raised for malformed graph input or out-of-range vertex ids."""


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are hashable values; two graphs compare equal iff they have the
    same order and identical adjacency rows (labelled equality, not
    isomorphism).
    """

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        if n > MAX_VERTICES:
            raise GraphError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        self._n = n
        self._adj = adj
        self._hash = hash((n, adj))

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def all_mask(self) -> int:
        return (1 << self._n) - 1

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.num_edges})"

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return list(members(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        out = []
        for u in range(self._n):
            for v in members(self._adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def degree(self, v: int) -> int:
        self._check(v)
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._adj]

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self._adj), default=0)

    def validate(self) -> None:
        """Check symmetry, loop-freeness and row range; raise GraphError on failure."""
        full = self.all_mask
        for v, row in enumerate(self._adj):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= {self._n}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in members(row):
                if not self._adj[u] >> v & 1:
                    raise GraphError(f"edge ({v},{u}) is not symmetric")

    def _check(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range for graph of order {self._n}")

    def _check_mask(self, mask: int) -> None:
        if mask < 0 or mask >> self._n:
            raise GraphError(f"vertex set {sorted(members(mask))} not within 0..{self._n - 1}")

    def is_stable(self, vertices: Iterable[int] | int) -> bool:
        mask = vertices if isinstance(vertices, int) else mask_of(vertices)
        return all(not (self._adj[v] & mask) for v in members(mask))

    # -- connectivity ------------------------------------------------------

    def component_masks(self, within: int | None = None) -> list[int]:
        """Connected components of the subgraph induced by ``within``, as bit masks.

        Components are ordered by their smallest vertex.
        """
        rest = self.all_mask if within is None else within
        comps = []
        adj = self._adj
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                grow = 0
                for v in members(frontier):
                    grow |= adj[v]
                grow &= rest & ~comp
                comp |= grow
                frontier = grow
            comps.append(comp)
            rest &= ~comp
        return comps

    def components(self) -> list[frozenset[int]]:
        return [frozenset(members(c)) for c in self.component_masks()]

    def is_connected(self) -> bool:
        return len(self.component_masks()) <= 1

    # -- surgery -----------------------------------------------------------

    def induced(self, vertices: Iterable[int] | int) -> tuple[Graph, dict[int, int]]:
        """Subgraph induced by ``vertices`` plus the monotone old->new id map."""
        mask = vertices if isinstance(vertices, int) else mask_of(self._checked(vertices))
        self._check_mask(mask)
        keep = list(members(mask))
        idmap = {old: new for new, old in enumerate(keep)}
        rows = []
        for old in keep:
            row = 0
            for u in members(self._adj[old] & mask):
                row |= 1 << idmap[u]
            rows.append(row)
        return Graph(len(keep), rows), idmap

    def subgraph(self, vertices: Iterable[int] | int) -> Graph:
        return self.induced(vertices)[0]

    def remove_vertex(self, v: int) -> Graph:
        self._check(v)
        return self.subgraph(self.all_mask & ~(1 << v))

    def remove_vertices(self, vertices: Iterable[int] | int) -> Graph:
        mask = vertices if isinstance(vertices, int) else mask_of(self._checked(vertices))
        self._check_mask(mask)
        return self.subgraph(self.all_mask & ~mask)

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) not present")
        rows = list(self._adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self._n, rows)

    def add_edge(self, u: int, v: int) -> Graph:
        self._check(u)
        self._check(v)
        if u == v:
            raise GraphError(f"loop pair ({u},{v}) rejected")
        rows = list(self._adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self._n, rows)

    def complement(self) -> Graph:
        full = self.all_mask
        return Graph(self._n, [(full & ~row) & ~(1 << v) for v, row in enumerate(self._adj)])

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabelling must be a permutation")
        rows = [0] * self._n
        for v, row in enumerate(self._adj):
            rows[perm[v]] = mask_of(perm[u] for u in members(row))
        return Graph(self._n, rows)

    def _checked(self, vertices: Iterable[int]) -> list[int]:
        vs = list(vertices)
        for v in vs:
            self._check(v)
        return vs


# -- constructors -----------------------------------------------------------


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates and reversed pairs collapse."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop pair ({u},{v}) rejected")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g + h``; the vertices of ``h`` are shifted by ``g.n``."""
    shift = g.n
    return Graph(g.n + h.n, list(g.adj) + [row << shift for row in h.adj])


def join(g: Graph, h: Graph) -> Graph:
    """``g`` joined to ``h``: disjoint union plus every cross edge."""
    shift = g.n
    gmask = g.all_mask
    hmask = h.all_mask << shift
    rows = [row | hmask for row in g.adj] + [(row << shift) | gmask for row in h.adj]
    return Graph(g.n + h.n, rows)


def blow_up(g: Graph, v: int, k: int) -> Graph:
    """Replace ``v`` by ``k`` pairwise non-adjacent clones sharing its neighbourhood.

    The first clone keeps id ``v``; the others are appended as ``n, n+1, ...``.
    """
    g._check(v)
    if k < 1:
        raise GraphError("blow-up factor must be at least 1")
    n = g.n
    extra = k - 1
    clones = ((1 << extra) - 1) << n
    rows = list(g.adj) + [g.adj[v]] * extra
    for u in members(g.adj[v]):
        rows[u] |= clones
    return Graph(n + extra, rows)


# -- edge-list text format ----------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body.split()))
    if not lines:
        raise GraphError("edge list is empty")
    lineno, head = lines[0]
    if len(head) != 2:
        raise GraphError(f"line {lineno}: expected 'n m' header")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphError(f"line {lineno}: bad header {head}") from exc
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, parts in body:
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphError(f"line {lineno}: non-integer endpoint") from exc
    return graph_from_edges(n, edges)


def write_edgelist(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out += [f"{u} {v}" for u, v in edges]
    return "\n".join(out) + "\n"


# -- graph6 ----------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(g: Graph, header: bool = False) -> str:
    """Encode ``g`` in graph6 (upper triangle, column-major, 6-bit groups)."""
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(63 + val))
    return (GRAPH6_HEADER if header else "") + _encode_n(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is accepted)."""
    s = text.strip()
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid character {ch!r}", base + i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        raise Graph6Error("truncated vertex-count field", base)
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph order {n} exceeds supported maximum {MAX_VERTICES}", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos != need:
        raise Graph6Error(
            f"expected {need} adjacency bytes for n={n}, found {len(vals) - pos}",
            base + min(len(vals), pos + need),
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    tail = nbits % 6
    if tail and vals[-1] & ((1 << (6 - tail)) - 1):
        raise Graph6Error("non-zero padding bits", base + len(vals) - 1)
    return Graph(n, rows)


def read_graph(stream: TextIO, fmt: str = "auto") -> Graph:
    """Read a single graph from a text stream in graph6 or edge-list form."""
    text = stream.read()
    return parse_graph_text(text, fmt)


def parse_graph_text(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        stripped = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        fmt = "graph6" if len(stripped) == 1 and len(stripped[0].split()) == 1 else "edgelist"
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphError(f"expected one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0])
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise GraphError(f"unknown graph format {fmt!r}")


def format_graph(g: Graph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return write_graph6(g) + "\n"
    if fmt == "edgelist":
        return write_edgelist(g)
    raise GraphError(f"unknown graph format {fmt!r}")
