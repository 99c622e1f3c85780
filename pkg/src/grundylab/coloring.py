"""Greedy colouring, greedy partitions and exact Grundy/chromatic/clique solvers.

A greedy partition is an ordered tuple of stable classes ``(S_1, ..., S_k)``
in which every vertex of ``S_i`` has a neighbour in each earlier ``S_j``.
These are exactly the colourings first-fit can produce, so the Grundy
number is the largest class count over all such partitions.

The exact Grundy solver uses the fact that ``S_1`` must dominate everything
else, i.e. it is a maximal stable set, which gives the recursion
``Gamma(U) = 1 + max_M Gamma(U - M)`` over maximal stable sets ``M`` of the
induced subgraph on ``U``. Subproblems are bit masks memoised per graph.
"""

from __future__ import annotations

import time
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import permutations

from .graph import Graph, GraphError, mask_of, members

GRUNDY_MAX_N = 26
ENUMERATE_MAX_N = 10
ORDERING_MAX_N = 7
CHROMATIC_MAX_N = 64


class SolverError(RuntimeError):
    pass


class InstanceTooLarge(SolverError):
    """The instance exceeds a configured size cap; no answer is given."""


class SolverTimeout(SolverError):
    pass


class PartitionError(ValueError):
    pass


# -- value types ----------------------------------------------------------------


@dataclass(frozen=True)
class GreedyPartition:
    """Ordered stable classes; class ``i`` (1-based) is ``classes[i - 1]``."""

    classes: tuple[frozenset[int], ...]

    def __init__(self, classes: Iterable[Iterable[int]]):
        object.__setattr__(self, "classes", tuple(frozenset(c) for c in classes))

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.classes)

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset().union(*self.classes) if self.classes else frozenset()

    def class_of(self) -> dict[int, int]:
        """Map each covered vertex to its 1-based class index."""
        return {v: i for i, cls in enumerate(self.classes, 1) for v in cls}

    def coloring(self, n: int) -> list[int]:
        """Per-vertex colours over ``0..n-1``; uncovered vertices get 0."""
        out = [0] * n
        for v, i in self.class_of().items():
            out[v] = i
        return out

    def masks(self) -> list[int]:
        return [mask_of(c) for c in self.classes]


@dataclass(frozen=True)
class Violation:
    """First failure found by the greedy-partition checker.

    ``kind`` is ``"empty"``, ``"unstable"`` or ``"undominated"``. For
    ``undominated``, ``vertex`` in class ``i`` has no neighbour in class ``j``.
    For ``unstable``, ``vertex`` and ``other`` are adjacent inside class ``i``.
    """

    kind: str
    i: int
    vertex: int | None = None
    j: int | None = None
    other: int | None = None

    def __str__(self) -> str:
        if self.kind == "empty":
            return f"class {self.i} is empty"
        if self.kind == "unstable":
            return f"class {self.i} is not stable: {self.vertex}~{self.other}"
        return f"vertex {self.vertex} in class {self.i} has no neighbour in class {self.j}"


# -- greedy colouring -----------------------------------------------------------------


def greedy_color(g: Graph, order: Sequence[int]) -> tuple[list[int], int]:
    """First-fit colouring along ``order``; returns per-vertex colours and the count."""
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise GraphError(f"ordering {order} is not a permutation of 0..{g.n - 1}")
    colors = [0] * g.n
    adj = g.adj
    for v in order:
        used = 0
        for u in members(adj[v]):
            used |= 1 << colors[u]
        # bit 0 stands for "uncoloured"; find the lowest clear bit above it
        free = ~(used | 1)
        colors[v] = (free & -free).bit_length() - 1
    return colors, max(colors, default=0)


def partition_of(g: Graph, colors: Sequence[int]) -> GreedyPartition:
    """Read off the colour classes of a proper colouring with colours ``1..k``."""
    if len(colors) != g.n:
        raise PartitionError(f"colouring has {len(colors)} entries for {g.n} vertices")
    k = max(colors, default=0)
    classes: list[set[int]] = [set() for _ in range(k)]
    for v, c in enumerate(colors):
        if c < 1:
            raise PartitionError(f"vertex {v} has non-positive colour {c}")
        classes[c - 1].add(v)
    for i, cls in enumerate(classes, 1):
        if not cls:
            raise PartitionError(f"colours are not contiguous: colour {i} unused")
    for u, v in g.edges():
        if colors[u] == colors[v]:
            raise PartitionError(f"improper colouring: edge ({u},{v}) has colour {colors[u]} twice")
    return GreedyPartition(classes)


def find_violation(g: Graph, partition: GreedyPartition | Sequence[Iterable[int]]) -> Violation | None:
    """Return the first greedy-partition violation, or ``None`` if the partition is greedy.

    Classes are scanned in order; within a class, vertices ascending; for each
    vertex the earlier classes ascending.
    """
    masks = [mask_of(c) for c in partition]
    seen = 0
    for m in masks:
        if m & seen:
            raise PartitionError("classes overlap")
        if m >> g.n:
            raise PartitionError(f"class references a vertex outside 0..{g.n - 1}")
        seen |= m
    adj = g.adj
    for i, m in enumerate(masks, 1):
        if not m:
            return Violation("empty", i)
        for v in members(m):
            clash = adj[v] & m
            if clash:
                return Violation("unstable", i, v, other=(clash & -clash).bit_length() - 1)
            for j in range(1, i):
                if not adj[v] & masks[j - 1]:
                    return Violation("undominated", i, v, j)
    return None


def is_greedy_partition(g: Graph, partition: GreedyPartition | Sequence[Iterable[int]]) -> bool:
    return find_violation(g, partition) is None


def check_partition(g: Graph, partition: GreedyPartition) -> GreedyPartition:
    """Return ``partition`` unchanged or raise with the first violation."""
    bad = find_violation(g, partition)
    if bad is not None:
        raise PartitionError(str(bad))
    return partition


def first_fit_partition(g: Graph, within: int) -> list[int]:
    """Greedy partition of the subgraph on ``within`` using increasing vertex order."""
    classes: list[int] = []
    adj = g.adj
    for v in members(within):
        for i, cls in enumerate(classes):
            if not adj[v] & cls:
                classes[i] = cls | (1 << v)
                break
        else:
            classes.append(1 << v)
    return classes


def extend_partition(g: Graph, partition: GreedyPartition) -> GreedyPartition:
    """Extend a greedy partition of an induced subgraph to all of ``g``.

    The covered vertices are first-fit coloured class by class (which
    reproduces their classes exactly), then the rest in increasing id order.
    """
    check_partition(g, partition)
    order = [v for cls in partition.classes for v in sorted(cls)]
    covered = mask_of(order)
    order += [v for v in range(g.n) if not covered >> v & 1]
    colors, _ = greedy_color(g, order)
    return partition_of(g, colors)


# -- maximal stable sets ---------------------------------------------------------------


def _mis_masks(adj: Sequence[int], within: int) -> list[int]:
    """All maximal stable sets of the subgraph on ``within``, ascending by mask value."""
    out: list[int] = []
    # Bron-Kerbosch with pivoting on the complement: cand/excl hold vertices
    # non-adjacent to everything chosen so far.
    stack = [(0, within, 0)]
    while stack:
        chosen, cand, excl = stack.pop()
        if not cand:
            if not excl:
                out.append(chosen)
            continue
        # pivot minimises the number of branches |cand & N[u]|
        pool = cand | excl
        best = -1
        best_cnt = 1 << 30
        while pool:
            low = pool & -pool
            u = low.bit_length() - 1
            cnt = (cand & (adj[u] | low)).bit_count()
            if cnt < best_cnt:
                best, best_cnt = u, cnt
                if cnt <= 1:
                    break
            pool ^= low
        branch = cand & (adj[best] | (1 << best))
        while branch:
            low = branch & -branch
            v = low.bit_length() - 1
            keep = ~(adj[v] | low)
            stack.append((chosen | low, cand & keep, excl & keep))
            cand &= ~low
            excl |= low
            branch ^= low
    out.sort()
    return out


def maximal_independent_sets(g: Graph, within: Iterable[int] | None = None) -> Iterator[frozenset[int]]:
    """Every inclusion-maximal stable set, once each, ordered by bit-row value."""
    mask = g.all_mask if within is None else mask_of(within)
    for m in _mis_masks(g.adj, mask):
        yield frozenset(members(m))


# -- bounds -------------------------------------------------------------------------------


def degree_bound(adj: Sequence[int], within: int) -> int:
    """Upper bound on the Grundy number of the subgraph on ``within``.

    Class ``j`` of a greedy partition holds a vertex of degree at least
    ``j - 1``, so the ``i``-th largest degree must be at least ``k - i``.
    """
    degs = sorted(((adj[v] & within).bit_count() for v in members(within)), reverse=True)
    best = 0
    run = 1 << 30
    for i, d in enumerate(degs, 1):
        run = min(run, d + i)
        if run < i:
            break
        best = i
    return best


def edge_degree_bound(adj: Sequence[int], within: int) -> int:
    """``1 + max`` over edges ``uv`` of ``min(deg u, deg v)`` inside ``within``.

    The top-class vertex and its neighbour in the class below both need
    degree at least ``k - 1``.
    """
    deg = {v: (adj[v] & within).bit_count() for v in members(within)}
    best = 0
    for v, d in deg.items():
        if d <= best:
            continue
        top = max((deg[u] for u in members(adj[v] & within)), default=0)
        best = max(best, min(d, top))
    return best + 1 if within else 0


def _false_twin(adj: Sequence[int], within: int) -> tuple[int, int] | None:
    """A pair ``(v, w)``, ``w < v``, with equal neighbourhoods inside ``within``."""
    seen: dict[int, int] = {}
    for v in members(within):
        key = adj[v] & within
        w = seen.get(key)
        if w is not None:
            return v, w
        seen[key] = v
    return None


def _shadowed_true_twins(adj: Sequence[int], within: int) -> int:
    """Vertices with a smaller true twin (same closed neighbourhood) inside ``within``.

    Swapping two true twins is an automorphism, so a stable set using the
    larger one is equivalent to the same set using the smaller one.
    """
    seen: set[int] = set()
    out = 0
    for v in members(within):
        key = (adj[v] | (1 << v)) & within
        if key in seen:
            out |= 1 << v
        else:
            seen.add(key)
    return out


def sandwich_upper(g: Graph) -> int:
    return g.max_degree() + 1 if g.n else 0


# -- exact Grundy number ----------------------------------------------------------------


class GrundySolver:
    """Exact Grundy number of one graph via memoised maximal-stable-set recursion.

    A single solver instance keeps its memo across queries, so asking
    ``at_least(k)`` for increasing ``k`` reuses earlier work.
    """

    def __init__(self, g: Graph, max_n: int | None = GRUNDY_MAX_N, timeout: float | None = None):
        if max_n is not None and g.n > max_n:
            raise InstanceTooLarge(f"Grundy solver cap is {max_n} vertices, graph has {g.n}")
        self.g = g
        self.adj = g.adj
        self.lb: dict[int, int] = {}
        self.ub: dict[int, int] = {}
        self.choice: dict[int, tuple[str, object]] = {}
        self.nodes = 0
        self.deadline = None if timeout is None else time.monotonic() + timeout

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and not self.nodes & 1023 and time.monotonic() > self.deadline:
            raise SolverTimeout(f"Grundy solver exceeded its time budget after {self.nodes} nodes")

    def _at_least(self, u: int, k: int) -> bool:
        if k <= 0:
            return True
        if not u:
            return False
        if k == 1:
            return True
        if self.lb.get(u, 0) >= k:
            return True
        hi = self.ub.get(u)
        if hi is None:
            hi = min(degree_bound(self.adj, u), edge_degree_bound(self.adj, u))
            self.ub[u] = hi
        if hi < k:
            return False
        self._tick()
        # false twins always share a class, so one of them can be dropped
        twin = _false_twin(self.adj, u)
        if twin is not None:
            found = self._at_least(u & ~(1 << twin[0]), k)
            if found:
                self.lb[u] = k
                self.choice[u] = ("twin", twin)
            else:
                self.ub[u] = k - 1
            return found
        comps = self.g.component_masks(u)
        if len(comps) > 1:
            for c in comps:
                if self._at_least(c, k):
                    self.lb[u] = max(self.lb.get(c, k), k)
                    self.choice[u] = ("split", comps)
                    return True
            self.ub[u] = k - 1
            return False
        shadowed = _shadowed_true_twins(self.adj, u)
        for m in _mis_masks(self.adj, u):
            if m & shadowed:
                continue
            if self._at_least(u & ~m, k - 1):
                self.lb[u] = k
                self.choice[u] = ("mis", m)
                return True
        self.ub[u] = k - 1
        return False

    def at_least(self, k: int, within: int | None = None) -> bool:
        """Decide whether the (sub)graph has a greedy partition with at least ``k`` classes."""
        u = self.g.all_mask if within is None else within
        return self._at_least(u, k)

    def upper_bound(self, within: int | None = None) -> int:
        u = self.g.all_mask if within is None else within
        return self.ub.get(u, min(degree_bound(self.adj, u), edge_degree_bound(self.adj, u)))

    def solve(self, within: int | None = None) -> tuple[int, GreedyPartition]:
        u = self.g.all_mask if within is None else within
        if not u:
            return 0, GreedyPartition(())
        k = 1
        while self._at_least(u, k + 1):
            k += 1
        witness = self._rebuild(u)
        if len(witness) != k:
            raise SolverError(f"witness has {len(witness)} classes, expected {k}")
        return k, GreedyPartition(members(c) for c in witness)

    def _rebuild(self, u: int) -> list[int]:
        if not u:
            return []
        entry = self.choice.get(u)
        if entry is None:
            return first_fit_partition(self.g, u)
        kind, data = entry
        if kind == "mis":
            return [data] + self._rebuild(u & ~data)
        if kind == "twin":
            v, w = data
            part = self._rebuild(u & ~(1 << v))
            return [c | (1 << v) if c >> w & 1 else c for c in part]
        merged: list[int] = []
        for c in data:
            part = self._rebuild(c)
            for i, cls in enumerate(part):
                if i < len(merged):
                    merged[i] |= cls
                else:
                    merged.append(cls)
        return merged


def grundy_number(g: Graph, max_n: int | None = GRUNDY_MAX_N, timeout: float | None = None) -> tuple[int, GreedyPartition]:
    """Exact Grundy number with a greedy witness partition.

    Ties between optimal first classes are broken by taking the smallest
    maximal stable set (as a bit row) that still reaches the optimum.
    """
    k, witness = GrundySolver(g, max_n, timeout).solve()
    check_partition(g, witness)
    return k, witness


def grundy_at_least(g: Graph, k: int, max_n: int | None = GRUNDY_MAX_N, timeout: float | None = None) -> bool:
    return GrundySolver(g, max_n, timeout).at_least(k)


def iter_greedy_partitions(g: Graph, k: int, max_n: int | None = GRUNDY_MAX_N) -> Iterator[GreedyPartition]:
    """Lazily yield every greedy partition of ``V(g)`` with exactly ``k`` classes.

    Branches that cannot reach exactly ``k`` classes are pruned with the
    exact solver, so this stays usable well beyond the plain enumeration cap
    when ``k`` is close to the Grundy number.
    """
    solver = GrundySolver(g, max_n)
    adj = g.adj

    def rec(u: int, need: int) -> Iterator[list[int]]:
        if not u:
            if need == 0:
                yield []
            return
        if need <= 0:
            return
        for m in _mis_masks(adj, u):
            rest = u & ~m
            if not solver.at_least(need - 1, rest):
                continue
            if need - 1 == 0 and rest:
                continue
            for tail in rec(rest, need - 1):
                yield [m] + tail

    # a partition of V with more classes than needed exists iff Gamma > k;
    # the recursion above only ever finishes with exactly k classes
    for part in rec(g.all_mask, k):
        yield GreedyPartition(members(c) for c in part)


def grundy_by_orderings(g: Graph, max_n: int = ORDERING_MAX_N) -> int:
    """Brute-force Grundy number: run first-fit over every vertex ordering."""
    if g.n > max_n:
        raise InstanceTooLarge(f"ordering oracle cap is {max_n} vertices, graph has {g.n}")
    if g.n == 0:
        return 0
    return max(greedy_color(g, order)[1] for order in permutations(range(g.n)))


def enumerate_greedy_partitions(g: Graph, max_n: int = ENUMERATE_MAX_N) -> Iterator[GreedyPartition]:
    """Every greedy partition of ``V(g)``, each exactly once."""
    if g.n > max_n:
        raise InstanceTooLarge(f"enumeration cap is {max_n} vertices, graph has {g.n}")
    adj = g.adj

    def rec(u: int) -> Iterator[list[int]]:
        if not u:
            yield []
            return
        for m in _mis_masks(adj, u):
            for rest in rec(u & ~m):
                yield [m] + rest

    for part in rec(g.all_mask):
        yield GreedyPartition(members(c) for c in part)


def dominate_extend(g: Graph, partition: GreedyPartition, s: Iterable[int]) -> GreedyPartition:
    """Put the stable set ``s`` in front of ``partition`` as a new first class.

    Every vertex covered by ``partition`` must have a neighbour in ``s``.
    """
    s_mask = mask_of(s)
    w_mask = mask_of(partition.domain)
    if s_mask >> g.n or w_mask >> g.n:
        raise PartitionError("vertex set outside the graph")
    if not s_mask:
        raise PartitionError("dominating set is empty")
    if s_mask & w_mask:
        raise PartitionError(f"stable set overlaps the partitioned vertices at {sorted(members(s_mask & w_mask))}")
    if not g.is_stable(s_mask):
        raise PartitionError("the new class is not stable")
    for v in members(w_mask):
        if not g.adj[v] & s_mask:
            raise PartitionError(f"vertex {v} has no neighbour in the new class")
    check_partition(g, partition)
    return GreedyPartition((frozenset(members(s_mask)),) + partition.classes)


# -- clique number ------------------------------------------------------------------------


def clique_number(g: Graph, max_n: int | None = CHROMATIC_MAX_N) -> int:
    """Maximum clique size by branch and bound with a greedy colouring bound."""
    if max_n is not None and g.n > max_n:
        raise InstanceTooLarge(f"clique solver cap is {max_n} vertices, graph has {g.n}")
    adj = g.adj
    best = 0

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # returns (vertex, colour) pairs in non-decreasing colour order
        order = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append((v, color))
                rest &= ~low
                avail &= ~(adj[v] | low)
        return order

    def expand(size: int, cand: int) -> None:
        nonlocal best
        order = color_bound(cand)
        for v, c in reversed(order):
            if size + c <= best:
                return
            nxt = cand & adj[v]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    if g.n:
        expand(0, g.all_mask)
    return best


# -- chromatic number ------------------------------------------------------------------------


def _k_colorable(adj: Sequence[int], n: int, k: int) -> list[int] | None:
    """DSATUR-ordered backtracking; returns a proper ``k``-colouring or ``None``."""
    colors = [0] * n
    forbidden = [0] * n  # bit c set if colour c appears on a neighbour

    def pick() -> int:
        best, best_key = -1, (-1, -1)
        for v in range(n):
            if colors[v]:
                continue
            key = (forbidden[v].bit_count(), adj[v].bit_count())
            if key > best_key:
                best, best_key = v, key
        return best

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        # symmetry: a brand-new colour is only ever tried as colour used+1
        for c in range(1, min(used + 1, k) + 1):
            if forbidden[v] >> c & 1:
                continue
            colors[v] = c
            touched = []
            for u in members(adj[v]):
                if not forbidden[u] >> c & 1:
                    forbidden[u] |= 1 << c
                    touched.append(u)
            if rec(done + 1, max(used, c)):
                return True
            for u in touched:
                forbidden[u] &= ~(1 << c)
            colors[v] = 0
        return False

    return colors if rec(0, 0) else None


def chromatic_number(g: Graph, max_n: int | None = CHROMATIC_MAX_N) -> int:
    """Least ``k`` with a proper ``k``-colouring (iterative deepening from the clique number)."""
    if max_n is not None and g.n > max_n:
        raise InstanceTooLarge(f"chromatic solver cap is {max_n} vertices, graph has {g.n}")
    if g.n == 0:
        return 0
    k = max(clique_number(g, None), 1)
    while _k_colorable(g.adj, g.n, k) is None:
        k += 1
    return k


def optimal_coloring(g: Graph) -> list[int]:
    """A proper colouring with ``chromatic_number(g)`` colours."""
    if g.n == 0:
        return []
    k = chromatic_number(g)
    colors = _k_colorable(g.adj, g.n, k)
    assert colors is not None
    return colors


# -- binomial trees -------------------------------------------------------------------

TREE_SEARCH_MAX_N = 64


def find_induced_binomial_tree(g: Graph, k: int, max_n: int | None = TREE_SEARCH_MAX_N) -> frozenset[int] | None:
    """Vertex set inducing the binomial tree ``T_k``, or ``None`` if there is none.

    The first embedding in increasing host-id order is returned, so the
    answer is deterministic.
    """
    from .constructions import binomial_tree
    from .iso import find_induced_copy

    if k < 1:
        raise GraphError(f"binomial tree index must be at least 1, got {k}")
    if max_n is not None and g.n > max_n:
        raise InstanceTooLarge(f"tree search capped at {max_n} vertices, graph has {g.n}")
    hit = find_induced_copy(binomial_tree(k), g)
    return None if hit is None else frozenset(hit.values())
