"""Seeded random graphs and the relation catalog checked over them.

Graph ``i`` of a sweep is drawn from the seed ``derive_seed(seed, i)``; its
partner factor for product relations from ``derive_seed(seed, i, 1)``. The
generator visits pairs ``i < j`` in lexicographic order and keeps an edge when
``random.Random(instance_seed).random() < p``, so a given ``(n, p, seed)``
reproduces the same graph on every platform.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .bounds import cart_upper, cart_upper_bipartite, direct_lower, lex_lower, lex_upper
from .coloring import (
    SolverError,
    chromatic_number,
    clique_number,
    greedy_color,
    grundy_at_least,
    grundy_number,
)
from .constructions import complete, complete_bipartite
from .graph import Graph, GraphError, graph_from_edges, write_graph6
from .products import cartesian_product, direct_product, lex_product
from .report import ClaimReport, Instance, check, holds, skipped

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def derive_seed(seed: int, *path: int) -> int:
    s = seed & MASK64
    for k in path:
        s = splitmix64(s ^ splitmix64(k))
    return s


@dataclass(frozen=True)
class RandomModel:
    n: int
    p: float
    seed: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"order must be non-negative, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise GraphError(f"edge probability must lie in [0, 1], got {self.p}")


def random_graph(model: RandomModel) -> Graph:
    rng = random.Random(model.seed & MASK64)
    n = model.n
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < model.p]
    return graph_from_edges(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Random recursive tree: vertex ``v`` attaches to a uniform earlier vertex."""
    rng = random.Random(seed & MASK64)
    return graph_from_edges(n, [(rng.randrange(v), v) for v in range(1, n)])


# -- cached solver calls -----------------------------------------------------------


@lru_cache(maxsize=4096)
def gamma(g: Graph, timeout: float | None = None) -> int:
    return grundy_number(g, max_n=None, timeout=timeout)[0]


@lru_cache(maxsize=4096)
def gamma_at_least(g: Graph, k: int, timeout: float | None = None) -> bool:
    return grundy_at_least(g, k, max_n=None, timeout=timeout)


def _first(g: Graph, m: int) -> Graph:
    """Induced subgraph on the first ``m`` vertices (the whole graph if smaller)."""
    return g if g.n <= m else g.induced(range(m))[0]


# -- relations ---------------------------------------------------------------------


@dataclass(frozen=True)
class Relation:
    name: str
    description: str
    check: Callable[[Graph, Graph, int, float | None], list[Instance]]
    conjecture: bool = False
    max_n: int = 26


def _params(i: int, **graphs: Graph) -> dict:
    out: dict = {"index": i}
    out.update({k: write_graph6(v) for k, v in graphs.items()})
    return out


def _at_least_check(params: dict, g: Graph, target: int, t: float | None) -> Instance:
    """``Gamma(g) >= target`` via the decision search; the exact value is computed only on failure."""
    if gamma_at_least(g, target, t):
        return check(params, ">=", target, target, witness="decision search certified the target")
    return check(params, ">=", target, gamma(g, t))


def _at_most_check(params: dict, g: Graph, bound: int, t: float | None) -> Instance:
    """``Gamma(g) <= bound`` by refuting ``bound + 1``; the exact value is computed only on failure."""
    if not gamma_at_least(g, bound + 1, t):
        return check(params, "<=", bound, bound, witness="decision search refuted bound + 1")
    return check(params, "<=", bound, gamma(g, t))


def _sandwich(g, h, i, t):
    w, c, gm, d = clique_number(g), chromatic_number(g), gamma(g, t), g.max_degree() + 1
    return [holds(_params(i, G=g), w <= c <= gm <= d,
                  {"omega": w, "chi": c, "grundy": gm, "maxdeg_plus_1": d})]


def _induced_monotone(g, h, i, t):
    mask = derive_seed(i, 7) & g.all_mask
    sub, _ = g.induced(mask)
    return [check(_params(i, G=g) | {"subset": sorted(_bits(mask))}, "<=", gamma(g, t), gamma(sub, t))]


def _bits(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def _edge_deletion(g, h, i, t):
    base = gamma(g, t)
    out = []
    for u, v in g.edges():
        val = gamma(g.remove_edge(u, v), t)
        out.append(holds(_params(i, G=g) | {"edge": [u, v]}, base - 1 <= val <= base + 1,
                         {"grundy": base, "grundy_minus_edge": val}))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adj[u] == g.adj[v]:
                out.append(check(_params(i, G=g) | {"twins": [u, v]}, "==", base, gamma(g.remove_vertex(u), t)))
    return out


def _colours_per_copy(lay, colors) -> int:
    return max(len({colors[v] for v in lay.copy_at(a)}) for a in range(lay.n_g))


def _lex_copy_colours(g, h, i, t):
    g, h = _first(g, 5), _first(h, 3)
    lay = lex_product(g, h)
    p = lay.product
    part = grundy_number(p, max_n=None, timeout=t)[1]
    worst = _colours_per_copy(lay, part.coloring(p.n))
    rng = random.Random(derive_seed(i, 10))
    for _ in range(8):
        order = list(range(p.n))
        rng.shuffle(order)
        worst = max(worst, _colours_per_copy(lay, greedy_color(p, order)[0]))
    return [check(_params(i, G=g, H=h), "<=", gamma(h, t), worst)]


def _lex_pair(g, h, i, t):
    g, h = _first(g, 5), _first(h, 3)
    return g, h, gamma(g, t), gamma(h, t), gamma(lex_product(g, h).product, t)


def _lex_lower(g, h, i, t):
    g, h, k, l, val = _lex_pair(g, h, i, t)
    return [check(_params(i, G=g, H=h), ">=", lex_lower(k, l), val)]


def _lex_upper(g, h, i, t):
    g, h, k, l, val = _lex_pair(g, h, i, t)
    return [check(_params(i, G=g, H=h), "<=", lex_upper(k, l), val)]


def _cart_upper(g, h, i, t):
    g, h = _first(g, 6), _first(h, 5)
    bound = cart_upper(g.max_degree(), gamma(h, t)) if g.max_degree() else gamma(h, t)
    return [_at_most_check(_params(i, G=g, H=h), cartesian_product(g, h).product, bound, t)]


def _cart_bipartite(g, h, i, t):
    g = _first(g, 5)
    bound = cart_upper_bipartite(g)
    out = []
    for name, b in (("K22", complete_bipartite(2, 2)), ("K33", complete_bipartite(3, 3))):
        out.append(_at_most_check(_params(i, G=g) | {"H": name}, cartesian_product(g, b).product, bound, t))
    return out


def _cart_lower_chi(g, h, i, t):
    g, h = _first(g, 6), _first(h, 5)
    if chromatic_number(h) > g.max_degree():
        return [holds(_params(i, G=g, H=h) | {"vacuous": True}, True)]
    return [_at_least_check(_params(i, G=g, H=h), cartesian_product(g, h).product, gamma(h, t) + 1, t)]


def _direct_lower(g, h, i, t):
    g, h = _first(g, 6), _first(h, 6)
    if g.num_edges == 0 or h.num_edges == 0:
        return [holds(_params(i, G=g, H=h) | {"vacuous": True}, True)]
    target = direct_lower(gamma(g, t), gamma(h, t))
    return [_at_least_check(_params(i, G=g, H=h), direct_product(g, h).product, target, t)]


def _cart_ratio(g, h, t):
    return gamma(cartesian_product(g, h).product, t)


def _cart_linear(g, h, i, t):
    g, h = _first(g, 5), _first(h, 4)
    val, l = _cart_ratio(g, h, t), gamma(h, t)
    inst = check(_params(i, G=g, H=h), "<=", (g.max_degree() + 1) * l, val, conjecture=True)
    inst.witness = f"ratio {val}/{l} = {val / l:.3f}"
    return [inst]


def _cart_clique(g, h, i, t):
    h = _first(h, 5)
    out = []
    for n in (2, 3):
        val = _cart_ratio(complete(n), h, t)
        out.append(check(_params(i, H=h) | {"n": n}, "<=", n * gamma(h, t), val, conjecture=True))
    return out


def _cart_maxdeg(g, h, i, t):
    g, h = _first(g, 5), _first(h, 4)
    val = _cart_ratio(g, h, t)
    return [check(_params(i, G=g, H=h), "<=", (h.max_degree() + 1) * gamma(g, t), val, conjecture=True)]


RELATIONS: dict[str, Relation] = {r.name: r for r in (
    Relation("sandwich", "omega <= chi <= Gamma <= maxdeg + 1", _sandwich),
    Relation("induced_monotone", "Gamma is monotone under induced subgraphs", _induced_monotone),
    Relation("edge_deletion", "deleting an edge moves Gamma by at most 1; twins can be merged", _edge_deletion, max_n=12),
    Relation("lex_copy_colours", "at most Gamma(H) colours on each copy of H in G[H]", _lex_copy_colours),
    Relation("lex_lower", "Gamma(G[H]) >= Gamma(G) * Gamma(H)", _lex_lower),
    Relation("lex_upper", "Gamma(G[H]) <= 2^(k-1) (l-1) + k", _lex_upper),
    Relation("cart_upper", "Gamma(G □ H) <= maxdeg(G) 2^(Gamma(H)-1) + Gamma(H)", _cart_upper),
    Relation("cart_bipartite", "Gamma(G □ H) <= max_v min(2d+2, 2d1+3) when Gamma(H) = 2", _cart_bipartite),
    Relation("cart_lower_chi", "chi(H) <= maxdeg(G) implies Gamma(G □ H) >= Gamma(H) + 1", _cart_lower_chi),
    Relation("direct_lower", "Gamma(G x H) >= Gamma(G) + Gamma(H) - 2", _direct_lower),
    Relation("cart_linear", "Gamma(G □ H) <= (maxdeg(G) + 1) Gamma(H)", _cart_linear, conjecture=True),
    Relation("cart_clique", "Gamma(K_n □ H) <= n Gamma(H)", _cart_clique, conjecture=True),
    Relation("cart_maxdeg", "Gamma(G □ H) <= (maxdeg(H) + 1) Gamma(G)", _cart_maxdeg, conjecture=True),
)}

# catalog id of the findings report for each conjecture relation
CONJECTURES = {"cart_linear": "CONJ27_CART_LINEAR", "cart_clique": "CONJ28_CLIQUE_FACTOR",
               "cart_maxdeg": "CONJ29_CART_MAXDEG"}

# grid for the conjecture findings report: (n, p) pairs, seed and count per cell
CONJECTURE_GRID = {"cells": [(4, 0.3), (4, 0.6), (5, 0.3), (5, 0.6)], "seed": 2024, "count": 12}


def _resolve(relations: Sequence[str] | None) -> list[Relation]:
    if relations is None or list(relations) == ["all"]:
        return list(RELATIONS.values())
    out = []
    for name in relations:
        if name not in RELATIONS:
            raise KeyError(f"unknown relation {name!r}; choose from {', '.join(RELATIONS)}")
        out.append(RELATIONS[name])
    return out


def _run_one(args: tuple[RandomModel, int, tuple[str, ...], float | None]) -> list[Instance]:
    model, i, names, timeout = args
    g = random_graph(RandomModel(model.n, model.p, derive_seed(model.seed, i)))
    h = random_graph(RandomModel(min(model.n, 6), model.p, derive_seed(model.seed, i, 1)))
    out: list[Instance] = []
    for name in names:
        rel = RELATIONS[name]
        try:
            found = rel.check(g, h, i, timeout)
        except SolverError as exc:
            found = [skipped(_params(i, G=g, H=h), f"{type(exc).__name__}: {exc}")]
        for inst in found:
            inst.params = {"relation": name} | inst.params
        out.extend(found)
    return out


def sweep(model: RandomModel, count: int, relations: Sequence[str] | None = None,
          jobs: int = 1, timeout: float | None = None) -> ClaimReport:
    """Check the selected relations on ``count`` seeded graphs.

    Conjecture relations report violations with status ``finding``; the report
    fails only if a proven relation is violated.
    """
    rels = _resolve(relations)
    for r in rels:
        if model.n > r.max_n:
            raise GraphError(f"relation {r.name} is capped at n = {r.max_n}, model has n = {model.n}")
    names = tuple(r.name for r in rels)
    tasks = [(model, i, names, timeout) for i in range(count)]
    if jobs > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_one, tasks, chunksize=max(1, count // (4 * jobs))))
    else:
        chunks = [_run_one(t) for t in tasks]
    instances = [inst for chunk in chunks for inst in chunk]
    conj = bool(rels) and all(r.conjecture for r in rels)
    title = f"sweep n={model.n} p={model.p} seed={model.seed} count={count}: " + ", ".join(names)
    notes = []
    if any(r.conjecture for r in rels):
        notes.append("conjecture relations: a violation is a finding, a confirmation is not a proof")
    return ClaimReport.from_instances("SWEEP", title, instances, conjecture=conj, notes=notes)


def conjecture_findings(jobs: int = 1, timeout: float | None = None) -> list[ClaimReport]:
    """Run every conjecture relation over ``CONJECTURE_GRID``."""
    out = []
    for name, claim_id in CONJECTURES.items():
        instances: list[Instance] = []
        for n, p in CONJECTURE_GRID["cells"]:
            rep = sweep(RandomModel(n, p, CONJECTURE_GRID["seed"]), CONJECTURE_GRID["count"], [name],
                        jobs=jobs, timeout=timeout)
            for inst in rep.instances:
                inst.params = {"n": n, "p": p} | inst.params
            instances.extend(rep.instances)
        out.append(ClaimReport.from_instances(claim_id, RELATIONS[name].description, instances,
                                              conjecture=True,
                                              notes=["findings semantics: violations are discoveries, not failures"]))
    return out
