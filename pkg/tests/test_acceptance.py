"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py -s`` to see the lines as they are
produced; a summary section is printed at the end of every run either way.
"""

import json
import time

import pytest

from grundylab.bounds import cart_upper, cart_upper_bipartite, direct_lower, lex_lower, lex_upper
from grundylab.coloring import (
    chromatic_number,
    clique_number,
    find_induced_binomial_tree,
    grundy_at_least,
    grundy_by_orderings,
    grundy_number,
    is_greedy_partition,
    partition_of,
)
from grundylab.constructions import (
    binomial_tree,
    blownup_clique,
    complete,
    complete_bipartite,
    cycle,
    g3_lex_witness,
    graph_g3,
    hypercube,
    jellyfished,
    path,
    psi_lift,
    search_g3,
    star,
)
from grundylab.corpus import connected_graphs, graphs_of_order, is_complete_bipartite
from grundylab.products import cartesian_product, direct_product, lex_product
from grundylab.report import reports_to_json
from grundylab.sweep import RandomModel, conjecture_findings, derive_seed, random_graph
from grundylab.witnesses import lift_coloring_intervals, lift_pendant_copy, witness_kpp_cartesian


def gamma(g):
    return grundy_number(g, max_n=None)[0]


def at_least(g, k):
    return grundy_at_least(g, k, max_n=None)


def random_pairs(seed, count, max_g, max_h, p=0.5, need_edges=False):
    """Deterministic factor pairs; orders are drawn from ``1..max`` (``2..max`` with edges)."""
    low = 2 if need_edges else 1
    out = []
    for i in range(count):
        attempt = 0
        while True:
            s = derive_seed(seed, i, attempt)
            ng = low + s % (max_g - low + 1)
            nh = low + (s >> 16) % (max_h - low + 1)
            g = random_graph(RandomModel(ng, p, derive_seed(s, 0)))
            h = random_graph(RandomModel(nh, p, derive_seed(s, 1)))
            if not need_edges or (g.num_edges and h.num_edges):
                break
            attempt += 1
        out.append((g, h))
    return out


class Tally:
    """Collects named sub-checks so a failing line says which ones broke."""

    def __init__(self):
        self.failed = []
        self.count = 0
        self.start = time.perf_counter()

    def expect(self, ok, label):
        self.count += 1
        if not ok:
            self.failed.append(label)

    @property
    def elapsed(self):
        return time.perf_counter() - self.start

    def detail(self, extra=""):
        head = f"{self.count} checks"
        if self.failed:
            head += f", failed: {', '.join(self.failed[:6])}"
        return f"{head}; {extra}" if extra else head


def finish(criterion, number, title, tally, limit, extra=""):
    ok = not tally.failed and tally.elapsed < limit
    criterion(number, title, ok, tally.elapsed, limit, tally.detail(extra))
    assert not tally.failed, tally.detail()
    assert tally.elapsed < limit


def test_criterion_01_sandwich_chain(criterion):
    t = Tally()
    for p in (0.2, 0.5, 0.8):
        for i in range(500):
            g = random_graph(RandomModel(7, p, derive_seed(101, int(p * 10), i)))
            w, c, k = clique_number(g), chromatic_number(g), gamma(g)
            t.expect(w <= c <= k <= g.max_degree() + 1, f"p={p} i={i}")
    finish(criterion, 1, "sandwich chain on 1500 random graphs (n=7, 500 per p)", t, 30)


@pytest.mark.xfail(strict=True, reason="a single vertex has chromatic number 1, so chi(T_1) = 2 cannot hold")
def test_criterion_02_small_values_as_stated(criterion):
    t = Tally()
    t.expect(gamma(path(4)) == 3, "Gamma(P4)")
    t.expect(gamma(cycle(4)) == 2, "Gamma(C4)")
    for k in range(1, 6):
        tree = binomial_tree(k)
        t.expect(gamma(tree) == k, f"Gamma(T{k})")
        t.expect(chromatic_number(tree) == 2, f"chi(T{k})={chromatic_number(tree)}")
    finish(criterion, 2, "Gamma(P4), Gamma(C4); Gamma(T_k)=k and chi(T_k)=2 for k=1..5", t, 5)


def test_criterion_02_attainable_part(criterion):
    t = Tally()
    t.expect(gamma(path(4)) == 3, "Gamma(P4)")
    t.expect(gamma(cycle(4)) == 2, "Gamma(C4)")
    for k in range(1, 6):
        t.expect(gamma(binomial_tree(k)) == k, f"Gamma(T{k})")
    for k in range(2, 6):
        t.expect(chromatic_number(binomial_tree(k)) == 2, f"chi(T{k})")
    t.expect(chromatic_number(binomial_tree(1)) == 1, "chi(T1)")
    finish(criterion, "2*", "same values with chi(T_1)=1 in place of 2", t, 5)


def test_criterion_03_complete_bipartite(criterion):
    t = Tally()
    for p in range(1, 5):
        t.expect(gamma(complete_bipartite(p, p)) == 2, f"K{p},{p}")
    corpus = connected_graphs(7)
    for g in corpus:
        t.expect((gamma(g) == 2) == is_complete_bipartite(g), f"{g}")
    finish(criterion, 3, "Gamma(K_pp)=2; Gamma=2 iff complete bipartite, connected n<=7", t, 60,
           f"{len(corpus)} connected graphs")


def test_criterion_04_ordering_oracle(criterion):
    t = Tally()
    corpus = graphs_of_order(7)
    t.expect(len(corpus) == 1044, "atlas size")
    for idx, g in enumerate(corpus):
        t.expect(gamma(g) == grundy_by_orderings(g), f"graph {idx}")
    finish(criterion, 4, "exact solver equals max over all 7! orderings, all 1044 graphs", t, 300)


def test_criterion_05_lexicographic(criterion):
    t = Tally()
    factors = {"T3": binomial_tree(3), "T4": binomial_tree(4), "C5": cycle(5)}
    for gname, g in factors.items():
        for hname, h in (("K2", complete(2)), ("P3", path(3))):
            lay = lex_product(g, h)
            if lay.product.n > 16:
                continue
            t.expect(gamma(lay.product) == gamma(g) * gamma(h), f"{gname}[{hname}]")
    for i, (g, h) in enumerate(random_pairs(505, 120, 5, 4)):
        k, l = gamma(g), gamma(h)
        prod = lex_product(g, h).product
        t.expect(at_least(prod, lex_lower(k, l)), f"lower pair {i}")
        t.expect(not at_least(prod, lex_upper(k, l) + 1), f"upper pair {i}")
    finish(criterion, 5, "lexicographic equalities and bounds on 120 random pairs", t, 120)


def test_criterion_06_g3_reconstruction(criterion):
    t = Tally()
    g, cert = search_g3()
    search_time = t.elapsed
    t.expect(g == graph_g3(), "search reproduces fixture")
    t.expect(g.n == 8 and gamma(g) == 3, "order and Gamma")
    heavy = [v for v in range(g.n) if g.degree(v) == 3]
    t.expect(len(heavy) == 2 and g.has_edge(*heavy) and g.max_degree() == 3, "two adjacent degree-3 vertices")
    t.expect(gamma(lex_product(g, complete(2)).product) == 7, "Gamma(G3[K2]) = 7")
    cert_start = time.perf_counter()
    part, _ = g3_lex_witness()
    lifted = lift_coloring_intervals(g, part.coloring(16), 2)
    target = lex_product(g, complete(4)).product
    t.expect(max(lifted) == 14 and is_greedy_partition(target, partition_of(target, lifted)), "14 classes")
    cert_time = time.perf_counter() - cert_start
    t.expect(search_time < 600 and cert_time < 60, "phase limits")
    finish(criterion, 6, "G3 search, Gamma(G3[K2])=7, 14-class witness on G3[K4]", t, 660,
           f"search {search_time:.2f}s, certification {cert_time:.2f}s")


def test_criterion_07_pendant_lift(criterion):
    t = Tally()
    g = graph_g3()
    part, x = g3_lex_witness()
    colors = lift_pendant_copy(g, part.coloring(16), x, 2)
    target = lex_product(psi_lift(g, x), complete(2)).product
    t.expect(len(colors) == 32 and max(colors) == 9, "9 colours on 32 vertices")
    t.expect(is_greedy_partition(target, partition_of(target, colors)), "checker")
    t.expect(gamma(psi_lift(g, x)) <= 4, "Gamma(psi_lift(G3, x)) <= 4")
    finish(criterion, 7, "pendant-copy lift to 9 colours; Gamma(psi_lift(G3,x)) <= 4", t, 120)


def test_criterion_08_cartesian_values(criterion):
    t = Tally()
    cases = [("Q3", hypercube(3), 4), ("Q4", hypercube(4), 5)]
    cases += [(f"K{p}□K{p}", cartesian_product(complete(p), complete(p)).product, 2 * p - 2) for p in (2, 3, 4)]
    cases += [(f"K{n}□K{k}[S{n}]", cartesian_product(complete(n), blownup_clique(k, n)).product, n * k)
              for n, k in ((2, 2), (2, 3), (3, 2))]
    cases += [("P3□K2", cartesian_product(path(3), complete(2)).product, 4),
              ("C3□K2", cartesian_product(cycle(3), complete(2)).product, 4),
              ("P4□P4", cartesian_product(path(4), path(4)).product, 5),
              ("K3□K3", cartesian_product(complete(3), complete(3)).product, 4),
              ("K1,2□K3,3", cartesian_product(star(2), complete_bipartite(3, 3)).product, 5)]
    slowest = ("", 0.0)
    for name, g, want in cases:
        start = time.perf_counter()
        got = gamma(g)
        spent = time.perf_counter() - start
        limit = 600 if name == "K4□K4" else 120
        t.expect(got == want and spent < limit, f"{name}: {got} != {want}" if got != want else f"{name} slow")
        slowest = max(slowest, (name, spent), key=lambda s: s[1])
    finish(criterion, 8, "Cartesian exact values (13 instances)", t, 600 + 120 * 12,
           f"slowest {slowest[0]} {slowest[1]:.2f}s")


def test_criterion_09_kpp_witnesses(criterion):
    t = Tally()
    for p in (2, 3):
        lay, part = witness_kpp_cartesian(p)
        t.expect(len(part) == p + 1 and is_greedy_partition(lay.product, part), f"p={p}")
    k22 = complete_bipartite(2, 2)
    t.expect(at_least(cartesian_product(k22, k22).product, 3), "exact Gamma >= 3 at p=2")
    finish(criterion, 9, "K_pp □ K_pp witnesses with p+1 classes", t, 60,
           f"exact Gamma(K22□K22) = {gamma(cartesian_product(k22, k22).product)}")


def test_criterion_10_cartesian_bounds(criterion):
    t = Tally()
    for i, (g, h) in enumerate(random_pairs(1010, 60, 6, 5)):
        bound = cart_upper(g.max_degree(), gamma(h))
        t.expect(not at_least(cartesian_product(g, h).product, bound + 1), f"upper pair {i}")
    for i, (g, _) in enumerate(random_pairs(1020, 30, 5, 1)):
        for h in (complete_bipartite(2, 2), complete_bipartite(3, 3)):
            bound = cart_upper_bipartite(g)
            t.expect(not at_least(cartesian_product(g, h).product, bound + 1), f"bipartite pair {i} H={h.n}")
    applicable = 0
    for i, (g, h) in enumerate(random_pairs(1030, 80, 5, 4)):
        if chromatic_number(h) <= g.max_degree():
            applicable += 1
            t.expect(at_least(cartesian_product(g, h).product, gamma(h) + 1), f"chi pair {i}")
    k44 = complete_bipartite(4, 4)
    t.expect(at_least(cartesian_product(k44, complete(2)).product, 4), "Gamma(K44□K2) >= 4")
    finish(criterion, 10, "Cartesian upper bounds, bipartite bound, chi lower bound, K44□K2", t, 300,
           f"{applicable} pairs met the chi hypothesis")


def test_criterion_11_direct(criterion):
    t = Tally()
    k3k2 = direct_product(complete(3), complete(2)).product
    t.expect(gamma(k3k2) == 3 == gamma(cycle(6)), "K3 x K2")
    for k in (3, 4, 5):
        t.expect(gamma(direct_product(complete(k), complete(2)).product) == k, f"K{k} x K2")
    for a, b in ((path(4), path(4)), (path(4), cycle(3)), (cycle(3), cycle(3))):
        t.expect(gamma(direct_product(a, b).product) == 4, f"{a} x {b}")
    for i, (g, h) in enumerate(random_pairs(1111, 200, 6, 6, need_edges=True)):
        t.expect(at_least(direct_product(g, h).product, direct_lower(gamma(g), gamma(h))), f"pair {i}")
    finish(criterion, 11, "direct product values and lower bound on 200 random pairs", t, 300)


def test_criterion_12_jellyfish(criterion):
    t = Tally()
    for name, g in (("K1", complete(1)), ("K2", complete(2)), ("C3", cycle(3))):
        t.expect(gamma(jellyfished(g)) == gamma(g) + 2, f"J({name})")
    g3k2 = direct_product(graph_g3(), complete(2)).product
    t.expect(gamma(g3k2) == 4, "Gamma(G3 x K2) = 4")
    t.expect(find_induced_binomial_tree(g3k2, 4) is not None, "T4 in G3 x K2")
    finish(criterion, 12, "jellyfish raises Gamma by 2; Gamma(G3 x K2)=4 with an induced T4", t, 600)


def test_criterion_13_conjecture_determinism(criterion):
    t = Tally()
    first = reports_to_json(conjecture_findings())
    second = reports_to_json(conjecture_findings())
    t.expect(first == second, "byte-identical")
    data = json.loads(first)
    t.expect([r["claim_id"] for r in data] == ["CONJ27_CART_LINEAR", "CONJ28_CLIQUE_FACTOR", "CONJ29_CART_MAXDEG"],
             "three reports")
    t.expect(all(r["conjecture"] for r in data), "conjecture flag")
    findings = {r["claim_id"]: r["counts"]["finding"] for r in data}
    instances = sum(len(r["instances"]) for r in data)
    finish(criterion, 13, "conjecture findings complete and byte-identical across runs", t, 600,
           f"{instances} instances, findings {findings}")
