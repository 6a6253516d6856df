"""Enumerate small base graphs H and record the WLP verdict for w(H)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Iterator

from .complexes import independence_complex
from .graphs import Graph, make_graph, whisker
from .io import graph6
from .lefschetz import analyze_wlp

EXHAUSTIVE_LIMIT = 6


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All labeled graphs on n vertices, by bit mask over the upper-triangular pairs."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield make_graph(n, [e for k, e in enumerate(pairs) if bits >> k & 1])


def random_graph(n: int, rng: random.Random, density: float | None = None) -> Graph:
    q = rng.random() if density is None else density
    return make_graph(n, [e for e in combinations(range(n), 2) if rng.random() < q])


def canonical_key(G: Graph) -> tuple:
    """Isomorphism-invariant key for caching verdicts.

    Vertices are first bucketed by degree; only permutations inside a bucket
    are tried, and the lexicographically smallest relabeled edge list wins.
    """
    degs = [G.degree(v) for v in range(G.n)]
    buckets: dict[int, list[int]] = {}
    for v in range(G.n):
        buckets.setdefault(degs[v], []).append(v)
    order = sorted(buckets)
    best = None
    for perms in product(*(permutations(buckets[d]) for d in order)):
        relabel = {}
        pos = 0
        for perm in perms:
            for v in perm:
                relabel[v] = pos
                pos += 1
        edges = tuple(sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in G.edges))
        if best is None or edges < best:
            best = edges
    return (G.n, tuple(sorted(degs)), best)


@dataclass
class Finding:
    graph: Graph
    code: str
    has_wlp: bool
    failing: list[int]
    cached: bool

    def to_dict(self) -> dict:
        return {"graph6": self.code, "n": self.graph.n,
                "edges": [list(e) for e in self.graph.sorted_edges()],
                "wlp": self.has_wlp, "failing": self.failing}

    def line(self) -> str:
        verdict = "WLP" if self.has_wlp else "no-WLP"
        fail = ",".join(map(str, self.failing)) or "-"
        return f"{self.code}\tn={self.graph.n}\tm={self.graph.num_edges()}\t{verdict}\tfailing={fail}"


def search(max_n: int, p: int = 0, *, samples: int = 0, seed: int | None = 0,
           method: str = "auto", min_n: int = 1,
           include: Iterable[Graph] = ()) -> Iterator[Finding]:
    """Stream WLP verdicts for w(H).

    Exhaustive over labeled graphs with ``min_n <= n <= min(max_n, 6)``;
    for ``max_n > 6`` additionally ``samples`` random graphs per larger n.
    Graphs in ``include`` are checked first, whatever their size.
    """
    cache: dict[tuple, tuple[bool, list[int]]] = {}
    rng = random.Random(seed)

    def visit(H: Graph) -> Finding:
        key = canonical_key(H)
        hit = key in cache
        if not hit:
            rep = analyze_wlp(independence_complex(whisker(H)), p, method=method, seed=seed)
            cache[key] = (rep.has_wlp, rep.failing_degrees)
        wlp, failing = cache[key]
        return Finding(H, graph6(H), wlp, list(failing), hit)

    for H in include:
        yield visit(H)
    for n in range(min_n, min(max_n, EXHAUSTIVE_LIMIT) + 1):
        for H in labeled_graphs(n):
            yield visit(H)
    for n in range(max(min_n, EXHAUSTIVE_LIMIT + 1), max_n + 1):
        for _ in range(samples):
            yield visit(random_graph(n, rng))
