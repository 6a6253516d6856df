"""Finite simple graphs on bit-mask vertex sets, generators and whiskering.

Vertices are integers ``0 .. n-1``.  A whiskered graph ``w(H)`` with
``|V(H)| = n`` maps ``x_i`` to ``i - 1`` and ``y_i`` to ``n + i - 1``; this
labeling is fixed everywhere so matrix orderings are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graph input (loops, bad endpoints, bad sizes)."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


@dataclass(frozen=True)
class Graph:
    """Immutable labeled simple graph.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``.  ``labels`` are
    display names only and do not take part in equality.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[str, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.n))
        if len(self.labels) != self.n:
            raise GraphError(f"expected {self.n} labels, got {len(self.labels)}")

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood bit mask of each vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return vertices_of(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def relabel(self, labels: Sequence[str]) -> "Graph":
        return Graph(self.n, self.edges, tuple(labels))


def make_graph(n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] = (), *,
               max_vertices: int | None = MAX_VERTICES) -> Graph:
    """Build a graph, normalizing and deduplicating the edge list.

    ``max_vertices`` caps input graphs; derived graphs such as dual graphs pass None.
    """
    if not isinstance(n, int) or n < 0:
        raise GraphError(f"vertex count must be a non-negative integer, got {n!r}")
    if max_vertices is not None and n > max_vertices:
        raise GraphError(f"graphs are capped at {max_vertices} vertices, got {n}")
    norm = set()
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge must have two endpoints: {e!r}")
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range [0, {n}): {(u, v)}")
        norm.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(norm), tuple(labels))


def gen_broom(m: int) -> Graph:
    """Broom B_m: the path x1 - x2 - x3 with m extra leaves on x3."""
    if m < 1:
        raise GraphError(f"broom needs m >= 1, got {m}")
    edges = [(0, 1), (1, 2)] + [(2, i) for i in range(3, m + 3)]
    return make_graph(m + 3, edges)


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return make_graph(n, combinations(range(n), 2))


def gen_path(n: int) -> Graph:
    """Path on n vertices (n - 1 edges)."""
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_edgeless(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"edgeless graph needs n >= 1, got {n}")
    return make_graph(n, [])


GENERATORS = {
    "broom": gen_broom,
    "complete": gen_complete,
    "path": gen_path,
    "cycle": gen_cycle,
    "edgeless": gen_edgeless,
}


def from_generator_spec(spec: str) -> Graph:
    """Parse ``name:k`` (e.g. ``broom:5``) into a generated graph."""
    name, sep, arg = spec.partition(":")
    if not sep or name not in GENERATORS:
        raise GraphError(f"unknown generator spec {spec!r}; expected one of "
                         + ", ".join(f"{g}:k" for g in GENERATORS))
    try:
        k = int(arg)
    except ValueError:
        raise GraphError(f"generator parameter must be an integer: {spec!r}") from None
    return GENERATORS[name](k)


def whisker(H: Graph) -> Graph:
    """Attach a pendant vertex y_i to every vertex x_i of ``H``."""
    n = H.n
    if n < 1:
        raise GraphError("cannot whisker the empty graph")
    if 2 * n > MAX_VERTICES:
        raise GraphError(f"whiskered graph would exceed {MAX_VERTICES} vertices")
    edges = list(H.edges) + [(i, n + i) for i in range(n)]
    labels = tuple(f"x{i + 1}" for i in range(n)) + tuple(f"y{i + 1}" for i in range(n))
    return make_graph(2 * n, edges, labels)


def is_independent_set(G: Graph, S: Iterable[int] | int) -> bool:
    """True iff no edge of ``G`` has both endpoints in ``S`` (a mask or iterable)."""
    mask = S if isinstance(S, int) else mask_of(S)
    if mask >> G.n:
        raise GraphError(f"vertex out of range for graph on {G.n} vertices")
    adj = G.adjacency
    rest = mask
    while rest:
        low = rest & -rest
        if adj[low.bit_length() - 1] & mask:
            return False
        rest ^= low
    return True


def complement(G: Graph) -> Graph:
    edges = [(u, v) for u, v in combinations(range(G.n), 2) if (u, v) not in G.edges]
    return Graph(G.n, frozenset(edges), G.labels)


def connected_components(G: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    comps = []
    adj = G.adjacency
    for s in range(G.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in vertices_of(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(vertices_of(comp))
    return comps


@dataclass(frozen=True)
class BipartiteResult:
    """Outcome of a 2-coloring attempt.

    Exactly one witness is set: ``coloring`` (vertex -> 0/1) when bipartite,
    otherwise ``odd_cycle`` as a closed vertex sequence without repetition of
    the start vertex.
    """

    is_bipartite: bool
    coloring: dict[int, int] | None = None
    odd_cycle: list[int] | None = None

    def __bool__(self) -> bool:
        return self.is_bipartite


def _bfs_two_color(G: Graph, vertices: Iterable[int]) -> BipartiteResult:
    adj = G.adjacency
    color: dict[int, int] = {}
    parent: dict[int, int] = {}
    for s in vertices:
        if s in color:
            continue
        color[s] = 0
        parent[s] = -1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in vertices_of(adj[u]):
                if w not in color:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return BipartiteResult(False, odd_cycle=_odd_cycle(parent, u, w))
    return BipartiteResult(True, coloring=color)


def _odd_cycle(parent: dict[int, int], u: int, w: int) -> list[int]:
    # u and w share a color and are adjacent: join their BFS-tree paths.
    path_u = [u]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    path_w = [w]
    while parent[path_w[-1]] != -1:
        path_w.append(parent[path_w[-1]])
    anc_w = set(path_w)
    lca = next(v for v in path_u if v in anc_w)
    left = path_u[: path_u.index(lca) + 1]
    right = path_w[: path_w.index(lca)]
    return left + right[::-1]


def is_bipartite(G: Graph) -> BipartiteResult:
    return _bfs_two_color(G, range(G.n))


def bipartite_components(G: Graph) -> list[tuple[list[int], BipartiteResult]]:
    """Bipartiteness decided separately for each connected component."""
    return [(comp, _bfs_two_color(G, comp)) for comp in connected_components(G)]


def is_odd_cycle(G: Graph, cycle: Sequence[int]) -> bool:
    """Check that ``cycle`` is an odd closed walk of distinct vertices in ``G``."""
    k = len(cycle)
    if k % 2 == 0 or k < 3 or len(set(cycle)) != k:
        return False
    return all(G.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k))


def maximal_independent_sets(G: Graph) -> list[int]:
    """Maximal independent sets of ``G`` as bit masks.

    Bron-Kerbosch with Tomita pivoting, run on the complement: a clique of the
    complement is an independent set of ``G``.
    """
    full = G.vertex_mask
    nbr = [(~G.adjacency[v]) & full & ~(1 << v) for v in range(G.n)]
    out: list[int] = []

    def expand(R: int, P: int, X: int) -> None:
        if not P and not X:
            out.append(R)
            return
        PX = P | X
        pivot = max(vertices_of(PX), key=lambda u: (P & nbr[u]).bit_count())
        cand = P & ~nbr[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(R | low, P & nbr[v], X & nbr[v])
            P &= ~low
            X |= low
            cand ^= low

    if G.n:
        expand(0, full, 0)
    return out
