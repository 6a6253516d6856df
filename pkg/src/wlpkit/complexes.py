"""Simplicial complexes given by facet bit masks.

Faces are generated on demand by upward closure from the empty face, so the
full face poset is never stored.  Face order is ascending lexicographic on
sorted vertex lists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .graphs import (
    Graph,
    default_labels,
    is_bipartite,
    make_graph,
    mask_of,
    maximal_independent_sets,
    connected_components,
    vertices_of,
)


class ComplexError(ValueError):
    pass


def _lex_key(mask: int) -> tuple[int, ...]:
    return tuple(vertices_of(mask))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on ground set ``0 .. n-1`` described by its facets."""

    n: int
    facets: tuple[int, ...]
    labels: tuple[str, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.n))
        facets = sorted(set(self.facets), key=lambda f: (f.bit_count(), _lex_key(f)))
        for F in facets:
            if F < 0 or F >> self.n:
                raise ComplexError(f"facet {vertices_of(F)} leaves ground set of size {self.n}")
        # antichain: drop nothing silently, a contained facet is an input error
        for i, F in enumerate(facets):
            for G in facets[i + 1:]:
                if F & G == F:
                    raise ComplexError(
                        f"facet {vertices_of(F)} is contained in {vertices_of(G)}")
        object.__setattr__(self, "facets", tuple(sorted(facets, key=_lex_key)))

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int]], labels: Sequence[str] = ()):
        """Build from any generating set of faces, keeping the maximal ones."""
        masks = sorted({mask_of(f) for f in faces}, key=int.bit_count, reverse=True)
        maximal: list[int] = []
        for F in masks:
            if not any(F & G == F for G in maximal):
                maximal.append(F)
        return cls(n, tuple(maximal), tuple(labels))

    @cached_property
    def dimension(self) -> int:
        return max((F.bit_count() for F in self.facets), default=0) - 1

    @cached_property
    def _vertex_facets(self) -> tuple[int, ...]:
        # for each vertex, the set of facets (as a bit mask over facet indices) containing it
        vf = [0] * self.n
        for k, F in enumerate(self.facets):
            for v in vertices_of(F):
                vf[v] |= 1 << k
        return tuple(vf)

    @cached_property
    def _levels(self) -> list[list[int]]:
        """Faces grouped by size; ``_levels[k]`` holds the faces with k vertices."""
        vf = self._vertex_facets
        all_facets = (1 << len(self.facets)) - 1
        levels = [[0]]
        carried = [all_facets]
        while True:
            nxt, nxt_carried = [], []
            for F, fs in zip(levels[-1], carried):
                start = F.bit_length()
                for v in range(start, self.n):
                    inter = fs & vf[v]
                    if inter:
                        nxt.append(F | 1 << v)
                        nxt_carried.append(inter)
            if not nxt:
                break
            levels.append(nxt)
            carried = nxt_carried
        return levels

    def faces_of_dim(self, i: int) -> list[int]:
        if i < -1 or i > self.dimension:
            raise ComplexError(f"dimension {i} outside [-1, {self.dimension}]")
        return list(self._levels[i + 1])

    def f_vector(self) -> tuple[int, ...]:
        """``(f_0, ..., f_d)``; the empty face is not counted."""
        return tuple(len(level) for level in self._levels[1:])

    def is_pure(self) -> bool:
        return len({F.bit_count() for F in self.facets}) <= 1

    def contains(self, face: int) -> bool:
        return any(face & F == face for F in self.facets)

    def face_label(self, face: int, sep: str = "") -> str:
        return sep.join(self.labels[v] for v in vertices_of(face)) or "1"


def independence_complex(G: Graph) -> SimplicialComplex:
    return SimplicialComplex(G.n, tuple(maximal_independent_sets(G)), G.labels)


def ridges(D: SimplicialComplex) -> list[tuple[int, list[int]]]:
    """Every (d-1)-face paired with the indices of the facets containing it."""
    if not D.is_pure():
        raise ComplexError("ridges are only defined here for pure complexes")
    incidence: dict[int, list[int]] = {}
    for k, F in enumerate(D.facets):
        for v in vertices_of(F):
            incidence.setdefault(F ^ (1 << v), []).append(k)
    return sorted(incidence.items(), key=lambda item: _lex_key(item[0]))


def dual_graph(D: SimplicialComplex) -> Graph:
    """One vertex per facet (in facet order); facets adjacent iff they share a ridge."""
    edges = set()
    for _, inc in ridges(D):
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                edges.add((inc[a], inc[b]))
    labels = tuple(D.face_label(F, "*") for F in D.facets)
    return make_graph(len(D.facets), edges, labels, max_vertices=None)


def one_skeleton(D: SimplicialComplex) -> Graph:
    edges = [tuple(vertices_of(e)) for e in D.faces_of_dim(1)] if D.dimension >= 1 else []
    return make_graph(D.n, edges, D.labels)


@dataclass
class PseudoManifoldReport:
    is_pure: bool
    dimension: int
    ridge_violations: list[int] = field(default_factory=list)
    is_ridge_connected: bool = False
    disconnected_facets: tuple[int, int] | None = None
    boundary_ridges: list[int] = field(default_factory=list)
    dual_graph: Graph | None = None
    dual_bipartite: bool | None = None

    @property
    def is_pseudomanifold(self) -> bool:
        return self.is_pure and not self.ridge_violations and self.is_ridge_connected

    @property
    def has_boundary(self) -> bool:
        return bool(self.boundary_ridges)

    def __bool__(self) -> bool:
        return self.is_pseudomanifold

    def to_dict(self) -> dict:
        return {
            "is_pseudomanifold": self.is_pseudomanifold,
            "is_pure": self.is_pure,
            "dimension": self.dimension,
            "ridge_violations": [vertices_of(r) for r in self.ridge_violations],
            "is_ridge_connected": self.is_ridge_connected,
            "disconnected_facets": (None if self.disconnected_facets is None
                                    else [vertices_of(F) for F in self.disconnected_facets]),
            "has_boundary": self.has_boundary,
            "boundary_ridges": [vertices_of(r) for r in self.boundary_ridges],
            "dual_graph_edges": (None if self.dual_graph is None
                                 else [list(e) for e in self.dual_graph.sorted_edges()]),
            "dual_bipartite": self.dual_bipartite,
        }


def is_pseudomanifold(D: SimplicialComplex) -> PseudoManifoldReport:
    """Evaluate purity, the two-facets-per-ridge rule, ridge connectivity and boundary.

    The returned report is truthy exactly when ``D`` is a pseudo-manifold.
    """
    if not D.is_pure():
        return PseudoManifoldReport(is_pure=False, dimension=D.dimension)
    inc = ridges(D)
    dual = dual_graph(D)
    comps = connected_components(dual)
    witness = None
    if len(comps) > 1:
        witness = (D.facets[comps[0][0]], D.facets[comps[1][0]])
    return PseudoManifoldReport(
        is_pure=True,
        dimension=D.dimension,
        ridge_violations=[r for r, fs in inc if len(fs) >= 3],
        is_ridge_connected=len(comps) <= 1,
        disconnected_facets=witness,
        boundary_ridges=[r for r, fs in inc if len(fs) == 1],
        dual_graph=dual,
        dual_bipartite=is_bipartite(dual).is_bipartite,
    )


def has_boundary(D: SimplicialComplex) -> bool:
    return any(len(fs) == 1 for _, fs in ridges(D))
