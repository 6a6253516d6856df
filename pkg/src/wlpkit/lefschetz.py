"""Maximal-rank verdicts for multiplication by the sum of the variables.

Everything here reduces to ranks of the matrices in :mod:`wlpkit.algebra`.
The combinatorial predicates (degree-one and top-degree criteria, the
injectivity range for level monomial algebras, monotonicity of injectivity
and surjectivity) are evaluated next to the computed ranks so that any
disagreement shows up in the report.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .algebra import GradedAlgebra, build_algebra, mult_matrix, power_mult_matrix, socle
from .complexes import SimplicialComplex, independence_complex, is_pseudomanifold, one_skeleton
from .graphs import Graph, bipartite_components, gen_broom, mask_of, whisker
from .linalg import SpanResult, in_column_span, rank_mod_p, rank_rational


def field_rank(M, p: int = 0, *, method: str = "auto", seed: int | None = 0) -> int:
    """Rank over Q (``p = 0``) or F_p."""
    if p:
        return rank_mod_p(M, p)
    return rank_rational(M, method, seed=seed).rank


@dataclass(frozen=True)
class DegreeMapReport:
    degree: int
    dim_source: int
    dim_target: int
    rank: int

    @property
    def full_rank(self) -> bool:
        return self.rank == min(self.dim_source, self.dim_target)

    @property
    def injective(self) -> bool:
        return self.rank == self.dim_source

    @property
    def surjective(self) -> bool:
        return self.rank == self.dim_target

    def to_dict(self) -> dict:
        return {"i": self.degree, "dims": [self.dim_source, self.dim_target],
                "rank": self.rank, "full": self.full_rank}


@dataclass
class PredicateResult:
    """A combinatorial prediction about one multiplication map.

    ``applicable`` is False when the hypotheses of the criterion fail; then
    ``predicted`` is None.
    """

    name: str
    applicable: bool
    predicted: bool | None = None
    computed: bool | None = None
    witness: dict = field(default_factory=dict)

    @property
    def agrees(self) -> bool | None:
        if not self.applicable or self.computed is None:
            return None
        return self.predicted == self.computed

    def to_dict(self) -> dict:
        return {"applicable": self.applicable, "predicted": self.predicted,
                "computed": self.computed, "agrees": self.agrees, **self.witness}


@dataclass
class WlpReport:
    characteristic: int
    hilbert: tuple[int, ...]
    maps: list[DegreeMapReport]
    is_level: bool
    predicates: dict[str, PredicateResult] = field(default_factory=dict)
    graph: str | None = None

    @property
    def failing_degrees(self) -> list[int]:
        return [m.degree for m in self.maps if not m.full_rank]

    @property
    def has_wlp(self) -> bool:
        return not self.failing_degrees

    @property
    def ranks(self) -> list[int]:
        return [m.rank for m in self.maps]

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "char": self.characteristic,
            "hilbert": list(self.hilbert),
            "maps": [m.to_dict() for m in self.maps],
            "wlp": self.has_wlp,
            "failing": self.failing_degrees,
            "level": self.is_level,
            "predicates": {k: v.to_dict() for k, v in self.predicates.items()},
        }


def degree_reports(A: GradedAlgebra, p: int = 0, *, method: str = "auto",
                   seed: int | None = 0, degrees: Iterable[int] | None = None) -> list[DegreeMapReport]:
    h = A.hilbert
    if degrees is None:
        degrees = range(A.top_degree)
    out = []
    for i in degrees:
        r = field_rank(mult_matrix(A, i), p, method=method, seed=seed)
        out.append(DegreeMapReport(i, h[i], h[i + 1], r))
    return out


def dao_nair_degree1(D: SimplicialComplex) -> PredicateResult:
    """Char 0 prediction for injectivity of x ell : A_1 -> A_2.

    Injective iff f_0 <= f_1 and no connected component of the 1-skeleton is
    bipartite (an isolated vertex counts as a bipartite component).
    """
    f = D.f_vector()
    f0, f1 = f[0], (f[1] if len(f) > 1 else 0)
    comps = bipartite_components(one_skeleton(D))
    bip = [comp for comp, res in comps if res.is_bipartite]
    return PredicateResult(
        "degree1", True, predicted=f0 <= f1 and not bip,
        witness={"f0": f0, "f1": f1, "bipartite_components": bip})


def dao_nair_top(D: SimplicialComplex) -> PredicateResult:
    """Char 0 prediction for maximal rank of A_d -> A_{d+1} on a d-dimensional pseudo-manifold."""
    rep = is_pseudomanifold(D)
    if not rep.is_pseudomanifold:
        return PredicateResult("top", False, witness={"reason": "not a pseudo-manifold"})
    if D.dimension < 1:
        # two points: A_0 -> A_1 is 1 -> 2 and always injective
        return PredicateResult("top", False, witness={"reason": "dimension 0"})
    return PredicateResult(
        "top", True, predicted=rep.has_boundary or not rep.dual_bipartite,
        witness={"has_boundary": rep.has_boundary, "dual_bipartite": rep.dual_bipartite})


@dataclass
class HauselReport:
    applicable: bool
    top_degree: int
    checked: list[int] = field(default_factory=list)
    violations: list[tuple[str, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.applicable and not self.violations

    def to_dict(self) -> dict:
        return {"applicable": self.applicable, "top_degree": self.top_degree,
                "checked": self.checked, "violations": [list(v) for v in self.violations],
                "passed": self.passed}


def hausel_range_check(A: GradedAlgebra, *, seed: int | None = 0) -> HauselReport:
    """For k < t/2 check that x ell^(t-2k): A_k -> A_{t-k} and x ell: A_k -> A_{k+1} are injective (char 0).

    Holds for every level monomial algebra; a violation means a bug.
    """
    t = A.top_degree
    if not socle(A).is_level:
        return HauselReport(False, t)
    rep = HauselReport(True, t)
    h = A.hilbert
    for k in range((t + 1) // 2):
        if 2 * k >= t:
            break
        rep.checked.append(k)
        if rank_rational(power_mult_matrix(A, k, t - 2 * k), seed=seed).rank != h[k]:
            rep.violations.append(("power", k))
        if rank_rational(mult_matrix(A, k), seed=seed).rank != h[k]:
            rep.violations.append(("linear", k))
    return rep


@dataclass
class MonotonicityResult:
    passed: bool
    first_violation: int | None = None
    kind: str | None = None

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return {"passed": self.passed, "first_violation": self.first_violation, "kind": self.kind}


def monotonicity_check(maps: Sequence[DegreeMapReport], is_level: bool) -> MonotonicityResult:
    """Surjectivity must persist upward; for level algebras injectivity must persist downward."""
    ordered = sorted(maps, key=lambda m: m.degree)
    seen_surj = False
    for m in ordered:
        if seen_surj and not m.surjective:
            return MonotonicityResult(False, m.degree, "surjective")
        seen_surj = seen_surj or m.surjective
    if is_level:
        seen_inj = False
        for m in reversed(ordered):
            if seen_inj and not m.injective:
                return MonotonicityResult(False, m.degree, "injective")
            seen_inj = seen_inj or m.injective
    return MonotonicityResult(True)


def analyze_wlp(D: SimplicialComplex, p: int = 0, *, method: str = "auto",
                seed: int | None = 0, graph: str | None = None,
                hausel: bool = False) -> WlpReport:
    """Rank of x ell in every degree over Q (``p = 0``) or F_p, with predicate cross-checks."""
    A = build_algebra(D)
    maps = degree_reports(A, p, method=method, seed=seed)
    level = socle(A).is_level
    report = WlpReport(p, A.hilbert, maps, level, graph=graph)
    by_deg = {m.degree: m for m in maps}

    mono = monotonicity_check(maps, level)
    report.predicates["monotonicity"] = PredicateResult(
        "monotonicity", True, predicted=True, computed=mono.passed, witness=mono.to_dict())
    if p == 0:
        if 1 in by_deg:
            pred = dao_nair_degree1(D)
            pred.computed = by_deg[1].injective
            report.predicates["degree1"] = pred
        top = dao_nair_top(D)
        d = D.dimension
        if top.applicable and d in by_deg:
            top.computed = by_deg[d].full_rank
        report.predicates["top"] = top
        if hausel:
            h = hausel_range_check(A, seed=seed)
            report.predicates["hausel"] = PredicateResult(
                "hausel", h.applicable, predicted=True if h.applicable else None,
                computed=h.passed if h.applicable else None, witness=h.to_dict())
    return report


def whiskered_face(n: int, xs: Iterable[int] = (), ys: Iterable[int] = ()) -> int:
    """Face mask of w(H) from 1-based x- and y-indices."""
    return mask_of([i - 1 for i in xs] + [n + i - 1 for i in ys])


@dataclass
class ConjectureResult:
    m: int
    not_in_image: bool
    face: int
    degree: int
    span: SpanResult

    def __bool__(self) -> bool:
        return self.not_in_image

    def to_dict(self) -> dict:
        return {"m": self.m, "not_in_image": self.not_in_image, "degree": self.degree,
                "certificate_support": (None if self.span.certificate is None
                                        else sum(1 for c in self.span.certificate if c))}


def broom_conjecture_check(m: int, *, seed: int | None = 0) -> ConjectureResult:
    """Is y1*y3*y4*...*y_{m+3} outside the image of x ell : A_{m+1} -> A_{m+2} for w(B_m), over Q?

    The non-membership answer carries an exactly verified certificate; this is
    evidence for a single m, not a proof for all m.
    """
    H = gen_broom(m)
    n = H.n
    A = build_algebra(independence_complex(whisker(H)))
    face = whiskered_face(n, ys=[1] + list(range(3, m + 4)))
    target = A.index(m + 2)
    if face not in target:
        raise AssertionError(f"{A.monomial(face)} is not a face of Ind(w(B_{m}))")
    v = [0] * len(target)
    v[target[face]] = 1
    span = in_column_span(mult_matrix(A, m + 1, as_sparse=True), v, seed=seed)
    return ConjectureResult(m, not span.member, face, m + 1, span)


@dataclass
class CorollaryReport:
    applicable: bool
    characteristic: int
    guaranteed: list[int] = field(default_factory=list)
    maps: list[DegreeMapReport] = field(default_factory=list)
    reason: str | None = None

    @property
    def contradictions(self) -> list[int]:
        return [m.degree for m in self.maps if not m.full_rank]

    @property
    def passed(self) -> bool:
        return self.applicable and not self.contradictions

    def to_dict(self) -> dict:
        return {"applicable": self.applicable, "char": self.characteristic,
                "guaranteed": self.guaranteed, "ranks": [m.to_dict() for m in self.maps],
                "contradictions": self.contradictions, "reason": self.reason}


def guaranteed_degrees(n: int, p: int = 0) -> list[int]:
    """Degrees where x ell has maximal rank for every whiskering of an n-vertex graph with an edge."""
    if p == 0:
        degs = {i for i in range(n) if 2 * i < n} | {n - 1}
    else:
        degs = {1, n - 1}
    return sorted(i for i in degs if 0 <= i < n)


def corollary_suite(H: Graph, p: int = 0, *, seed: int | None = 0) -> CorollaryReport:
    """Check maximal rank of x ell on A(w(H)) in the guaranteed degrees.

    Needs an edge in ``H`` and ``p != 2``; otherwise the report is marked
    inapplicable.  A failing guaranteed degree signals a bug, not data.
    """
    if p == 2:
        return CorollaryReport(False, p, reason="characteristic 2 is excluded")
    if H.num_edges() == 0:
        return CorollaryReport(False, p, reason="|E(w(H))| = n: H has no edge")
    A = build_algebra(independence_complex(whisker(H)))
    degs = guaranteed_degrees(H.n, p)
    return CorollaryReport(True, p, degs, degree_reports(A, p, seed=seed, degrees=degs))


def run_jobs(fn: Callable, items: Sequence, workers: int = 1) -> list:
    """Map ``fn`` over ``items``; results keep input order regardless of ``workers``."""
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
