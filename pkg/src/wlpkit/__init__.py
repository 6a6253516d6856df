"""Exact tools for Artinian algebras A(G) of graphs and the weak Lefschetz property."""

from .graphs import (
    Graph,
    GraphError,
    complement,
    connected_components,
    gen_broom,
    gen_complete,
    gen_cycle,
    gen_edgeless,
    gen_path,
    is_bipartite,
    is_independent_set,
    make_graph,
    whisker,
)
from .complexes import (
    SimplicialComplex,
    dual_graph,
    has_boundary,
    independence_complex,
    is_pseudomanifold,
    one_skeleton,
    ridges,
)
from .algebra import GradedAlgebra, build_algebra, mult_matrix, power_mult_matrix, socle
from .linalg import PrimeField, in_column_span, rank_mod_p, rank_rational
from .lefschetz import (
    analyze_wlp,
    broom_conjecture_check,
    corollary_suite,
    dao_nair_degree1,
    dao_nair_top,
    hausel_range_check,
    monotonicity_check,
)

__all__ = [
    "Graph", "GraphError", "complement", "connected_components", "gen_broom",
    "gen_complete", "gen_cycle", "gen_edgeless", "gen_path", "is_bipartite",
    "is_independent_set", "make_graph", "whisker",
    "SimplicialComplex", "dual_graph", "has_boundary", "independence_complex",
    "is_pseudomanifold", "one_skeleton", "ridges",
    "GradedAlgebra", "build_algebra", "mult_matrix", "power_mult_matrix", "socle",
    "PrimeField", "in_column_span", "rank_mod_p", "rank_rational",
    "analyze_wlp", "broom_conjecture_check", "corollary_suite", "dao_nair_degree1",
    "dao_nair_top", "hausel_range_check", "monotonicity_check",
]
