from math import comb

import pytest

from wlpkit.complexes import (
    ComplexError,
    SimplicialComplex,
    dual_graph,
    has_boundary,
    independence_complex,
    is_pseudomanifold,
    one_skeleton,
    ridges,
)
from wlpkit.graphs import (
    complement,
    gen_broom,
    gen_complete,
    gen_edgeless,
    is_bipartite,
    make_graph,
    mask_of,
    vertices_of,
    whisker,
)

from conftest import all_labeled_graphs, random_graphs
from oracles import f_vector as f_oracle
from oracles import whiskered_edges


def facets_of(D):
    return [vertices_of(F) for F in D.facets]


def test_ind_two_disjoint_edges():
    D = independence_complex(whisker(gen_edgeless(2)))
    # x1=0, x2=1, y1=2, y2=3: {x1,x2}, {x1,y2}, {y1,x2}, {y1,y2}
    assert facets_of(D) == [[0, 1], [0, 3], [1, 2], [2, 3]]


def test_ind_triangle():
    assert facets_of(independence_complex(gen_complete(3))) == [[0], [1], [2]]


def test_ind_whiskered_path():
    D = independence_complex(whisker(gen_broom(1)))
    assert D.is_pure() and D.dimension == 3
    assert D.f_vector()[3] == len(D.facets) == 8
    assert D.f_vector() == (8, 21, 22, 8)


def test_f_vectors():
    assert independence_complex(whisker(gen_broom(5))).f_vector() == (
        16, 105, 380, 840, 1167, 996, 477, 98)
    assert independence_complex(whisker(gen_complete(5))).f_vector() == (10, 30, 40, 25, 6)


def test_faces_order_and_range():
    D = independence_complex(whisker(gen_complete(3)))
    faces = D.faces_of_dim(1)
    assert faces == sorted(faces, key=vertices_of)
    assert D.faces_of_dim(-1) == [0]
    with pytest.raises(ComplexError):
        D.faces_of_dim(3)


def test_ridges_examples():
    D = independence_complex(whisker(gen_edgeless(2)))
    assert all(len(fs) == 2 for _, fs in ridges(D))
    K = independence_complex(whisker(gen_complete(3)))
    counts = {len(fs) for _, fs in ridges(K)}
    assert counts == {1, 2}
    # ridge {x1, y2} lies only in {x1, y2, y3}
    x1y2 = [fs for r, fs in ridges(K) if r == mask_of([0, 4])][0]
    assert [facets_of(K)[k] for k in x1y2] == [[0, 4, 5]]
    single = SimplicialComplex(2, (mask_of([0, 1]),))
    assert [(vertices_of(r), len(fs)) for r, fs in ridges(single)] == [([0], 1), ([1], 1)]
    with pytest.raises(ComplexError):
        ridges(SimplicialComplex(3, (mask_of([0]), mask_of([1, 2]))))


def test_pseudomanifold_examples():
    rep = is_pseudomanifold(independence_complex(whisker(gen_broom(5))))
    assert rep and rep.has_boundary
    rep = is_pseudomanifold(independence_complex(whisker(gen_edgeless(2))))
    assert rep and not rep.has_boundary
    assert rep.dual_bipartite
    split = SimplicialComplex(4, (mask_of([0, 1]), mask_of([2, 3])))
    rep = is_pseudomanifold(split)
    assert not rep and rep.is_pure and not rep.is_ridge_connected
    assert rep.disconnected_facets is not None


def test_ridge_violation():
    # three triangles sharing edge {0,1}
    D = SimplicialComplex(5, tuple(mask_of([0, 1, k]) for k in (2, 3, 4)))
    rep = is_pseudomanifold(D)
    assert not rep and [vertices_of(r) for r in rep.ridge_violations] == [[0, 1]]


def test_non_pure_report():
    rep = is_pseudomanifold(SimplicialComplex(3, (mask_of([0]), mask_of([1, 2]))))
    assert not rep.is_pure and not rep


def test_dual_graph_examples():
    dual = dual_graph(independence_complex(whisker(gen_edgeless(2))))
    assert dual.n == 4 and dual.num_edges() == 4
    assert all(dual.degree(v) == 2 for v in range(4)) and is_bipartite(dual)
    one = dual_graph(SimplicialComplex(2, (mask_of([0, 1]),)))
    assert (one.n, one.num_edges()) == (1, 0)
    tri_boundary = SimplicialComplex(3, tuple(mask_of(e) for e in ([0, 1], [1, 2], [0, 2])))
    assert not is_bipartite(dual_graph(tri_boundary))
    assert not has_boundary(tri_boundary)


def test_one_skeleton_is_complement():
    G = whisker(gen_broom(1))
    assert one_skeleton(independence_complex(G)) == complement(G)


def test_antichain_enforced():
    with pytest.raises(ComplexError):
        SimplicialComplex(3, (mask_of([0]), mask_of([0, 1])))
    D = SimplicialComplex.from_faces(3, [[0], [0, 1], [2]])
    assert facets_of(D) == [[0, 1], [2]]


CORPUS = list(all_labeled_graphs(4)) + random_graphs(60)


@pytest.mark.parametrize("H", CORPUS)
def test_whiskered_complex_properties(H):
    D = independence_complex(whisker(H))
    assert D.is_pure() and D.dimension == H.n - 1
    rep = is_pseudomanifold(D)
    assert rep.is_pseudomanifold
    assert rep.has_boundary == (H.num_edges() > 0)
    d = D.dimension
    inc = ridges(D)
    assert sum(len(fs) for _, fs in inc) == (d + 1) * len(D.facets)
    assert all(not (F & G == F) for i, F in enumerate(D.facets) for G in D.facets[i + 1:])


@pytest.mark.parametrize("G", list(all_labeled_graphs(4)) + random_graphs(40, sizes=(5, 6, 8, 10, 12)))
def test_f_vector_oracle(G):
    assert independence_complex(G).f_vector() == f_oracle(G.n, G.edges)


def test_f_vector_whiskered_oracle():
    for H in random_graphs(20, sizes=(4, 5)):
        W = whisker(H)
        assert independence_complex(W).f_vector() == f_oracle(W.n, whiskered_edges(H.n, H.edges))


def test_edgeless_whisker_f_vector_closed_form():
    n = 5
    D = independence_complex(whisker(gen_edgeless(n)))
    assert D.f_vector() == tuple(comb(n, k) * 2 ** k for k in range(1, n + 1))
