"""Complex combinatorics: doubling fixtures, joins, suspensions, generators."""

import pytest

from polysmash.chains import homology, simplicial_chain_complex
from polysmash.complexes import (
    SimplicialComplex,
    double,
    double_faces_bruteforce,
    double_iterated,
    empty_complex,
    facet_equal_upto_relabel,
    from_facets,
    full_simplex,
    join_abstract,
    random_complex,
    simplex_boundary,
    suspension,
)


def test_faces_and_f_vector():
    K = simplex_boundary(2)
    assert K.faces() == [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3)]
    assert K.f_vector() == [3, 3]
    assert K.euler_reduced() == -1  # chi(S^1) = 0, reduced drops a point
    assert K.dim() == 1
    assert K.is_face((1, 3)) and not K.is_face((1, 2, 3))


def test_from_facets_minimalizes():
    K = from_facets(3, [(1, 2), (1,), (2,), (3,)])
    assert K.facets == frozenset({(1, 2), (3,)})
    with pytest.raises(ValueError):
        from_facets(2, [(1, 3)])


def test_empty_complex():
    E = empty_complex()
    assert E.facets == frozenset({()})
    assert E.faces() == [()]
    assert E.euler_reduced() == -1


def test_double_two_point_complex():
    # doubling vertex 1 of the two-point complex gives the triangle boundary
    K = from_facets(2, [(1,), (2,)])
    D, rename = double(K, 1)
    assert D.facets == frozenset({(1, 3), (1, 2), (2, 3)})
    assert rename.name(1) == "1a"
    assert rename.name(3) == "1b"
    assert rename.name(2) == "2"


def test_double_edge_plus_point_vertex_2():
    # K = {{1,2},{3}}; doubling vertex 2 (labels: 2a = 2, 2b = 4)
    K = from_facets(3, [(1, 2), (3,)])
    D, rename = double(K, 2)
    assert D.facets == frozenset({(1, 2, 4), (2, 3), (3, 4)})
    assert rename.name(2) == "2a" and rename.name(4) == "2b"


def test_double_path_complex_vertex_2():
    K = from_facets(3, [(1, 2), (2, 3)])
    D, _ = double(K, 2)
    assert D.facets == frozenset({(1, 2, 4), (2, 3, 4)})


def test_double_triangle_boundary_vertex_1():
    # doubling a vertex of the triangle boundary gives the tetra boundary
    K = simplex_boundary(2)
    D, rename = double(K, 1)
    expected = from_facets(4, [(1, 4, 2), (1, 4, 3), (1, 2, 3), (4, 2, 3)])
    assert D == expected
    assert rename.name(1) == "1a" and rename.name(4) == "1b"
    bij = facet_equal_upto_relabel(D, simplex_boundary(3))
    assert bij is not None


def test_double_matches_bruteforce(full_corpus):
    for name, K in full_corpus.items():
        for i in range(1, K.m + 1):
            D, _ = double(K, i)
            assert sorted(D.faces(), key=lambda t: (len(t), t)) == list(
                double_faces_bruteforce(K, i)
            ), (name, i)


def test_double_shifts_homology(full_corpus):
    for name, K in full_corpus.items():
        H = homology(simplicial_chain_complex(K))
        for i in range(1, K.m + 1):
            D, _ = double(K, i)
            HD = homology(simplicial_chain_complex(D))
            assert HD == H.shifted(1), (name, i)


def test_double_iterated_order_independent():
    # doubling different vertices commutes up to relabeling
    K = from_facets(3, [(1, 2), (2, 3)])
    D12, _ = double_iterated(K, (1, 1, 0))
    K1, _ = double(K, 1)
    D21, _ = double(K1, 2)
    assert facet_equal_upto_relabel(D12, D21) is not None


def test_double_iterated_total_count():
    K = simplex_boundary(2)
    D, rename = double_iterated(K, (2, 0, 1))
    assert D.m == K.m + 3
    assert rename.name(1) == "1aa"
    assert rename.name(3) == "3a"
    H = homology(simplicial_chain_complex(D))
    assert H == homology(simplicial_chain_complex(K)).shifted(3)


def test_join_and_suspension():
    two = from_facets(2, [(1,), (2,)])
    square = join_abstract(two, two)  # S^0 * S^0 = S^1 (4-gon)
    assert homology(simplicial_chain_complex(square)).get(1).betti == 1
    susp = suspension(two)
    assert homology(simplicial_chain_complex(susp)).get(1).betti == 1
    double_susp = suspension(two, 2)
    assert homology(simplicial_chain_complex(double_susp)).get(2).betti == 1


def test_suspension_of_empty_complex():
    # S^0 * {} = S^0 shifts H~_{-1} = Z up to H~_0 = Z
    E = empty_complex()
    S = suspension(E)
    H = homology(simplicial_chain_complex(S))
    assert H.get(0) and H.get(0).betti == 1 and len(H) == 1


def test_random_complex_deterministic():
    A = random_complex(5, 2, "1/3", seed=11)
    B = random_complex(5, 2, "1/3", seed=11)
    assert A == B
    C = random_complex(5, 2, "1/3", seed=12)
    assert isinstance(C, SimplicialComplex)
    with pytest.raises(ValueError):
        random_complex(3, 2, "3/2", seed=0)


def test_random_complex_pinned_value():
    # regression pin: the draw sequence must stay stable across runs
    K = random_complex(4, 2, "1/2", seed=0)
    assert K == from_facets(4, [(1, 2, 3), (1, 3, 4), (2, 3, 4)])


def test_facet_equal_upto_relabel_negative():
    K = from_facets(3, [(1, 2), (2, 3)])
    L = from_facets(3, [(1, 2), (2, 3), (1, 3)])
    assert facet_equal_upto_relabel(K, L) is None
    bij = facet_equal_upto_relabel(K, K)
    assert bij is not None
    assert len(set(bij.values())) == len(bij)


def test_full_simplex_contractible():
    K = full_simplex(3)
    assert homology(simplicial_chain_complex(K)) == {}
