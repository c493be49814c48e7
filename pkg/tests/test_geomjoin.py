"""Geometric joins over Q^n: predicates, standard configuration, carrier
equality, and the exact map evaluators."""

from fractions import Fraction as F

import pytest

from polysmash.chains import homology, simplicial_chain_complex
from polysmash.complexes import from_facets, simplex_boundary
from polysmash.geomjoin import (
    ConePoint,
    EmbeddedComplex,
    SuspensionPoint,
    affinely_independent,
    barycentric_coords,
    carrier_equal,
    determinant,
    embedded_point,
    empty_embedded,
    eval_cone_join_split,
    eval_phi_p,
    eval_psi,
    eval_psi_inverse,
    eval_theta,
    geometric_join,
    geometric_join_many,
    joinable,
    naturality_check_k0,
    point_in_simplex,
    proper_intersection,
    realization_AK,
    sigma_complexes,
    simplex_grid,
    standard_config,
    unit,
    unit_grid,
    verify_gji,
    verify_gjs,
    verify_W_union,
    volume_ratio,
)


def pt(*coords):
    return tuple(F(c) for c in coords)


def test_affine_independence():
    assert affinely_independent([pt(0, 0), pt(1, 0), pt(0, 1)])
    assert not affinely_independent([pt(0, 0), pt(1, 1), pt(2, 2)])
    assert affinely_independent([pt(5, 7)])
    assert affinely_independent([])


def test_barycentric_and_membership():
    tri = [pt(0, 0), pt(2, 0), pt(0, 2)]
    assert barycentric_coords(tri, pt(1, 1)) == (F(0), F(1, 2), F(1, 2))
    assert point_in_simplex(tri, pt(F(1, 2), F(1, 2)))
    assert not point_in_simplex(tri, pt(2, 2))
    # outside the simplex but inside the affine hull: negative coordinate
    assert min(barycentric_coords(tri, pt(3, 3))) < 0
    # off the affine hull entirely
    edge = [pt(0, 0), pt(2, 0)]
    assert barycentric_coords(edge, pt(1, 1)) is None


def test_determinant():
    assert determinant([[F(1), F(2)], [F(3), F(4)]]) == -2
    assert determinant([[F(1)]]) == 1
    assert determinant([[F(0), F(1)], [F(0), F(2)]]) == 0


def test_proper_intersection_cases():
    # shared edge of two triangles: proper
    a = [pt(0, 0), pt(1, 0), pt(0, 1)]
    b = [pt(1, 1), pt(1, 0), pt(0, 1)]
    ok, _ = proper_intersection(a, b)
    assert ok
    # crossing diagonals of a square: improper, witness at the center
    c = [pt(0, 0), pt(1, 1)]
    d = [pt(1, 0), pt(0, 1)]
    ok, witness = proper_intersection(c, d)
    assert not ok
    assert witness == pt(F(1, 2), F(1, 2))
    # disjoint segments on a line: proper (empty intersection)
    e = [pt(0, 0), pt(1, 0)]
    f = [pt(2, 0), pt(3, 0)]
    ok, _ = proper_intersection(e, f)
    assert ok
    # overlapping collinear segments: improper
    g = [pt(0, 0), pt(2, 0)]
    h = [pt(1, 0), pt(3, 0)]
    ok, _ = proper_intersection(g, h)
    assert not ok


def test_joinable_positive_and_negative():
    X = embedded_point(pt(0, 0, 1))
    Y = EmbeddedComplex.from_simplices(
        3, [frozenset({pt(1, 0, 0), pt(0, 1, 0)})]
    )
    ok, _ = joinable(X, Y)
    assert ok
    J = geometric_join(X, Y)
    assert len(J.maximal) == 1
    # join segments crossing at the square center: improper intersection
    A = EmbeddedComplex.from_simplices(
        2, [frozenset({pt(0, 0)}), frozenset({pt(0, 1)})]
    )
    B = EmbeddedComplex.from_simplices(
        2, [frozenset({pt(1, 1)}), frozenset({pt(1, 0)})]
    )
    ok, cert = joinable(A, B)
    assert not ok
    assert any(f["kind"] == "improper intersection" for f in cert.failures)
    # collinear combination: affine dependence failure
    P = embedded_point(pt(0, 0))
    Q = EmbeddedComplex.from_simplices(2, [frozenset({pt(1, 1), pt(2, 2)})])
    ok, cert = joinable(P, Q)
    assert not ok
    assert any(f["kind"] == "affine dependence" for f in cert.failures)


def test_join_with_empty_space_is_identity():
    X = embedded_point(pt(1, 0))
    E = empty_embedded(2)
    assert geometric_join(X, E).maximal == X.maximal
    assert geometric_join(E, X).maximal == X.maximal


def test_join_associative_carrier():
    p1 = embedded_point(pt(1, 0, 0))
    p2 = embedded_point(pt(0, 1, 0))
    p3 = embedded_point(pt(0, 0, 1))
    left = geometric_join(geometric_join(p1, p2), p3)
    right = geometric_join(p1, geometric_join(p2, p3))
    assert left.maximal == right.maximal
    many = geometric_join_many([p1, p2, p3])
    assert many.maximal == left.maximal


def test_standard_config_m2_k1():
    cfg = standard_config(2, 1)
    assert cfg.n == 4
    assert cfg.v(1, 1) == unit(4, 1)
    assert cfg.v(2, 2) == unit(4, 4)
    assert cfg.a(1) == pt(F(1, 2), F(1, 2), 0, 0)
    S1 = cfg.sphere(1)
    assert len(S1.maximal) == 2  # two endpoints of the block edge
    assert cfg.sphere(1).ambient == 4


def test_standard_config_k0_sphere_empty():
    cfg = standard_config(2, 0)
    assert cfg.sphere(1).is_empty()
    assert cfg.delta(1).maximal == frozenset({frozenset({unit(2, 1)})})


def test_sigma_complexes_m2_k1():
    cfg = standard_config(2, 1)
    delta_sigma, s_sigma, s_star, a_sigma = sigma_complexes(cfg, (1, 2))
    assert len(next(iter(delta_sigma.maximal))) == 4
    # S_{1} * S_{2}: 2 x 2 joined edges
    assert len(s_sigma.maximal) == 4
    assert s_star.is_empty()
    assert len(next(iter(a_sigma.maximal))) == 2
    # complementary case
    _, s_one, s_star_one, _ = sigma_complexes(cfg, (1,))
    assert len(s_one.maximal) == 2
    assert len(s_star_one.maximal) == 2


def test_s_full_join_is_sphere():
    # S_1 * ... * S_m is a simplicial (k m - 1)-sphere on the block vertices
    for m, k in [(2, 1), (3, 1), (2, 2)]:
        cfg = standard_config(m, k)
        _, s_full, _, _ = sigma_complexes(cfg, range(1, m + 1))
        H = s_full.homology()
        assert sorted(H) == [k * m - 1]
        assert H.group(k * m - 1).betti == 1


def test_realization_AK_homology(triangle_boundary):
    cfg = standard_config(3, 1)
    AK = realization_AK(cfg, triangle_boundary)
    assert AK.homology() == homology(simplicial_chain_complex(triangle_boundary))


def test_volume_ratio():
    ref = [pt(0, 0), pt(1, 0), pt(0, 1)]
    assert volume_ratio([pt(0, 0), pt(F(1, 2), 0), pt(0, F(1, 2))], ref) == F(1, 4)
    assert volume_ratio(ref, ref) == 1
    # piece off the reference's affine hull
    ref3 = [pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0)]
    assert volume_ratio([pt(0, 0, 0), pt(1, 0, 0), pt(0, 0, 1)], ref3) is None


def test_carrier_equal_positive_and_negative():
    # a segment split at the midpoint equals the whole segment
    seg = EmbeddedComplex.from_simplices(1, [frozenset({pt(0), pt(2)})])
    split = EmbeddedComplex.from_simplices(
        1, [frozenset({pt(0), pt(1)}), frozenset({pt(1), pt(2)})]
    )
    assert carrier_equal(seg, split)
    assert carrier_equal(split, seg)
    shorter = EmbeddedComplex.from_simplices(1, [frozenset({pt(0), pt(1)})])
    assert not carrier_equal(seg, shorter)
    assert not carrier_equal(shorter, seg)


def test_verify_gji_small():
    for m, k in [(1, 0), (2, 0), (2, 1), (3, 1)]:
        r = verify_gji(standard_config(m, k), range(1, m + 1))
        assert r.passed, (m, k, str(r))


def test_verify_gjs_small():
    for m, k in [(1, 1), (2, 1), (2, 2)]:
        cfg = standard_config(m, k)
        for size in range(1, m + 1):
            r = verify_gjs(cfg, tuple(range(1, size + 1)))
            assert r.passed, (m, k, size, str(r))
    with pytest.raises(ValueError):
        verify_gjs(standard_config(2, 1), ())


def test_verify_W_union_triangle():
    cfg = standard_config(3, 1)
    K = simplex_boundary(2)
    r = verify_W_union(cfg, K)
    assert r.passed, str(r)


def test_verify_W_union_disconnected():
    cfg = standard_config(2, 1)
    K = from_facets(2, [(1,), (2,)])
    r = verify_W_union(cfg, K)
    assert r.passed, str(r)


# -- map evaluators ---------------------------------------------------------


def test_theta_quotient_identifications():
    x = pt(F(1, 3), F(2, 3))
    y = pt(F(1, 2), F(1, 2))
    # lam = 1/2 hits the base copy of X, shared by both halves
    assert eval_theta(x, F(1, 2)) == SuspensionPoint("s1", x, F(1))
    assert eval_theta(x, F(1, 2)) == SuspensionPoint("s2", x, F(1))
    # both poles are independent of x
    assert eval_theta(x, 0) == eval_theta(y, 0)
    assert eval_theta(x, 1) == eval_theta(y, 1)
    assert eval_theta(x, 0) != eval_theta(x, 1)
    assert eval_theta(x, F(1, 4)) != eval_theta(y, F(1, 4))


def test_psi_seam_and_boundary():
    for n in range(1, 5):
        for x in simplex_grid(n, 4):
            assert eval_psi(n, x, F(1, 2)) == tuple(x)
            assert max(eval_psi(n, x, 1)) == 2
            assert eval_psi(n, x, 0) == tuple(F(0) for _ in range(n))


def test_psi_round_trip_full_grid():
    for n in range(1, 4):
        for x in simplex_grid(n, 5):
            for lam in unit_grid(5):
                if lam == 0:
                    continue
                y = eval_psi(n, x, lam)
                assert all(0 <= c <= 2 for c in y)
                assert eval_psi_inverse(n, y) == (tuple(x), lam)


def test_psi_validates_input():
    with pytest.raises(ValueError):
        eval_psi(2, (F(1, 2), F(1, 4)), F(1, 2))
    with pytest.raises(ValueError):
        eval_psi(2, (F(1, 2), F(1, 2)), 2)
    with pytest.raises(ValueError):
        eval_psi_inverse(1, (F(5, 2),))


def test_phi_p_convex_combination():
    pts = [pt(1, 0), pt(0, 1)]
    assert eval_phi_p(pts, [F(1, 3), F(2, 3)]) == pt(F(1, 3), F(2, 3))
    with pytest.raises(ValueError):
        eval_phi_p(pts, [F(1, 2), F(1, 4)])


def test_cone_join_split_quotient():
    x = pt(1, 0)
    y = pt(0, 1)
    a, b = eval_cone_join_split(x, y, F(1, 2), 1)
    assert a == ConePoint(x, F(1)) and b == ConePoint(y, F(1))
    # at lam = 0 everything is the cone point, regardless of x, y, t
    a0, b0 = eval_cone_join_split(x, y, F(1, 4), 0)
    a1, b1 = eval_cone_join_split(y, x, F(3, 4), 0)
    assert (a0, b0) == (ConePoint(y, 0), ConePoint(x, 0))
    # t = 0 is the y end of the join: the x factor sits at the cone point
    a, b = eval_cone_join_split(x, y, 0, F(1, 2))
    assert a.t == 0 and b.t == F(1, 2)


def test_naturality_squares():
    for l in range(1, 5):
        for p in range(1, l + 1):
            samples = [
                (x, lam) for x in simplex_grid(p, 3) for lam in unit_grid(3)
            ]
            r = naturality_check_k0(p, l, samples)
            assert r.passed, (p, l)


def test_grids():
    g = simplex_grid(2, 2)
    assert pt(F(1, 2), F(1, 2)) in g
    assert all(sum(x) == 1 for x in g)
    assert unit_grid(2) == [F(0), F(1, 2), F(1)]
