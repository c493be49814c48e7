"""Exact-rational geometry: embedded complexes in Q^n, geometric joins,
general-position (joinability) predicates, and the map evaluators used to
sanity-check the cube/suspension reparametrizations.

All coordinates are fractions.Fraction; every predicate is decided exactly
(rank tests, rational LPs, determinant volume ratios).  No floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .chains import (
    chain_complex_of_faces,
    homology,
    homology_equal,
    homology_shift,
    simplicial_chain_complex,
)
from .exactlin import RationalLP, lp_max, rank_rational
from .report import Check, VerificationReport

F = Fraction


# ---------------------------------------------------------------------------
# points and exact linear helpers
# ---------------------------------------------------------------------------


def point(*coords):
    return tuple(F(c) for c in coords)


def unit(n, i):
    """Standard basis vector e_i (1-based) in Q^n."""
    return tuple(F(1) if j == i else F(0) for j in range(1, n + 1))


def affinely_independent(points):
    pts = list(points)
    if not pts:
        return True
    homog = [list(p) + [F(1)] for p in pts]
    return rank_rational(homog) == len(pts)


def solve_linear(rows, rhs):
    """Solve the exact linear system rows . t = rhs; None if inconsistent.

    If underdetermined, free variables are set to 0.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    A = [[F(x) for x in row] + [F(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if A[i][c]), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        p = A[r][c]
        A[r] = [x / p for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if A[i][n]:
            return None
    t = [F(0)] * n
    for i, c in enumerate(pivots):
        t[c] = A[i][n]
    return tuple(t)


def barycentric_coords(vertices, p):
    """Coordinates t with sum(t) = 1 and sum t_i v_i = p, or None.

    Unique when the vertices are affinely independent (coords may be
    negative: p need not lie inside the simplex).
    """
    verts = list(vertices)
    n = len(p)
    rows = [[v[d] for v in verts] for d in range(n)]
    rows.append([F(1)] * len(verts))
    return solve_linear(rows, list(p) + [F(1)])


def point_in_simplex(vertices, p):
    t = barycentric_coords(vertices, p)
    return t is not None and all(x >= 0 for x in t)


def determinant(rows):
    A = [[F(x) for x in row] for row in rows]
    n = len(A)
    det = F(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if A[i][c]), None)
        if pr is None:
            return F(0)
        if pr != c:
            A[c], A[pr] = A[pr], A[c]
            det = -det
        det *= A[c][c]
        p = A[c][c]
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] / p
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return det


# ---------------------------------------------------------------------------
# embedded complexes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EmbeddedComplex:
    """Simplicial complex embedded in Q^n, stored by maximal simplices.

    Each simplex is a frozenset of points; faces are all subsets.  The
    complex {empty simplex} is the empty space (and the identity for joins).
    """

    ambient: int
    maximal: frozenset  # of frozensets of points

    @classmethod
    def from_simplices(cls, ambient, simplices):
        sims = [frozenset(s) for s in simplices]
        minimal = []
        for s in sorted(sims, key=len, reverse=True):
            if not any(s <= t for t in minimal):
                minimal.append(s)
        if not minimal:
            minimal = [frozenset()]
        for s in minimal:
            for p in s:
                if len(p) != ambient:
                    raise ValueError("point dimension != ambient dimension")
            if not affinely_independent(s):
                raise ValueError("simplex vertices are affinely dependent")
        return cls(ambient, frozenset(minimal))

    def vertices(self):
        return sorted({p for s in self.maximal for p in s})

    def simplices(self):
        """All faces (frozensets), including the empty one."""
        seen = set()
        for s in self.maximal:
            verts = sorted(s)
            for r in range(len(verts) + 1):
                for c in combinations(verts, r):
                    seen.add(frozenset(c))
        return seen

    def is_empty(self):
        return self.maximal == frozenset({frozenset()})

    def contains_point(self, p):
        return any(s and point_in_simplex(sorted(s), p) for s in self.maximal)

    def union(self, other):
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        return EmbeddedComplex.from_simplices(
            self.ambient, set(self.maximal) | set(other.maximal)
        )

    def chain_complex(self):
        """Augmented simplicial chain complex on integer-relabeled vertices."""
        label = {p: i for i, p in enumerate(self.vertices(), start=1)}
        faces_by_dim = {}
        for s in self.simplices():
            f = tuple(sorted(label[p] for p in s))
            faces_by_dim.setdefault(len(f) - 1, set()).add(f)
        return chain_complex_of_faces(
            {d: sorted(fs) for d, fs in faces_by_dim.items()}
        )

    def homology(self):
        return homology(self.chain_complex())


def embedded_point(p):
    return EmbeddedComplex.from_simplices(len(p), [frozenset({p})])


def empty_embedded(ambient):
    return EmbeddedComplex.from_simplices(ambient, [frozenset()])


# ---------------------------------------------------------------------------
# joinability and geometric joins
# ---------------------------------------------------------------------------


@dataclass
class JoinCertificate:
    ok: bool
    failures: list = field(default_factory=list)  # dicts with kind/simplices/witness


def proper_intersection(simplex_a, simplex_b):
    """conv(A) n conv(B) == conv(A n B), decided by exact LP.

    Maximizes total barycentric mass on non-shared vertices over all pairs of
    representations of a common point; proper iff the maximum is 0 (or the
    intersection is empty).  Returns (bool, witness point or None).
    """
    A = sorted(simplex_a)
    B = sorted(simplex_b)
    if not A or not B:
        return True, None
    shared = set(A) & set(B)
    # faces of a common simplex always intersect properly
    if affinely_independent(set(A) | set(B)):
        return True, None
    n = len(A[0])
    nvars = len(A) + len(B)
    objective = [F(0) if p in shared else F(1) for p in A]
    objective += [F(0) if q in shared else F(1) for q in B]
    a_eq = []
    b_eq = []
    for d in range(n):
        a_eq.append([p[d] for p in A] + [-q[d] for q in B])
        b_eq.append(F(0))
    a_eq.append([F(1)] * len(A) + [F(0)] * len(B))
    b_eq.append(F(1))
    a_eq.append([F(0)] * len(A) + [F(1)] * len(B))
    b_eq.append(F(1))
    res = lp_max(RationalLP(objective, a_eq=a_eq, b_eq=b_eq))
    if res.status == "infeasible":
        return True, None
    assert res.status == "optimal", res
    if res.value == 0:
        return True, None
    u = res.point[: len(A)]
    witness = tuple(sum(ui * p[d] for ui, p in zip(u, A)) for d in range(n))
    return False, witness


def joinable(X: EmbeddedComplex, Y: EmbeddedComplex):
    """Decide geometric joinability of two embedded complexes.

    (a) every pair of simplices (one from each side) has an affinely
    independent combined vertex set, and (b) every two of the resulting join
    simplices intersect properly.  Returns (bool, JoinCertificate).
    """
    if X.ambient != Y.ambient:
        raise ValueError("ambient dimension mismatch")
    cert = JoinCertificate(True)
    join_simplices = []
    for s in X.maximal:
        for t in Y.maximal:
            if s & t or not affinely_independent(s | t):
                cert.ok = False
                cert.failures.append(
                    {"kind": "affine dependence", "simplices": (sorted(s), sorted(t))}
                )
            else:
                join_simplices.append(s | t)
    for sa, sb in combinations(join_simplices, 2):
        ok, witness = proper_intersection(sa, sb)
        if not ok:
            cert.ok = False
            cert.failures.append(
                {
                    "kind": "improper intersection",
                    "simplices": (sorted(sa), sorted(sb)),
                    "witness": witness,
                }
            )
    return cert.ok, cert


def geometric_join(X: EmbeddedComplex, Y: EmbeddedComplex, check=True):
    """Join simplices pairwise; carrier is all convex combinations."""
    if check:
        ok, cert = joinable(X, Y)
        if not ok:
            raise ValueError(f"not geometrically joinable: {cert.failures[:1]}")
    return EmbeddedComplex.from_simplices(
        X.ambient, [s | t for s in X.maximal for t in Y.maximal]
    )


def geometric_join_many(parts, check=True):
    parts = list(parts)
    if not parts:
        raise ValueError("empty join")
    out = parts[0]
    for nxt in parts[1:]:
        out = geometric_join(out, nxt, check=check)
    return out


# ---------------------------------------------------------------------------
# the standard configuration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StandardConfig:
    """v_i^l = e_{(k+1)(i-1)+l}; a_i the barycenter of its block; Delta_i the
    block simplex; S_i its boundary (all proper faces)."""

    m: int
    k: int

    def __post_init__(self):
        if self.m < 1 or self.k < 0:
            raise ValueError("need m >= 1 and k >= 0")

    @property
    def n(self):
        return (self.k + 1) * self.m

    def v(self, i, l):
        return unit(self.n, (self.k + 1) * (i - 1) + l)

    def block(self, i):
        return [self.v(i, l) for l in range(1, self.k + 2)]

    def a(self, i):
        pts = self.block(i)
        return tuple(sum(c) / (self.k + 1) for c in zip(*pts))

    def delta(self, i):
        return EmbeddedComplex.from_simplices(self.n, [frozenset(self.block(i))])

    def sphere(self, i):
        """S_i = boundary of Delta_i: all proper faces (empty complex if k=0)."""
        pts = self.block(i)
        if len(pts) == 1:
            return empty_embedded(self.n)
        return EmbeddedComplex.from_simplices(
            self.n, [frozenset(c) for c in combinations(pts, len(pts) - 1)]
        )

    def a_point_complex(self, i):
        return embedded_point(self.a(i))


def standard_config(m, k) -> StandardConfig:
    return StandardConfig(m, k)


def sigma_complexes(config: StandardConfig, sigma):
    """(Delta_sigma, S_sigma, S*_sigma, a_sigma) for sigma a subset of [m]."""
    sigma = sorted(set(sigma))
    comp = [i for i in range(1, config.m + 1) if i not in sigma]
    n = config.n
    if sigma:
        delta_sigma = EmbeddedComplex.from_simplices(
            n, [frozenset(p for i in sigma for p in config.block(i))]
        )
        s_sigma = geometric_join_many(
            [config.sphere(i) for i in sigma], check=False
        )
        a_sigma = EmbeddedComplex.from_simplices(
            n, [frozenset(config.a(i) for i in sigma)]
        )
    else:
        delta_sigma = empty_embedded(n)
        s_sigma = empty_embedded(n)
        a_sigma = empty_embedded(n)
    if comp:
        s_star = geometric_join_many([config.sphere(j) for j in comp], check=False)
    else:
        s_star = empty_embedded(n)
    return delta_sigma, s_sigma, s_star, a_sigma


def realization_AK(config: StandardConfig, K):
    """A(K): the simplices a_sigma, sigma in K -- a realization of K on the
    block barycenters."""
    if K.m != config.m:
        raise ValueError("K and configuration disagree on m")
    sims = []
    for sigma in K.faces():
        pts = frozenset(config.a(i) for i in sigma)
        if sigma and not affinely_independent(pts):
            raise ValueError("barycenters unexpectedly dependent")
        sims.append(pts)
    return EmbeddedComplex.from_simplices(config.n, sims)


# ---------------------------------------------------------------------------
# carrier-equality certification (containment + properness + volume)
# ---------------------------------------------------------------------------


def volume_ratio(piece, reference):
    """vol(piece) / vol(reference) for two simplices of equal dimension lying
    in the reference's affine hull; None if the piece leaves the hull."""
    ref = sorted(reference)
    pc = sorted(piece)
    if len(pc) != len(ref):
        return None
    rows = []
    for p in pc:
        t = barycentric_coords(ref, p)
        if t is None:
            return None
        rows.append(list(t))
    return abs(determinant(rows))


def tiling_check(pieces, reference, container=None):
    """Certify that a family of top-dimensional simplices tiles a region.

    pieces must pairwise intersect properly, every vertex must lie in the
    container complex (when given), and the volume ratios against the
    reference simplex must sum to the expected total (returned for the
    caller to compare).  Returns (ok, failures, total_ratio).
    """
    failures = []
    total = F(0)
    for s in pieces:
        r = volume_ratio(s, reference)
        if r is None:
            failures.append({"kind": "outside affine hull", "simplex": sorted(s)})
            continue
        total += r
    for sa, sb in combinations(pieces, 2):
        ok, witness = proper_intersection(sa, sb)
        if not ok:
            failures.append(
                {
                    "kind": "improper intersection",
                    "simplices": (sorted(sa), sorted(sb)),
                    "witness": witness,
                }
            )
    if container is not None:
        for s in pieces:
            for p in s:
                if not container.contains_point(p):
                    failures.append({"kind": "vertex outside container", "point": p})
    return not failures, failures, total


# ---------------------------------------------------------------------------
# batch verifiers
# ---------------------------------------------------------------------------


def verify_gji(config: StandardConfig, sigma) -> VerificationReport:
    """The collections {Delta_i}, {S_i}, {a_i} over sigma are each families of
    geometrically joinable spaces (pairwise and accumulated)."""
    sigma = sorted(set(sigma))
    report = VerificationReport(f"gji m={config.m} k={config.k} sigma={sigma}")
    collections = {
        "Delta_i": [config.delta(i) for i in sigma],
        "S_i": [config.sphere(i) for i in sigma],
        "a_i": [config.a_point_complex(i) for i in sigma],
    }
    for name, members in collections.items():
        ok_all = True
        for x, y in combinations(members, 2):
            ok, _ = joinable(x, y)
            ok_all = ok_all and ok
        acc = None
        for member in members:
            if acc is None:
                acc = member
                continue
            ok, _ = joinable(acc, member)
            ok_all = ok_all and ok
            acc = geometric_join(acc, member, check=False)
        report.add(Check(f"collection {name} joinable", ok_all, "joinable",
                         "joinable" if ok_all else "not joinable", "gji"))
    return report


def verify_gjs(config: StandardConfig, sigma) -> VerificationReport:
    """Delta_sigma = a_sigma *~ S_sigma: joinability, containment, proper
    intersections, and the exact volume identity (the join tiles the block
    simplex)."""
    sigma = sorted(set(sigma))
    if not sigma:
        raise ValueError("sigma must be nonempty")
    report = VerificationReport(f"gjs m={config.m} k={config.k} sigma={sigma}")
    delta_sigma, s_sigma, _, a_sigma = sigma_complexes(config, sigma)

    ok, _ = joinable(a_sigma, s_sigma)
    report.add(Check("a_sigma joinable to S_sigma", ok, "joinable",
                     "joinable" if ok else "not joinable", "gjs"))
    join = geometric_join(a_sigma, s_sigma, check=False)

    verts_ok = all(delta_sigma.contains_point(p) for p in join.vertices())
    report.add(Check("join vertices inside Delta_sigma", verts_ok, "contained",
                     "contained" if verts_ok else "outside", "gjs"))

    reference = sorted(next(iter(delta_sigma.maximal)))
    if config.k == 0:
        # S_sigma is the empty space; the join is a_sigma itself and the
        # volume identity degenerates to a_sigma = Delta_sigma
        pieces = [s for s in join.maximal if s]
        expected_total = F(1)
    else:
        pieces = [s for s in join.maximal]
        expected_total = F(1)
    ok, failures, total = tiling_check(pieces, reference, container=delta_sigma)
    report.add(Check("pieces intersect properly and stay inside", ok,
                     "no violations", f"{len(failures)} violations", "gjs"))
    report.add(Check("volume identity (tiling of Delta_sigma)",
                     total == expected_total, str(expected_total), str(total),
                     "gjs"))
    return report


def verify_W_union(config: StandardConfig, K) -> VerificationReport:
    """Per sigma in K: Delta_sigma *~ S*_sigma and a_sigma *~ S_[m] have equal
    carriers; the union over K has the homology of the km-fold suspension."""
    report = VerificationReport(f"W m={config.m} k={config.k}")
    full = list(range(1, config.m + 1))
    _, s_full, _, _ = sigma_complexes(config, full)
    union_simplices = set()
    for sigma in K.faces():
        delta_sigma, _, s_star, a_sigma = sigma_complexes(config, sigma)
        side_a = geometric_join(delta_sigma, s_star, check=False)
        side_b = geometric_join(a_sigma, s_full, check=False)
        union_simplices.update(side_b.maximal)
        ok = carrier_equal(side_a, side_b)
        report.add(Check(f"W_sigma two presentations agree, sigma={sorted(sigma)}",
                         ok, "equal carriers", "equal" if ok else "different", "w1"))

    union = EmbeddedComplex.from_simplices(config.n, union_simplices)
    H_union = union.homology()
    H_expected = homology_shift(
        homology(simplicial_chain_complex(K)), config.k * config.m
    )
    eq, _ = homology_equal(H_union, H_expected)
    report.add(Check("union W_sigma homology = km-shifted homology of K", eq,
                     str(H_expected), str(H_union), "w2"))
    return report


def carrier_equal(A: EmbeddedComplex, B: EmbeddedComplex):
    """Carrier equality of two unions of simplices.

    The certificate needs one side to refine the other, so both orientations
    are tried.
    """
    return _carrier_refined_by(A, B) or _carrier_refined_by(B, A)


def _carrier_refined_by(A, B):
    """Certify |A| = |B| by tiling each simplex of A with the simplices of B
    contained in it: containment of the tiles (by vertices, hence by
    convexity), proper pairwise intersections, and exact volume-ratio sum 1.
    Every simplex of B must land inside some simplex of A, which gives the
    reverse containment."""
    pieces_a = [s for s in A.maximal if s]
    pieces_b = [s for s in B.maximal if s]
    if not pieces_a or not pieces_b:
        return A.maximal == B.maximal
    assigned = set()
    for P in pieces_a:
        verts = sorted(P)
        tiles = [
            Q for Q in pieces_b if all(point_in_simplex(verts, p) for p in Q)
        ]
        total = F(0)
        for Q in tiles:
            assigned.add(Q)
            if len(Q) == len(P):
                r = volume_ratio(Q, P)
                if r is None:
                    return False
                total += r
        if total != 1:
            return False
        for qa, qb in combinations(tiles, 2):
            ok, _ = proper_intersection(qa, qb)
            if not ok:
                return False
    return assigned == set(pieces_b)


# ---------------------------------------------------------------------------
# map evaluators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SuspensionPoint:
    """[pole, x, t] in S^0 * X with t = 0 the pole end and t = 1 the X end."""

    pole: str  # "s1" | "s2"
    x: tuple
    t: Fraction

    def key(self):
        if self.t == 0:
            return ("pole", self.pole)
        if self.t == 1:
            return ("base", self.x)
        return (self.pole, self.x, self.t)

    def __eq__(self, other):
        return isinstance(other, SuspensionPoint) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


@dataclass(frozen=True)
class ConePoint:
    """[c, x, t] in CX with t = 0 the cone point."""

    x: tuple
    t: Fraction

    def key(self):
        return "cone" if self.t == 0 else (self.x, self.t)

    def __eq__(self, other):
        return isinstance(other, ConePoint) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def eval_theta(x, lam) -> SuspensionPoint:
    """Cone-to-suspension collapse: the first half of the cone parameter runs
    up the s1 half, the second half runs down the s2 half."""
    lam = F(lam)
    if not 0 <= lam <= 1:
        raise ValueError("lambda must be in [0, 1]")
    x = tuple(F(c) for c in x)
    if 2 * lam <= 1:
        return SuspensionPoint("s1", x, 2 * lam)
    return SuspensionPoint("s2", x, 2 - 2 * lam)


def eval_psi(n, x, lam):
    """Cone over the standard simplex -> the side-2 cube, exactly.

    x is barycentric on the (n-1)-simplex, lam in [0, 1]; lam <= 1/2 scales
    to the inner half, lam >= 1/2 pushes out until the largest coordinate
    reaches 2.
    """
    x = tuple(F(c) for c in x)
    lam = F(lam)
    if len(x) != n:
        raise ValueError("x has wrong length")
    if any(c < 0 for c in x) or sum(x) != 1:
        raise ValueError("x is not barycentric")
    if not 0 <= lam <= 1:
        raise ValueError("lambda must be in [0, 1]")
    tbar = max(x)
    if 2 * lam <= 1:
        scale = 2 * lam
    else:
        scale = (2 - 2 * lam) + (2 * lam - 1) * 2 / tbar
    return tuple(scale * c for c in x)


def eval_psi_inverse(n, y):
    """Inverse of eval_psi; y = 0 returns the barycenter at lam = 0."""
    y = tuple(F(c) for c in y)
    if len(y) != n:
        raise ValueError("y has wrong length")
    if any(c < 0 or c > 2 for c in y):
        raise ValueError("y outside the cube [0, 2]^n")
    total = sum(y)
    if total == 0:
        return tuple(F(1, n) for _ in range(n)), F(0)
    x = tuple(c / total for c in y)
    tbar = max(x)
    if total <= 1:
        lam = total / 2
    else:
        # total = (2 - 2 lam) + (2 lam - 1) * 2 / tbar, solved for lam
        lam = (total - 2 + 2 / tbar) / (4 / tbar - 2)
    return x, lam


def eval_phi_p(points, weights):
    """The join-to-geometric-join comparison map: the convex combination."""
    weights = [F(w) for w in weights]
    if sum(weights) != 1 or any(w < 0 for w in weights):
        raise ValueError("weights must be barycentric")
    if len(points) != len(weights):
        raise ValueError("points/weights length mismatch")
    n = len(points[0])
    return tuple(
        sum(w * F(p[d]) for w, p in zip(weights, points)) for d in range(n)
    )


def eval_cone_join_split(x, y, t, lam):
    """Cone over a join -> product of cones: [c,[x,y,t],lam] maps to
    ([c,x,2 lam min(t,1/2)], [c,y,2 lam min(1-t,1/2)])."""
    t = F(t)
    lam = F(lam)
    if not (0 <= t <= 1 and 0 <= lam <= 1):
        raise ValueError("parameters must be in [0, 1]")
    x = tuple(F(c) for c in x)
    y = tuple(F(c) for c in y)
    return (
        ConePoint(x, 2 * lam * min(t, F(1, 2))),
        ConePoint(y, 2 * lam * min(1 - t, F(1, 2))),
    )


def pad_zeros(x, total):
    return tuple(x) + (F(0),) * (total - len(x))


def naturality_check_k0(p, l, samples) -> VerificationReport:
    """Coordinate-inclusion naturality of the cube reparametrization:
    padding with zeros before or after eval_psi gives the same point."""
    if not 1 <= p <= l:
        raise ValueError("need 1 <= p <= l")
    report = VerificationReport(f"naturality p={p} l={l}")
    bad = []
    for x, lam in samples:
        lhs = eval_psi(l, pad_zeros(x, l), lam)
        rhs = pad_zeros(eval_psi(p, tuple(F(c) for c in x), lam), l)
        if lhs != rhs:
            bad.append((x, lam, lhs, rhs))
    report.add(Check(f"psi naturality on {len(list(samples))} samples", not bad,
                     "all equal", f"{len(bad)} mismatches", "naturality k=0"))
    return report


# ---------------------------------------------------------------------------
# rational sample grids
# ---------------------------------------------------------------------------


def simplex_grid(n, max_denominator):
    """All barycentric points of the (n-1)-simplex with coordinates of the
    form a/d, d <= max_denominator."""
    pts = set()
    for d in range(1, max_denominator + 1):
        for comp in _compositions(d, n):
            pts.add(tuple(F(a, d) for a in comp))
    return sorted(pts)


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def unit_grid(denominator):
    return [F(i, denominator) for i in range(denominator + 1)]
