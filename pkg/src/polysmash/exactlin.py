"""Exact arithmetic kernels: sparse integer matrices, Smith normal form,
rational rank, and a small exact-rational simplex solver.

Everything here is exact: integers are Python's arbitrary-precision ints and
rationals are fractions.Fraction.  No floating point.

The Smith normal form elimination loop has a compiled twin (built from
_snf_cy.pyx).  It is selected at import time; set POLYSMASH_PURE=1 to force
the pure-Python kernel.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import _snf_py

if os.environ.get("POLYSMASH_PURE"):
    _snf_kernel = _snf_py
    KERNEL = "pure"
else:
    try:
        from . import _snf_cy as _snf_kernel  # type: ignore[no-redef]

        KERNEL = "compiled"
    except ImportError:
        _snf_kernel = _snf_py
        KERNEL = "pure"


class SparseIntMatrix:
    """Sparse matrix over Z, stored as {(row, col): nonzero int}."""

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                self[i, j] = v

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def __setitem__(self, key, value):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry {key} outside {self.rows}x{self.cols} matrix")
        if value:
            self.entries[key] = int(value)
        else:
            self.entries.pop(key, None)

    def __eq__(self, other):
        return (
            isinstance(other, SparseIntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"SparseIntMatrix({self.rows}x{self.cols}, {len(self.entries)} nonzero)"

    def transpose(self):
        return SparseIntMatrix(
            self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()}
        )

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        by_row = {}
        for (i, k), v in other.entries.items():
            by_row.setdefault(i, []).append((k, v))
        prod = {}
        for (i, j), v in self.entries.items():
            for k, w in by_row.get(j, ()):
                key = (i, k)
                prod[key] = prod.get(key, 0) + v * w
        return SparseIntMatrix(self.rows, other.cols, prod)

    def is_zero(self):
        return not self.entries

    @classmethod
    def from_dense(cls, dense):
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        entries = {
            (i, j): v for i, row in enumerate(dense) for j, v in enumerate(row) if v
        }
        return cls(rows, cols, entries)

    def to_dense(self):
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix."""

    factors: tuple
    rank: int

    def __post_init__(self):
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a:
                raise ValueError("invariant factors violate the divisibility chain")

    @property
    def torsion(self):
        """Factors exceeding 1, i.e. the part contributing torsion."""
        return tuple(d for d in self.factors if d > 1)


def smith_normal_form(M: SparseIntMatrix) -> SmithForm:
    """Smith normal form via sparse elementary row/column elimination."""
    diagonal = _snf_kernel.snf_diagonal(dict(M.entries), M.rows, M.cols)
    factors = _fix_divisibility(diagonal)
    return SmithForm(tuple(factors), len(factors))


def _fix_divisibility(diagonal):
    """Turn a diagonal of an equivalent diagonal matrix into invariant factors."""
    d = [abs(x) for x in diagonal if x]
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
    d.sort()
    return d


def rank_rational(M) -> int:
    """Rank over Q, by exact Gaussian elimination on Fraction rows.

    Accepts a SparseIntMatrix or a dense list of rows of ints/Fractions.
    """
    if isinstance(M, SparseIntMatrix):
        dense = M.to_dense()
    else:
        dense = [list(row) for row in M]
    rows = [[Fraction(x) for x in row] for row in dense if any(row)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while col < ncols and rank < len(rows):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                c = rows[r][col] / p
                rows[r] = [a - c * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


# ---------------------------------------------------------------------------
# Exact rational linear programming (two-phase simplex, Bland's rule)
# ---------------------------------------------------------------------------


@dataclass
class RationalLP:
    """max objective . x  subject to  a_eq x = b_eq, a_ub x <= b_ub, x >= 0.

    All data rational; upper bounds on variables go in as a_ub rows.
    """

    objective: list
    a_eq: list = field(default_factory=list)
    b_eq: list = field(default_factory=list)
    a_ub: list = field(default_factory=list)
    b_ub: list = field(default_factory=list)

    def __post_init__(self):
        n = len(self.objective)
        if len(self.a_eq) != len(self.b_eq) or len(self.a_ub) != len(self.b_ub):
            raise ValueError("constraint row/rhs count mismatch")
        for row in list(self.a_eq) + list(self.a_ub):
            if len(row) != n:
                raise ValueError("constraint row length != number of variables")


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    point: tuple | None = None


def lp_max(P: RationalLP) -> LPResult:
    """Exact two-phase simplex.  Bland's rule, so termination is guaranteed."""
    n = len(P.objective)
    nslack = len(P.a_ub)
    # standard form: [x, slacks] >= 0, equality rows only
    rows = []
    rhs = []
    for row, b in zip(P.a_eq, P.b_eq):
        rows.append([Fraction(x) for x in row] + [Fraction(0)] * nslack)
        rhs.append(Fraction(b))
    for k, (row, b) in enumerate(zip(P.a_ub, P.b_ub)):
        r = [Fraction(x) for x in row] + [Fraction(0)] * nslack
        r[n + k] = Fraction(1)
        rows.append(r)
        rhs.append(Fraction(b))
    m = len(rows)
    total = n + nslack
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]

    # phase 1: artificial basis, minimize sum of artificials
    tableau = [rows[i] + [Fraction(0)] * m + [rhs[i]] for i in range(m)]
    for i in range(m):
        tableau[i][total + i] = Fraction(1)
    basis = [total + i for i in range(m)]
    cost1 = [Fraction(0)] * total + [Fraction(-1)] * m
    status = _simplex(tableau, basis, cost1, total + m)
    assert status == "optimal"  # phase 1 is always bounded
    if sum(tableau[i][-1] for i in range(m) if basis[i] >= total) != 0:
        return LPResult("infeasible")
    _drive_out_artificials(tableau, basis, total)
    # drop artificial columns and any redundant rows still basic in one
    keep = [i for i in range(m) if basis[i] < total]
    tableau = [tableau[i][:total] + [tableau[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    # phase 2
    cost2 = [Fraction(P.objective[j]) if j < n else Fraction(0) for j in range(total)]
    status = _simplex(tableau, basis, cost2, total)
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * total
    for i, b in enumerate(basis):
        if b < total:
            x[b] = tableau[i][-1]
    value = sum(c * v for c, v in zip(cost2, x))
    return LPResult("optimal", value, tuple(x[:n]))


def _simplex(tableau, basis, cost, ncols):
    """Maximize cost.x in place.  Returns "optimal" or "unbounded"."""
    m = len(tableau)
    while True:
        # reduced costs: c_j - c_B . B^{-1} A_j
        y = [cost[basis[i]] for i in range(m)]
        entering = None
        for j in range(ncols):
            if j in basis:
                continue
            red = cost[j] - sum(y[i] * tableau[i][j] for i in range(m))
            if red > 0:
                entering = j  # Bland: first improving index
                break
        if entering is None:
            return "optimal"
        leaving = None
        best = None
        for i in range(m):
            a = tableau[i][entering]
            if a > 0:
                ratio = tableau[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving is None:
            return "unbounded"
        _pivot(tableau, basis, leaving, entering)


def _pivot(tableau, basis, i, j):
    p = tableau[i][j]
    tableau[i] = [x / p for x in tableau[i]]
    for r in range(len(tableau)):
        if r != i and tableau[r][j]:
            c = tableau[r][j]
            tableau[r] = [a - c * b for a, b in zip(tableau[r], tableau[i])]
    basis[i] = j


def _drive_out_artificials(tableau, basis, total):
    for i in range(len(basis)):
        if basis[i] >= total:
            j = next((j for j in range(total) if tableau[i][j]), None)
            if j is not None:
                _pivot(tableau, basis, i, j)
            # else: redundant row, keep the artificial at value 0
