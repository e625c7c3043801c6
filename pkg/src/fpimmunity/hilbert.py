"""Hilbert functions of point sets in the Boolean cube and the
low-degree-distance lower bound they imply."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import BadRange, SearchBudgetExceeded, TooLarge
from .gf import make_prime_field
from .immunity import _monomial_block
from .linalg import MatrixGF
from .ring import BooleanFunction, monomials_up_to

MATRIX_BUDGET = 10 ** 8
DISTANCE_BUDGET = 10 ** 7


@dataclass(frozen=True)
class PointSet:
    """Deduplicated, sorted subset of {0,1}^n (points as int masks)."""

    n: int
    points: tuple[int, ...]

    @classmethod
    def of(cls, n: int, points) -> "PointSet":
        pts = tuple(sorted(set(int(x) for x in points)))
        if pts and not 0 <= pts[0] <= pts[-1] < (1 << n):
            raise BadRange("points out of range for the given arity")
        return cls(n, pts)

    @classmethod
    def zero_set(cls, f: BooleanFunction) -> "PointSet":
        return cls.of(f.n, f.zero_set())

    def __len__(self):
        return len(self.points)


def binom_sum(n: int, m: int) -> int:
    """C(n, <= m) = sum_{i<=m} C(n, i)."""
    return sum(math.comb(n, i) for i in range(m + 1))


def _eval_matrix(S: PointSet, m: int, p: int) -> MatrixGF:
    cols = binom_sum(S.n, m)
    if len(S) * cols > MATRIX_BUDGET:
        raise TooLarge("evaluation matrix exceeds the size budget")
    pts = np.asarray(S.points, dtype=np.int64)
    masks = monomials_up_to(S.n, m)
    if pts.size == 0:
        return MatrixGF(np.zeros((0, cols), np.int64), make_prime_field(p))
    return MatrixGF(_monomial_block(pts, masks), make_prime_field(p))


def hilbert_function(S: PointSet, m: int, p: int) -> int:
    """Dimension of the space of functions on S realized by polynomials of
    degree <= m: the rank of the monomial evaluation matrix."""
    if not 0 <= m <= S.n:
        raise BadRange("need 0 <= m <= n")
    return _eval_matrix(S, m, p).rank()


def annihilator_dim(S: PointSet, m: int, p: int) -> int:
    """Dimension of degree-<=m polynomials vanishing on S."""
    if not 0 <= m <= S.n:
        raise BadRange("need 0 <= m <= n")
    M = _eval_matrix(S, m, p)
    h = M.rank()
    dim = M.cols - h
    assert dim == len(M.nullspace_basis())
    return dim


def smolensky_bound(f: BooleanFunction, d: int, p: int) -> int:
    """2 h_m(Z(f)) - |Z(f)| with m = floor((n-d-1)/2): a lower bound on the
    distance of f to every degree-d polynomial (nonzero values read as 1).
    May be <= 0; returned as-is so vacuity is visible."""
    if d < 0 or f.n < d + 1:
        raise BadRange("need d >= 0 and n >= d+1")
    S = PointSet.zero_set(f)
    if len(S) == 0:
        return 0
    m = (f.n - d - 1) // 2
    return 2 * hilbert_function(S, m, p) - len(S)


def brute_force_min_distance(f: BooleanFunction, d: int, p: int) -> int:
    """Exact minimum, over all polynomials g of degree <= d over F_p, of
    |{x : f(x) != [g(x) != 0]}|.  Exhaustive over all p^C(n,<=d)
    coefficient vectors; the oracle the Hilbert bound is checked against."""
    n = f.n
    k = binom_sum(n, d)
    if p ** k > DISTANCE_BUDGET:
        raise SearchBudgetExceeded(f"would enumerate {p}^{k} polynomials")
    pts = np.arange(1 << n, dtype=np.int64)
    masks = monomials_up_to(n, d)
    M = _monomial_block(pts, masks)
    table = np.asarray(f.table, dtype=np.int64)
    best = 1 << n
    for coeffs in product(range(p), repeat=k):
        vals = (M @ np.asarray(coeffs, dtype=np.int64)) % p
        dist = int(np.count_nonzero((vals != 0).astype(np.int64) != table))
        if dist < best:
            best = dist
    return best
