"""Exact dense linear algebra over F_p.

Rank, nullspace and determinant run on int64 numpy arrays through the
kernels in `_kernels` (numba or numpy, plus a word-packed GF(2) rank path).
Also home to the nondegeneracy predicates, Kronecker products and Pascal
matrices used by the tensor-rank machinery.
"""

from __future__ import annotations

import math

import numpy as np

from . import _kernels
from .errors import FieldMismatch, NotSquare, TooLarge
from .gf import PrimeFieldCtx, make_prime_field


class MatrixGF:
    """Immutable dense matrix over F_p."""

    __slots__ = ("field", "data")

    def __init__(self, data, field: PrimeFieldCtx):
        arr = np.asarray(data, dtype=np.int64) % field.p
        if arr.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __eq__(self, other):
        return (isinstance(other, MatrixGF) and self.field == other.field
                and np.array_equal(self.data, other.data))

    def __repr__(self):
        return f"MatrixGF(p={self.field.p}, {self.data.tolist()})"

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.data.T, self.field)

    def rank(self, packed: bool | None = None) -> int:
        """Rank over F_p.  For p=2 the word-packed XOR path is used unless
        packed=False forces the generic elimination (the two are equivalent,
        which the test suite checks)."""
        if self.rows == 0 or self.cols == 0:
            return 0
        use_packed = self.field.p == 2 if packed is None else packed
        if use_packed and self.field.p == 2:
            return _kernels.rank_gf2_packed(self.data)
        r, _, _ = _kernels.rref_mod(self.data.copy(), self.field.p)
        return int(r)

    def det(self) -> int:
        if self.rows != self.cols:
            raise NotSquare("determinant requires a square matrix")
        if self.rows == 0:
            return 1
        r, _, unit = _kernels.rref_mod(self.data.copy(), self.field.p)
        return int(unit) if r == self.rows else 0

    def nullspace_basis(self) -> list[np.ndarray]:
        """Basis of the right kernel.  Each vector has its lowest-index
        nonzero entry equal to 1; vectors are ordered by that index."""
        p = self.field.p
        m, n = self.data.shape
        if n == 0:
            return []
        if m == 0:
            return [np.eye(n, dtype=np.int64)[i] for i in range(n)]
        R = self.data.copy()
        r, piv, _ = _kernels.rref_mod(R, p)
        piv = set(int(c) for c in piv)
        vecs = []
        prows = sorted(piv)
        for j in range(n):
            if j in piv:
                continue
            v = np.zeros(n, dtype=np.int64)
            v[j] = 1
            for i, c in enumerate(prows):
                v[c] = (-R[i, j]) % p
            vecs.append(v)
        if not vecs:
            return []
        B = np.array(vecs, dtype=np.int64)
        _kernels.rref_mod(B, p)
        return [B[i] for i in range(B.shape[0])]


def matrix(data, p: int) -> MatrixGF:
    return MatrixGF(data, make_prime_field(p))


def rank(A: MatrixGF) -> int:
    return A.rank()


def det(A: MatrixGF) -> int:
    return A.det()


def nullspace_basis(A: MatrixGF) -> list[np.ndarray]:
    return A.nullspace_basis()


def tensor(A: MatrixGF, B: MatrixGF) -> MatrixGF:
    """Kronecker product with block layout: entry ((i1,i2),(j1,j2)) =
    A[i1,j1] * B[i2,j2], row index i1*rows(B) + i2."""
    if A.field != B.field:
        raise FieldMismatch("tensor factors must share the field")
    return MatrixGF(np.kron(A.data, B.data) % A.field.p, A.field)


def pascal_matrix(p: int) -> MatrixGF:
    """The p x p matrix of binomial coefficients C(i, j) mod p."""
    if p > 64:
        raise TooLarge("pascal_matrix supports p <= 64")
    field = make_prime_field(p)
    data = [[math.comb(i, j) % p for j in range(p)] for i in range(p)]
    return MatrixGF(data, field)


def is_strong_nondegenerate(A: MatrixGF) -> bool:
    """Every size-t row subset against the first t columns has rank t."""
    if A.rows != A.cols:
        raise NotSquare("nondegeneracy is defined for square matrices")
    if A.rows > 16:
        raise TooLarge("strong nondegeneracy check is exhaustive over row "
                       "subsets; size capped at 16")
    return _kernels.is_strong_fast(A.data, A.field.p)


def _weak_progressions(s: int):
    qs = [q for q in range(1, max(2, s)) if math.gcd(q, s) == 1]
    for a in range(s):
        for q in qs:
            yield a, q


def is_weak_nondegenerate(A: MatrixGF) -> bool:
    """Every arithmetic-progression row selection (difference coprime to the
    size, indices mod size) against the leading columns has full rank.

    Selections depend only on the difference mod s, so the difference is
    enumerated over [1, s) coprime to s; for each (shift, difference) all
    prefix lengths t are covered at once by a leading-minor elimination.
    """
    if A.rows != A.cols:
        raise NotSquare("nondegeneracy is defined for square matrices")
    s = A.rows
    if s > 64:
        raise TooLarge("weak nondegeneracy check capped at size 64")
    for a, q in _weak_progressions(s):
        if not _kernels.ap_minors_ok(A.data, a, q, A.field.p):
            return False
    return True


def is_weak_nondegenerate_direct(A: MatrixGF) -> bool:
    """Direct-definition form of the weak predicate (per-t submatrix ranks);
    slow, kept as an independent cross-check of the minor-based kernel."""
    if A.rows != A.cols:
        raise NotSquare("nondegeneracy is defined for square matrices")
    s = A.rows
    for a, q in _weak_progressions(s):
        for t in range(1, s + 1):
            idx = [(a + i * q) % s for i in range(t)]
            assert len(set(idx)) == t
            sub = MatrixGF(A.data[idx][:, :t], A.field)
            if sub.rank(packed=False) < t:
                return False
    return True
