"""Hot numeric kernels: exact row reduction mod p and nondegeneracy scans.

Every kernel exists twice: a numba @njit version and a pure-numpy version.
Set FPIMMUNITY_PURE_NUMPY=1 to force the numpy path (the numba path is the
default when numba imports cleanly).  `benchmarks/bench_kernels.py` compares
the two.
"""

from __future__ import annotations

import math
import os

import numpy as np

PURE_NUMPY = os.environ.get("FPIMMUNITY_PURE_NUMPY", "0") not in ("", "0")

if not PURE_NUMPY:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        PURE_NUMPY = True

HAVE_NUMBA = not PURE_NUMPY


# ---------------------------------------------------------------------------
# pure numpy implementations
# ---------------------------------------------------------------------------


def _rref_np(M: np.ndarray, p: int):
    """In-place reduced row echelon form mod p.

    Returns (rank, pivot_cols, det_unit) where det_unit is the product of
    the pivot values times the swap sign, mod p.  The determinant of a
    square M is det_unit when rank is full, else 0.
    """
    m, n = M.shape
    pivots = []
    det_unit = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        col = M[r:, c] % p
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
            det_unit = (-det_unit) % p
        v = int(M[r, c]) % p
        det_unit = det_unit * v % p
        M[r] = M[r] * pow(v, p - 2, p) % p
        rows = np.nonzero(M[:, c] % p)[0]
        rows = rows[rows != r]
        if rows.size:
            M[rows] = (M[rows] - np.outer(M[rows, c], M[r])) % p
        pivots.append(c)
        r += 1
    return r, np.array(pivots, dtype=np.int64), det_unit % p


def _scan_block_np(E: np.ndarray, rho: np.ndarray, r: int,
                   block: np.ndarray, p: int):
    """Append columns of `block` to the column-echelon state (E, rho, r).

    E holds fully reduced pivot columns: E[rho[t], t] == 1 and
    E[rho[s], t] == 0 for s != t.  Returns (new_r, j) where j is the index
    within `block` of the first column dependent on all previous columns,
    or -1 if every column was independent.
    """
    m, k = block.shape
    for j in range(k):
        v = block[:, j].astype(np.int64) % p
        if r:
            coeffs = v[rho[:r]]
            v = (v - E[:, :r] @ coeffs) % p
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return r, j
        piv = int(nz[0])
        v = v * pow(int(v[piv]), p - 2, p) % p
        if r:
            f = E[piv, :r].copy()
            cols = np.nonzero(f)[0]
            if cols.size:
                E[:, cols] = (E[:, cols] - np.outer(v, f[cols])) % p
        E[:, r] = v
        rho[r] = piv
        r += 1
    return r, -1


def _rank_gf2_packed_np(M: np.ndarray) -> int:
    """GF(2) rank of a 0/1 matrix via word-packed XOR elimination."""
    m, n = M.shape
    if m == 0 or n == 0:
        return 0
    nw = (n + 63) // 64
    W = np.zeros((m, nw), dtype=np.uint64)
    for w in range(nw):
        chunk = M[:, w * 64:(w + 1) * 64].astype(np.uint64) & np.uint64(1)
        for b in range(chunk.shape[1]):
            W[:, w] |= chunk[:, b] << np.uint64(b)
    r = 0
    for c in range(n):
        if r == m:
            break
        w, b = divmod(c, 64)
        bits = (W[r:, w] >> np.uint64(b)) & np.uint64(1)
        nz = np.nonzero(bits)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            W[[r, i]] = W[[i, r]]
        below = (W[r + 1:, w] >> np.uint64(b)) & np.uint64(1)
        sel = np.nonzero(below)[0]
        if sel.size:
            W[r + 1 + sel] ^= W[r]
        r += 1
    return r


def _ap_minors_ok_np(A: np.ndarray, a: int, q: int, p: int) -> bool:
    """True iff every leading t x t minor of the row sequence
    a, a+q, a+2q, ... (mod size) is nonzero mod p."""
    s = A.shape[0]
    idx = [(a + i * q) % s for i in range(s)]
    U = A[idx].astype(np.int64) % p
    for t in range(s):
        piv = int(U[t, t])
        if piv == 0:
            return False
        inv = pow(piv, p - 2, p)
        for i in range(t + 1, s):
            f = U[i, t] * inv % p
            if f:
                U[i, t:] = (U[i, t:] - f * U[t, t:]) % p
    return True


def _rank_np(M: np.ndarray, p: int) -> int:
    r, _, _ = _rref_np(M.astype(np.int64) % p, p)
    return r


def _is_strong_np(A: np.ndarray, p: int) -> bool:
    s = A.shape[0]
    for sub in range(1, 1 << s):
        rows = [i for i in range(s) if sub >> i & 1]
        t = len(rows)
        if _rank_np(A[rows][:, :t], p) < t:
            return False
    return True


def _tensor_pairs_weak_np(As, Bs, p):
    sa, sb = As.shape[1], Bs.shape[1]
    s = sa * sb
    qs = [q for q in range(1, max(2, s)) if math.gcd(q, s) == 1]
    for ia in range(As.shape[0]):
        for ib in range(Bs.shape[0]):
            T = np.kron(As[ia], Bs[ib]) % p
            for a in range(s):
                for q in qs:
                    if not _ap_minors_ok_np(T, a, q, p):
                        return ia, ib, a, q
    return -1, -1, -1, -1


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _powmod_nb(a, e, p):
        result = 1
        a %= p
        while e:
            if e & 1:
                result = result * a % p
            a = a * a % p
            e >>= 1
        return result

    @njit(cache=True)
    def _rref_nb(M, p):
        m, n = M.shape
        pivots = np.empty(min(m, n), dtype=np.int64)
        det_unit = 1
        r = 0
        for c in range(n):
            if r == m:
                break
            piv_row = -1
            for i in range(r, m):
                if M[i, c] % p:
                    piv_row = i
                    break
            if piv_row == -1:
                continue
            if piv_row != r:
                for j in range(n):
                    tmp = M[r, j]
                    M[r, j] = M[piv_row, j]
                    M[piv_row, j] = tmp
                det_unit = (-det_unit) % p
            v = M[r, c] % p
            det_unit = det_unit * v % p
            inv = _powmod_nb(v, p - 2, p)
            for j in range(n):
                M[r, j] = M[r, j] * inv % p
            for i in range(m):
                if i != r and M[i, c] % p:
                    f = M[i, c] % p
                    for j in range(n):
                        M[i, j] = (M[i, j] - f * M[r, j]) % p
            pivots[r] = c
            r += 1
        return r, pivots[:r].copy(), det_unit % p

    @njit(cache=True)
    def _scan_block_nb(E, rho, r, block, p):
        m, k = block.shape
        v = np.empty(m, dtype=np.int64)
        for j in range(k):
            for i in range(m):
                v[i] = block[i, j] % p
            for t in range(r):
                a = v[rho[t]]
                if a:
                    for i in range(m):
                        v[i] = (v[i] - a * E[i, t]) % p
            piv = -1
            for i in range(m):
                if v[i]:
                    piv = i
                    break
            if piv == -1:
                return r, j
            inv = _powmod_nb(v[piv], p - 2, p)
            for i in range(m):
                v[i] = v[i] * inv % p
            for t in range(r):
                f = E[piv, t]
                if f:
                    for i in range(m):
                        E[i, t] = (E[i, t] - f * v[i]) % p
            for i in range(m):
                E[i, r] = v[i]
            rho[r] = piv
            r += 1
        return r, -1

    @njit(cache=True)
    def _rank_gf2_packed_nb(M):
        m, n = M.shape
        if m == 0 or n == 0:
            return 0
        nw = (n + 63) // 64
        W = np.zeros((m, nw), dtype=np.uint64)
        for i in range(m):
            for c in range(n):
                if M[i, c] & 1:
                    W[i, c // 64] |= np.uint64(1) << np.uint64(c % 64)
        r = 0
        for c in range(n):
            if r == m:
                break
            w = c // 64
            bit = np.uint64(1) << np.uint64(c % 64)
            piv = -1
            for i in range(r, m):
                if W[i, w] & bit:
                    piv = i
                    break
            if piv == -1:
                continue
            if piv != r:
                for t in range(nw):
                    tmp = W[r, t]
                    W[r, t] = W[piv, t]
                    W[piv, t] = tmp
            for i in range(r + 1, m):
                if W[i, w] & bit:
                    for t in range(nw):
                        W[i, t] ^= W[r, t]
            r += 1
        return r

    @njit(cache=True)
    def _ap_minors_ok_nb(A, a, q, p):
        s = A.shape[0]
        U = np.empty((s, s), dtype=np.int64)
        for i in range(s):
            ri = (a + i * q) % s
            for j in range(s):
                U[i, j] = A[ri, j] % p
        for t in range(s):
            piv = U[t, t]
            if piv == 0:
                return False
            inv = _powmod_nb(piv, p - 2, p)
            for i in range(t + 1, s):
                f = U[i, t] * inv % p
                if f:
                    for j in range(t, s):
                        U[i, j] = (U[i, j] - f * U[t, j]) % p
        return True

    @njit(cache=True)
    def _rank_small_nb(A, p):
        m, n = A.shape
        U = A.copy()
        r = 0
        for c in range(n):
            if r == m:
                break
            piv = -1
            for i in range(r, m):
                if U[i, c] % p:
                    piv = i
                    break
            if piv == -1:
                continue
            if piv != r:
                for j in range(n):
                    tmp = U[r, j]
                    U[r, j] = U[piv, j]
                    U[piv, j] = tmp
            inv = _powmod_nb(U[r, c] % p, p - 2, p)
            for i in range(r + 1, m):
                f = U[i, c] * inv % p
                if f:
                    for j in range(n):
                        U[i, j] = (U[i, j] - f * U[r, j]) % p
            r += 1
        return r

    @njit(cache=True)
    def _is_strong_nb(A, p):
        s = A.shape[0]
        for sub in range(1, 1 << s):
            t = 0
            for i in range(s):
                if sub >> i & 1:
                    t += 1
            S = np.empty((t, t), dtype=np.int64)
            ri = 0
            for i in range(s):
                if sub >> i & 1:
                    for j in range(t):
                        S[ri, j] = A[i, j]
                    ri += 1
            if _rank_small_nb(S, p) < t:
                return False
        return True

    @njit(cache=True)
    def _tensor_pairs_weak_nb(As, Bs, qs, p):
        na, sa = As.shape[0], As.shape[1]
        nb, sb = Bs.shape[0], Bs.shape[1]
        s = sa * sb
        T = np.empty((s, s), dtype=np.int64)
        for ia in range(na):
            for ib in range(nb):
                for i1 in range(sa):
                    for i2 in range(sb):
                        for j1 in range(sa):
                            for j2 in range(sb):
                                T[i1 * sb + i2, j1 * sb + j2] = (
                                    As[ia, i1, j1] * Bs[ib, i2, j2] % p)
                for a in range(s):
                    for qi in range(qs.shape[0]):
                        if not _ap_minors_ok_nb(T, a, qs[qi], p):
                            return ia, ib, a, qs[qi]
        return -1, -1, -1, -1


# ---------------------------------------------------------------------------
# dispatchers
# ---------------------------------------------------------------------------


def rref_mod(M: np.ndarray, p: int):
    """Reduced row echelon form of M (modified in place, int64, entries
    reduced mod p).  Returns (rank, pivot_cols, det_unit)."""
    if HAVE_NUMBA:
        return _rref_nb(M, p)
    return _rref_np(M, p)


def scan_block(E, rho, r, block, p):
    if HAVE_NUMBA:
        return _scan_block_nb(E, rho, r, block, p)
    return _scan_block_np(E, rho, r, block, p)


def rank_gf2_packed(M: np.ndarray) -> int:
    if HAVE_NUMBA:
        return int(_rank_gf2_packed_nb(np.ascontiguousarray(M, dtype=np.int64)))
    return _rank_gf2_packed_np(M)


def ap_minors_ok(A: np.ndarray, a: int, q: int, p: int) -> bool:
    if HAVE_NUMBA:
        return bool(_ap_minors_ok_nb(np.ascontiguousarray(A, dtype=np.int64), a, q, p))
    return _ap_minors_ok_np(A, a, q, p)


def is_strong_fast(A: np.ndarray, p: int) -> bool:
    if HAVE_NUMBA:
        return bool(_is_strong_nb(np.ascontiguousarray(A, dtype=np.int64), p))
    return _is_strong_np(A, p)


def tensor_pairs_weak(As: np.ndarray, Bs: np.ndarray, p: int):
    """Check is-weak-nondegenerate for the tensor of every (A, B) pair.
    Returns (-1, -1, -1, -1) if all pass, else the first failing
    (index_a, index_b, shift, step)."""
    if HAVE_NUMBA:
        s = As.shape[1] * Bs.shape[1]
        qs = np.array([q for q in range(1, max(2, s))
                       if math.gcd(q, s) == 1], dtype=np.int64)
        return tuple(int(x) for x in _tensor_pairs_weak_nb(
            np.ascontiguousarray(As, dtype=np.int64),
            np.ascontiguousarray(Bs, dtype=np.int64), qs, p))
    return _tensor_pairs_weak_np(As, Bs, p)
