"""Immunity (weak p-degree) of Boolean functions and the composite-modulus
reduction.

The core search grows the zero-set x monomial evaluation matrix one graded
block of columns at a time and stops at the first column that is linearly
dependent on its predecessors; the popcount of that column's monomial is
the immunity and the dependency yields the witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ConstantFunction, SearchBudgetExceeded, TooLarge, CheckFailed
from .gf import factorize, make_prime_field
from .linalg import MatrixGF
from .ring import (BooleanFunction, MultilinearPoly, ideal_member, mod_indicator,
                   monomials_of_degree, monomials_up_to, popcount)

MAX_IMMUNITY_VARS = 20
BRUTE_FORCE_BUDGET = 10 ** 7


@dataclass
class ImmunityReport:
    """Result of an immunity computation.

    degree is None exactly when the function is identically zero (the ideal
    is trivial and has no nonzero member).  When degree is an int and the
    witness was materialized, the witness is nonzero, has that degree, and
    was re-verified against the zero set (checked=True).
    """

    degree: int | None
    witness: MultilinearPoly | None
    method: str
    checked: bool

    def to_json_dict(self) -> dict:
        wit = None
        if self.witness is not None:
            wit = [{"mask": m, "coeff": c}
                   for m, c in self.witness.sorted_terms()]
        return {"degree": self.degree, "method": self.method,
                "witness": wit, "checked": self.checked}


def _monomial_block(points: np.ndarray, masks: list[int]) -> np.ndarray:
    """0/1 evaluation of each monomial mask at each Boolean point."""
    arr = np.asarray(masks, dtype=np.int64)
    return (points[:, None] & arr[None, :] == arr[None, :]).astype(np.int64)


def min_annihilator(zero_points, n: int, p: int, with_witness: bool = True):
    """Smallest degree of a nonzero multilinear polynomial over F_p
    vanishing on all of zero_points, with a canonical witness.

    Returns (degree, witness); (0, constant 1) for an empty point list and
    (None, None) when the points fill the whole cube.  Witness assembly
    redoes a full elimination; pass with_witness=False when only the
    degree is wanted.
    """
    field = make_prime_field(p)
    pts = np.asarray(sorted(zero_points), dtype=np.int64)
    if pts.size == 0:
        return 0, MultilinearPoly.constant(n, field, field.one())
    m = pts.size
    E = np.zeros((m, m), dtype=np.int64)
    rho = np.zeros(m, dtype=np.int64)
    r = 0
    seen: list[int] = []
    for d in range(n + 1):
        masks = monomials_of_degree(n, d)
        block = _monomial_block(pts, masks)
        r, j = _kernels.scan_block(E, rho, r, block, p)
        if j >= 0:
            if not with_witness:
                return d, None
            seen.extend(masks[:j + 1])
            witness = _dependency_witness(pts, seen, n, field)
            return d, witness
        seen.extend(masks)
    return None, None


def _dependency_witness(pts, masks, n, field):
    """Canonical witness from the unique dependency among the given columns:
    first nullspace vector, so the graded-least monomial is monic."""
    M = MatrixGF(_monomial_block(pts, masks), field)
    basis = M.nullspace_basis()
    vec = basis[0]
    return MultilinearPoly(n, field,
                           {mask: int(vec[i]) for i, mask in enumerate(masks)})


def immunity(f: BooleanFunction, p: int,
             with_witness: bool = True) -> ImmunityReport:
    """Minimum degree of a nonzero polynomial in the ideal generated by f
    over F_p, i.e. vanishing on the zero set of f."""
    if f.n > MAX_IMMUNITY_VARS:
        raise TooLarge(f"immunity computation capped at n={MAX_IMMUNITY_VARS}")
    d, witness = min_annihilator(f.zero_set(), f.n, p, with_witness)
    if d is None:
        return ImmunityReport(None, None, "general", True)
    if witness is None:
        return ImmunityReport(d, None, "general", False)
    checked = witness.degree == d and ideal_member(witness, f)
    return ImmunityReport(d, witness, "general", checked)


def two_sided_immunity(f: BooleanFunction, p: int) -> int:
    """min(immunity(f), immunity(1-f)); the cryptographic criterion."""
    if f.is_constant():
        raise ConstantFunction("two-sided immunity needs a nonconstant function")
    return min(immunity(f, p).degree, immunity(f.negate(), p).degree)


def weak_mod_m_degree(f: BooleanFunction, m: int):
    """(degree, prime) where degree = min over prime factors p of m of
    immunity(f, p), and prime is the smallest minimizer."""
    if m < 2:
        raise TooLarge("modulus must be at least 2")
    if not any(f.table):
        return None, None
    best = None
    best_p = None
    for p in sorted(factorize(m)):
        d = immunity(f, p).degree
        if best is None or d < best:
            best, best_p = d, p
    return best, best_p


def _all_vectors(m: int, k: int) -> np.ndarray:
    """All of Z_m^k as rows, lexicographic."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*[np.arange(m)] * k, indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)


def _count_kernel_vectors(A: np.ndarray, m: int) -> int:
    """Number of c in Z_m^k with A c = 0 mod m, by meet-in-the-middle over
    a split of the coordinates (exhaustive; no field structure assumed)."""
    k = A.shape[1]
    k1 = (k + 1) // 2
    left = (_all_vectors(m, k1) @ A[:, :k1].T) % m
    right = (-(_all_vectors(m, k - k1) @ A[:, k1:].T)) % m
    lu, lc = np.unique(left, axis=0, return_counts=True)
    ru, rc = np.unique(right, axis=0, return_counts=True)
    counts = {row.tobytes(): int(c) for row, c in zip(lu, lc)}
    total = 0
    for row, c in zip(ru, rc):
        total += counts.get(row.tobytes(), 0) * int(c)
    return total


def brute_force_weak_mod_m(f: BooleanFunction, m: int, d_max: int):
    """Oracle: smallest d <= d_max such that some multilinear polynomial
    with coefficients in Z_m, not all zero mod m, vanishes mod m on the
    zero set of f.  Returns None when no such d exists ("none <= d_max").

    Solutions over Z_m form no vector space, so candidates are enumerated
    exhaustively; a meet-in-the-middle split keeps the enumeration at
    m^ceil(k/2) instead of m^k, which the budget guard reflects.
    """
    n = f.n
    k_total = sum(math.comb(n, i) for i in range(min(d_max, n) + 1))
    if m ** ((k_total + 1) // 2) > BRUTE_FORCE_BUDGET:
        raise SearchBudgetExceeded(
            f"enumeration would need {m}^{(k_total + 1) // 2} candidates")
    if not any(f.table):
        return None
    zeros = np.asarray(f.zero_set(), dtype=np.int64)
    if zeros.size == 0:
        return 0
    for d in range(min(d_max, n) + 1):
        masks = monomials_up_to(n, d)
        A = _monomial_block(zeros, masks)
        if _count_kernel_vectors(A, m) > 1:
            return d
    return None


@dataclass
class ModBoundsReport:
    n: int
    q: int
    p: int
    chi_immunity: int
    chi_lower_bound: int
    chi_tight_case: bool
    chi_gap: int
    notchi_immunity: int
    notchi_formula: int


def verify_mod_bounds(n: int, q: int, p: int) -> ModBoundsReport:
    """Brute-force immunity of the mod-q indicator and its complement,
    checked against the floor((n+1)/2) lower bound (equality when 2q | n)
    and the exact floor((n+q-1)/q) formula."""
    if n > 14:
        raise TooLarge("verify_mod_bounds capped at n=14")
    chi = mod_indicator(n, q)
    chi_deg = immunity(chi, p).degree
    not_deg = immunity(chi.negate(), p).degree
    lower = (n + 1) // 2
    formula = (n + q - 1) // q
    if chi_deg < lower:
        raise CheckFailed(
            f"mod-{q} indicator immunity {chi_deg} < floor((n+1)/2)={lower} "
            f"at n={n}, p={p}")
    if n % (2 * q) == 0 and chi_deg != lower:
        raise CheckFailed(
            f"mod-{q} indicator immunity {chi_deg} != {lower} although "
            f"2q divides n={n}, p={p}")
    if not_deg != formula:
        raise CheckFailed(
            f"complement immunity {not_deg} != floor((n+q-1)/q)={formula} "
            f"at n={n}, q={q}, p={p}")
    return ModBoundsReport(n, q, p, chi_deg, lower, n % (2 * q) == 0,
                           chi_deg - lower, not_deg, formula)
