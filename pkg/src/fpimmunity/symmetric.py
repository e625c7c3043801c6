"""Symmetric-function machinery.

A symmetric element of F_p[x1..xn]/(xi^2=xi) is determined by its value
vector v(0..n) on Hamming weights, or equivalently by its coefficient
vector c(0..n) in the elementary-symmetric basis.  The two are linked by
the binomial (zeta) transform and its Mobius inverse; annihilator-degree
questions reduce to ranks of small binomial-coefficient matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadRange, BadShape, CheckFailed, NotCoprime, ZeroFunction
from .gf import make_prime_field
from .immunity import ImmunityReport
from .linalg import MatrixGF
from .ring import BooleanFunction, MultilinearPoly, ideal_member

WITNESS_ARITY_CAP = 16


def lucas_binomial(w: int, k: int, p: int) -> int:
    """C(w, k) mod p as the product of base-p digit binomials."""
    if w < 0 or k < 0:
        raise BadRange("arguments must be nonnegative")
    out = 1
    while k or w:
        wd, kd = w % p, k % p
        if kd > wd:
            return 0
        out = out * (math.comb(wd, kd) % p) % p
        w //= p
        k //= p
    return out


def values_from_coeffs(coeffs, p: int) -> tuple[int, ...]:
    """v(i) = sum_{j<=i} C(i,j) c(j) mod p (binomial/zeta transform)."""
    c = [x % p for x in coeffs]
    return tuple(sum(math.comb(i, j) * c[j] for j in range(i + 1)) % p
                 for i in range(len(c)))


def coeffs_from_values(values, p: int) -> tuple[int, ...]:
    """c(i) = sum_{j<=i} (-1)^(i+j) C(i,j) v(j) mod p (Mobius inverse)."""
    v = [x % p for x in values]
    return tuple(sum((-1) ** (i + j) * math.comb(i, j) * v[j]
                     for j in range(i + 1)) % p
                 for i in range(len(v)))


@dataclass(frozen=True)
class SymmetricFn:
    """Symmetric ring element given by weight values and sigma-basis coeffs."""

    n: int
    p: int
    values: tuple[int, ...]
    coeffs: tuple[int, ...]

    @classmethod
    def from_values(cls, values, p: int) -> "SymmetricFn":
        values = tuple(x % p for x in values)
        return cls(len(values) - 1, p, values, coeffs_from_values(values, p))

    @classmethod
    def from_coeffs(cls, coeffs, p: int) -> "SymmetricFn":
        coeffs = tuple(x % p for x in coeffs)
        return cls(len(coeffs) - 1, p, values_from_coeffs(coeffs, p), coeffs)

    @classmethod
    def mod_indicator(cls, n: int, q: int, p: int) -> "SymmetricFn":
        return cls.from_values([1 if w % q == 0 else 0 for w in range(n + 1)], p)

    @property
    def degree(self) -> int | None:
        nz = [i for i, c in enumerate(self.coeffs) if c]
        return max(nz) if nz else None

    def is_zero(self) -> bool:
        return not any(self.values)

    def zero_weights(self) -> list[int]:
        return [w for w, v in enumerate(self.values) if v == 0]

    def support_function(self) -> BooleanFunction:
        """Boolean function with the same zero set (1 where the value is
        nonzero); used for ideal-membership checks."""
        return BooleanFunction.from_weight_values(
            self.n, [1 if v else 0 for v in self.values])


def psi(d: int, i: int, p: int) -> tuple[int, ...]:
    """(C(i,0), C(i,1), ..., C(i,d-1)) mod p: the evaluations of the first
    d elementary symmetric polynomials at weight i."""
    if d < 1 or i < 0:
        raise BadRange("need d >= 1 and i >= 0")
    return tuple(lucas_binomial(i, j, p) for j in range(d))


def psi_matrix(d: int, weights, p: int) -> MatrixGF:
    field = make_prime_field(p)
    rows = [psi(d, w, p) for w in weights]
    data = np.array(rows, dtype=np.int64) if rows else np.zeros((0, d), np.int64)
    return MatrixGF(data, field)


def restrict_sym(f: SymmetricFn, ell: int) -> SymmetricFn:
    """Pin ell variables to 1 and ell to 0: the value vector becomes the
    middle slice v(ell .. n-ell) on n-2*ell variables."""
    if not 0 <= ell <= f.n // 2:
        raise BadRange(f"ell must be in [0, {f.n // 2}]")
    return SymmetricFn.from_values(f.values[ell:f.n - ell + 1], f.p)


def min_symmetric_annihilator_degree(f: SymmetricFn) -> int | None:
    """Smallest D such that a nonzero symmetric polynomial of degree <= D
    vanishes on every zero weight of f; None when f is identically zero."""
    zw = f.zero_weights()
    if not zw:
        return 0
    if f.is_zero():
        return None
    for D in range(f.n + 1):
        if psi_matrix(D + 1, zw, f.p).rank() <= D:
            return D
    return None


def _sigma_poly(n, field, coeff_vec, var_offset):
    """sum_i c_i * sigma_i over the variables x_{var_offset+1}..x_n."""
    from itertools import combinations
    terms = {}
    variables = range(var_offset, n)
    for i, c in enumerate(coeff_vec):
        c = c % field.p
        if not c:
            continue
        for bits in combinations(variables, i):
            mask = 0
            for b in bits:
                mask |= 1 << b
            terms[mask] = c
    return MultilinearPoly(n, field, terms)


def _pair_product(n, field, ell):
    """prod_{j=1..ell} (x_{2j-1} - x_{2j})."""
    out = MultilinearPoly.constant(n, field, field.one())
    for j in range(ell):
        pair = MultilinearPoly(n, field, {1 << (2 * j): field.one(),
                                          1 << (2 * j + 1): field.neg(field.one())})
        out = out.mul(pair)
    return out


def symmetric_immunity(f: SymmetricFn, with_witness: bool = True) -> ImmunityReport:
    """Immunity of a symmetric function via the symmetrized-annihilator
    form: minimize ell + (min symmetric annihilator degree of the middle
    slice) over ell, then lift the slice's annihilator back by the
    alternating pair product.

    Witness assembly materializes up to C(n, degree) monomials; pass
    with_witness=False for large n when only the degree is wanted.
    """
    if f.is_zero():
        raise ZeroFunction("the zero function generates the trivial ideal")
    best: int | None = None
    best_ell = 0
    best_inner = 0
    for ell in range(f.n // 2 + 1):
        if best is not None and ell >= best:
            break
        inner = min_symmetric_annihilator_degree(restrict_sym(f, ell))
        if inner is None:
            continue
        if best is None or ell + inner < best:
            best = ell + inner
            best_ell, best_inner = ell, inner
    assert best is not None
    if not with_witness or f.n > WITNESS_ARITY_CAP:
        return ImmunityReport(best, None, "symmetric", False)
    field = make_prime_field(f.p)
    slice_fn = restrict_sym(f, best_ell)
    system = psi_matrix(best_inner + 1, slice_fn.zero_weights(), f.p)
    coeff_vec = system.nullspace_basis()[0]
    inner_poly = _sigma_poly(f.n, field, [int(c) for c in coeff_vec], 2 * best_ell)
    witness = inner_poly.mul(_pair_product(f.n, field, best_ell))
    checked = (witness.degree == best
               and ideal_member(witness, f.support_function()))
    return ImmunityReport(best, witness, "symmetric", checked)


def reflex_dual_exists(S, d: int, n: int, p: int, direction: str) -> bool:
    """Reflexive duality instances.

    direction "value_support": is there a nonzero symmetric function of
    degree < d whose weight-value support lies in S?
    direction "monomial_support": is there a nonzero symmetric function
    with sigma-coefficient support in S vanishing on all weights >= d?
    The two answers always agree.
    """
    S = set(S)
    if not S <= set(range(n + 1)):
        raise BadRange("S must be a subset of {0..n}")
    if not S or d < 1:
        return False
    if direction == "value_support":
        cols = min(d, n + 1)
        outside = [w for w in range(n + 1) if w not in S]
        return psi_matrix(cols, outside, p).rank() < cols
    if direction == "monomial_support":
        js = sorted(S)
        rows = [[lucas_binomial(w, j, p) for j in js] for w in range(d, n + 1)]
        data = (np.array(rows, dtype=np.int64) if rows
                else np.zeros((0, len(js)), np.int64))
        return MatrixGF(data, make_prime_field(p)).rank() < len(js)
    raise BadRange(f"unknown direction {direction!r}")


@dataclass
class RestrictionBoundReport:
    n: int
    q: int
    p: int
    ell: int
    lower_bound: float
    measured: int
    solvability_upper: int
    reported_upper: int


def restriction_bound_check(n: int, q: int, p: int) -> RestrictionBoundReport:
    """Measure the true minimum degree of a nonzero symmetric member of the
    mod-q indicator ideal and check it against the restriction lower bound
    (n - n') (1 - p^-ell), ell = floor(log_p(q-1)), n' the excess of n+1
    over the largest power of p below it.

    Requires gcd(p, q) = 1: the injectivity argument behind the bound
    divides by q mod p, and the bound is false without it (at n=7, q=4,
    p=2 the degree-3 member sigma_0+...+sigma_3 beats the claimed 3.5).
    """
    if n > 200:
        raise BadShape("restriction_bound_check capped at n=200")
    if q < 2:
        raise BadRange("need q >= 2")
    ell = 0
    while p ** (ell + 1) <= q - 1:
        ell += 1
    if q % p == 0 and ell >= 1:
        raise NotCoprime(f"the restriction bound needs gcd({p}, {q}) = 1")
    chi = SymmetricFn.mod_indicator(n, q, p)
    # symmetric members of the ideal vanish on the non-multiples of q,
    # i.e. on the zero weights of the indicator itself
    measured = min_symmetric_annihilator_degree(chi)
    power = 1
    while power * p <= n + 1:
        power *= p
    n_prime = n + 1 - power
    bound = (n - n_prime) * (1 - p ** (-ell)) if ell else 0.0
    if measured < bound:
        raise CheckFailed(
            f"measured minimum symmetric degree {measured} below restriction "
            f"bound {bound} at n={n}, q={q}, p={p}")
    solvable = n - n // q  # zero-weight count: a solvable linear system
    if measured > solvable:
        raise CheckFailed(
            f"measured minimum symmetric degree {measured} exceeds the "
            f"solvability bound {solvable} at n={n}, q={q}, p={p}")
    return RestrictionBoundReport(n, q, p, ell, bound, measured,
                                  solvable, n - n // q - 1)
