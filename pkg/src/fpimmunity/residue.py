"""The q-th power residue character on F_{2^n}, pulled back to the Boolean
cube through a basis, and the counting bound on its immunity."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadShape, NotDivisor, TooLarge
from .gf import ExtFieldCtx, element_order, first_primitive_element, make_ext_field
from .hilbert import binom_sum
from .immunity import immunity
from .ring import BooleanFunction

MAX_FIELD_BITS = 16


@dataclass(frozen=True)
class BinaryFieldMap:
    """F_{2^n} together with a basis over F_2 and a fixed generator.

    The basis defines the coordinate map from {0,1}^n into the field;
    basis_name records how it was constructed so runs are reproducible.
    """

    ext: ExtFieldCtx
    basis: tuple
    xi: tuple
    basis_name: str

    @property
    def n(self) -> int:
        return self.ext.k

    def phi(self, x: int):
        """sum of basis elements selected by the bits of x."""
        acc = self.ext.zero()
        for i in range(self.n):
            if x >> i & 1:
                acc = self.ext.add(acc, self.basis[i])
        return acc


def build_binary_field(n: int) -> BinaryFieldMap:
    """Deterministic F_{2^n}: first irreducible modulus, xi = the variable
    class when primitive (else the first primitive element), basis = powers
    of xi."""
    if n < 2:
        raise BadShape("need n >= 2")
    if n > MAX_FIELD_BITS:
        raise TooLarge(f"binary field construction capped at n={MAX_FIELD_BITS}")
    ext = make_ext_field(2, n)
    z = ext.gen()
    if element_order(ext, z) == ext.size - 1:
        xi = z
    else:
        xi = first_primitive_element(ext)
    basis = tuple(ext.pow_(xi, i) for i in range(n))
    return BinaryFieldMap(ext, basis, xi, "polynomial")


def with_random_basis(bfm: BinaryFieldMap, seed: int) -> BinaryFieldMap:
    """Replace the basis by a seeded random invertible F_2 change of basis
    applied to the power basis."""
    rng = np.random.RandomState(seed)
    n = bfm.n
    while True:
        M = rng.randint(0, 2, size=(n, n))
        if _gf2_invertible(M):
            break
    ext = bfm.ext
    powers = [ext.pow_(bfm.xi, j) for j in range(n)]
    basis = []
    for i in range(n):
        acc = ext.zero()
        for j in range(n):
            if M[i, j]:
                acc = ext.add(acc, powers[j])
        basis.append(acc)
    return BinaryFieldMap(ext, tuple(basis), bfm.xi, f"random:{seed}")


def _gf2_invertible(M) -> bool:
    from ._kernels import rank_gf2_packed
    return rank_gf2_packed(np.asarray(M)) == M.shape[0]


def make_basis(n: int, spec: str) -> BinaryFieldMap:
    """Basis from a CLI-style spec: 'polynomial' or 'random:SEED'."""
    bfm = build_binary_field(n)
    if spec == "polynomial":
        return bfm
    if spec.startswith("random:"):
        return with_random_basis(bfm, int(spec.split(":", 1)[1]))
    raise BadShape(f"unknown basis spec {spec!r}")


def residue_character(bfm: BinaryFieldMap, q: int) -> BooleanFunction:
    """Indicator of being a q-th power in F_{2^n} (including 0 = 0^q),
    as a Boolean function of the basis coordinates."""
    n = bfm.n
    group = bfm.ext.size - 1
    if q < 1 or group % q != 0:
        raise NotDivisor(f"{q} does not divide 2^{n}-1")
    t = group // q
    ones = {bfm.ext.zero()}
    xq = bfm.ext.pow_(bfm.xi, q)
    acc = bfm.ext.one()
    for _ in range(t):
        ones.add(acc)
        acc = bfm.ext.mul(acc, xq)
    table = [1 if bfm.phi(x) in ones else 0 for x in range(1 << n)]
    return BooleanFunction(n, table)


def univariate_weight_degree(exponents) -> int | None:
    """Max binary popcount over the exponent support; this equals the
    multilinear degree of the corresponding n-variable function."""
    exps = list(exponents)
    if not exps:
        return None
    return max(bin(e).count("1") for e in exps)


def rank_over_field(rows, ctx) -> int:
    """Rank of a small matrix whose entries are elements of ctx (used for
    the power-evaluation systems over F_{2^n})."""
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows))
                    if not ctx.is_zero(rows[i][col])), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = ctx.inv(rows[rank][col])
        rows[rank] = [ctx.mul(v, inv) for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not ctx.is_zero(rows[i][col]):
                c = rows[i][col]
                rows[i] = [ctx.sub(a, ctx.mul(c, b))
                           for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def power_system_rank(bfm: BinaryFieldMap, q: int, d: int) -> tuple[int, int]:
    """(rank, columns) of the matrix evaluating the monomials x^i with
    popcount(i) <= d at 0 and at every q-th power in F_{2^n}."""
    n = bfm.n
    group = bfm.ext.size - 1
    if q < 1 or group % q != 0:
        raise NotDivisor(f"{q} does not divide 2^{n}-1")
    exps = [i for i in range(1 << n) if bin(i).count("1") <= d]
    points = [bfm.ext.zero()]
    acc = bfm.ext.one()
    xq = bfm.ext.pow_(bfm.xi, q)
    for _ in range(group // q):
        points.append(acc)
        acc = bfm.ext.mul(acc, xq)
    rows = [[bfm.ext.one() if i == 0 else bfm.ext.pow_(x, i) for i in exps]
            for x in points]
    return rank_over_field(rows, bfm.ext), len(exps)


@dataclass
class ResidueReport:
    n: int
    q: int
    basis: str
    bound_d: int
    measured_immunity: int
    passed: bool

    def to_json_dict(self):
        return {"n": self.n, "q": self.q, "basis": self.basis,
                "bound_d": self.bound_d,
                "measured_immunity": self.measured_immunity,
                "pass": self.passed}


def verify_residue_immunity(n: int, q: int,
                            basis: str = "polynomial") -> ResidueReport:
    """Measure the immunity of the complement of the residue character and
    compare it with the counting bound: immunity exceeds the largest d with
    C(n, <=d) <= 2^n / q."""
    if n > 12:
        raise TooLarge("verify_residue_immunity capped at n=12")
    bfm = make_basis(n, basis)
    lam = residue_character(bfm, q)
    bound_d = 0
    while bound_d + 1 <= n and binom_sum(n, bound_d + 1) * q <= (1 << n):
        bound_d += 1
    measured = immunity(lam.negate(), 2).degree
    return ResidueReport(n, q, basis, bound_d, measured, measured > bound_d)
