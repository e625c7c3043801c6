"""Multilinear polynomials in F[x1..xn]/(xi^2 = xi) and Boolean functions.

Monomials are n-bit masks (bit i set means xi occurs).  Coefficients live
in a PrimeFieldCtx or ExtFieldCtx; the zero polynomial stores no terms and
reports degree None.
"""

from __future__ import annotations

import math

from .errors import ArityMismatch, BadShape, FieldMismatch, NotCoprime, NotRootOfUnity, TooLarge
from .gf import find_root_of_unity, make_prime_field

MAX_VARS = 24


def popcount(x: int) -> int:
    return bin(x).count("1")


def monomial_key(mask: int) -> tuple[int, int]:
    """Graded order: total degree first, then the integer mask."""
    return (popcount(mask), mask)


def monomials_of_degree(n: int, d: int) -> list[int]:
    return sorted(m for m in _masks_of_weight(n, d))


def _masks_of_weight(n: int, d: int):
    from itertools import combinations
    for bits in combinations(range(n), d):
        m = 0
        for b in bits:
            m |= 1 << b
        yield m


def monomials_up_to(n: int, d: int) -> list[int]:
    out = []
    for k in range(d + 1):
        out.extend(monomials_of_degree(n, k))
    return out


class BooleanFunction:
    """Total map {0,1}^n -> {0,1} as a truth table, little-endian index
    order: bit i of the table index is the value of xi."""

    __slots__ = ("n", "table")

    def __init__(self, n: int, table):
        if n < 0 or n > MAX_VARS:
            raise TooLarge(f"arity must be in [0, {MAX_VARS}]")
        table = tuple(int(b) for b in table)
        if len(table) != 1 << n:
            raise BadShape(f"table length {len(table)} != 2^{n}")
        if any(b not in (0, 1) for b in table):
            raise BadShape("table entries must be 0 or 1")
        self.n = n
        self.table = table

    def __eq__(self, other):
        return (isinstance(other, BooleanFunction)
                and self.n == other.n and self.table == other.table)

    def __hash__(self):
        return hash((self.n, self.table))

    def value(self, x: int) -> int:
        return self.table[x]

    def zero_set(self) -> list[int]:
        return [x for x, b in enumerate(self.table) if b == 0]

    def one_set(self) -> list[int]:
        return [x for x, b in enumerate(self.table) if b == 1]

    def negate(self) -> "BooleanFunction":
        return BooleanFunction(self.n, tuple(1 - b for b in self.table))

    def is_constant(self) -> bool:
        return len(set(self.table)) == 1

    @classmethod
    def from_weight_values(cls, n: int, weight_values) -> "BooleanFunction":
        """Symmetric function from its length-(n+1) weight value vector."""
        wv = tuple(int(v) for v in weight_values)
        if len(wv) != n + 1:
            raise BadShape("need n+1 weight values")
        return cls(n, tuple(wv[popcount(x)] for x in range(1 << n)))


def mod_indicator(n: int, q: int) -> BooleanFunction:
    """The weight-divisibility indicator: 1 iff q divides |x|."""
    if n < 1 or q < 2:
        raise BadShape("need n >= 1 and q >= 2")
    return BooleanFunction.from_weight_values(
        n, [1 if w % q == 0 else 0 for w in range(n + 1)])


def parse_truth_table(text: str) -> tuple[BooleanFunction, int]:
    """Text format: first line 'n p', second line 2^n characters of {0,1}."""
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if len(lines) < 2:
        raise BadShape("truth-table text needs two lines: 'n p' then bits")
    parts = lines[0].split()
    if len(parts) != 2:
        raise BadShape("first line must be 'n p'")
    n, p = int(parts[0]), int(parts[1])
    bits = lines[1]
    if len(bits) != 1 << n or set(bits) - {"0", "1"}:
        raise BadShape(f"second line must be 2^{n} characters over {{0,1}}")
    return BooleanFunction(n, [int(c) for c in bits]), p


def format_truth_table(f: BooleanFunction, p: int) -> str:
    return f"{f.n} {p}\n" + "".join(str(b) for b in f.table) + "\n"


class MultilinearPoly:
    """Multilinear polynomial: mask -> nonzero field coefficient."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field, terms: dict | None = None):
        if n < 0 or n > MAX_VARS:
            raise TooLarge(f"arity must be in [0, {MAX_VARS}]")
        self.n = n
        self.field = field
        clean = {}
        for mask, c in (terms or {}).items():
            if mask < 0 or mask >= (1 << n):
                raise ArityMismatch(f"monomial mask {mask} out of range")
            if not field.is_zero(c):
                clean[mask] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n, field):
        return cls(n, field, {})

    @classmethod
    def constant(cls, n, field, c):
        return cls(n, field, {0: c})

    @classmethod
    def variable(cls, n, field, i):
        if not 0 <= i < n:
            raise ArityMismatch(f"variable index {i} out of range")
        return cls(n, field, {1 << i: field.one()})

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(popcount(m) for m in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, MultilinearPoly) and self.n == other.n
                and self.field == other.field and self.terms == other.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: monomial_key(kv[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for mask, c in self.sorted_terms():
            mono = "*".join(f"x{i+1}" for i in range(self.n) if mask >> i & 1)
            bits.append(f"{c}" if not mono else f"{c}*{mono}")
        return " + ".join(bits)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.n != other.n:
            raise ArityMismatch("polynomials have different arity")
        if self.field != other.field:
            raise FieldMismatch("polynomials live over different fields")

    def add(self, other) -> "MultilinearPoly":
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = F.add(out.get(m, F.zero()), c)
        return MultilinearPoly(self.n, F, out)

    def sub(self, other) -> "MultilinearPoly":
        return self.add(other.scale(self.field.neg(self.field.one())))

    def scale(self, c) -> "MultilinearPoly":
        F = self.field
        return MultilinearPoly(self.n, F,
                               {m: F.mul(v, c) for m, v in self.terms.items()})

    def mul(self, other) -> "MultilinearPoly":
        """Product with idempotent reduction: exponent addition becomes
        mask union, so the result matches the pointwise product on {0,1}^n."""
        self._check(other)
        F = self.field
        out: dict[int, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 | m2
                prod = F.mul(c1, c2)
                out[m] = F.add(out.get(m, F.zero()), prod)
        return MultilinearPoly(self.n, F, out)

    def evaluate(self, point):
        """Value at a Boolean point (int mask or bit sequence)."""
        if not isinstance(point, int):
            bits = list(point)
            if len(bits) != self.n:
                raise ArityMismatch("point length must equal arity")
            point = sum(1 << i for i, b in enumerate(bits) if b)
        F = self.field
        acc = F.zero()
        for m, c in self.terms.items():
            if m & point == m:
                acc = F.add(acc, c)
        return acc

    def restrict(self, assignment: dict[int, int]) -> "MultilinearPoly":
        """Substitute xi := bit for (i, bit) in assignment (0-based vars).
        The result keeps arity n; assigned variables no longer occur."""
        for i in assignment:
            if not 0 <= i < self.n:
                raise ArityMismatch(f"variable index {i} out of range")
        F = self.field
        out: dict[int, object] = {}
        for m, c in self.terms.items():
            keep = m
            dead = False
            for i, b in assignment.items():
                if m >> i & 1:
                    if b:
                        keep &= ~(1 << i)
                    else:
                        dead = True
                        break
            if not dead:
                out[keep] = F.add(out.get(keep, F.zero()), c)
        return MultilinearPoly(self.n, F, out)


def from_truth_table(values, n: int, field) -> MultilinearPoly:
    """Multilinear normal form of an arbitrary field-valued table via the
    Mobius transform over the subset lattice (n * 2^n butterflies)."""
    vals = list(values)
    if len(vals) != 1 << n:
        raise BadShape(f"need 2^{n} values")
    F = field
    a = [v for v in vals]
    for i in range(n):
        bit = 1 << i
        for m in range(1 << n):
            if m & bit:
                a[m] = F.sub(a[m], a[m ^ bit])
    return MultilinearPoly(n, F, {m: c for m, c in enumerate(a)})


def indicator_poly(f: BooleanFunction, field) -> MultilinearPoly:
    return from_truth_table([field.from_int(b) for b in f.table], f.n, field)


def ideal_member(g: MultilinearPoly, f: BooleanFunction) -> bool:
    """g is in the ideal generated by f iff g vanishes on the zero set of f
    (equivalently g = g*f pointwise)."""
    if g.n != f.n:
        raise ArityMismatch("polynomial and function have different arity")
    F = g.field
    return all(F.is_zero(g.evaluate(x)) for x in f.zero_set())


def _affine_in_var(n, field, i, const, coeff):
    """const + coeff * xi as a polynomial."""
    return MultilinearPoly(n, field, {0: const, 1 << i: coeff})


def y_transform(poly: MultilinearPoly, omega, inverse: bool = False) -> MultilinearPoly:
    """Re-express an x-polynomial in the variables ti = 1 + (w - 1) xi
    (w = omega, or omega^-1 when inverse is set).  The returned polynomial's
    masks index t-monomials; total degree is preserved."""
    F = poly.field
    if F.is_zero(omega) or omega == F.one():
        raise NotRootOfUnity("omega must be a nontrivial root of unity")
    lam = F.inv(omega) if inverse else omega
    # xi = (ti - 1) / (lam - 1)
    s = F.inv(F.sub(lam, F.one()))
    out = MultilinearPoly.zero(poly.n, F)
    for mask, c in poly.terms.items():
        term = MultilinearPoly.constant(poly.n, F, c)
        for i in range(poly.n):
            if mask >> i & 1:
                term = term.mul(_affine_in_var(poly.n, F, i,
                                               F.neg(s), s))
        out = out.add(term)
    return out


def tightness_witness(n: int, q: int, p: int) -> MultilinearPoly:
    """The degree-n/2 member of the mod-q indicator ideal:
    prod_{i=1..n/2} (x_{2i-1} - x_{2i}) over F_p.

    Requires n even with n/2 a multiple of q; nonzero exactly on the points
    that pick one variable from each pair, all of which have weight n/2."""
    if n % 2 != 0 or (n // 2) % q != 0:
        raise BadShape("need n even and n/2 a multiple of q")
    F = make_prime_field(p)
    out = MultilinearPoly.constant(n, F, F.one())
    for i in range(n // 2):
        pair = MultilinearPoly(n, F, {1 << (2 * i): F.one(),
                                      1 << (2 * i + 1): F.neg(F.one())})
        out = out.mul(pair)
    return out


def not_mod_upper_witness(n: int, q: int, p: int) -> MultilinearPoly:
    """A nonzero polynomial of degree <= ceil(n/2) over the extension field
    carrying a q-th root of unity w, vanishing on every x with |x| = 0 mod q:
    prod_{i<=h} (1 + (w-1) xi)  -  prod_{i>h} (1 + (w^-1 - 1) xi), h = ceil(n/2)."""
    if n < 2:
        raise BadShape("need n >= 2")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"{p} and {q} must be coprime")
    ctx, omega = find_root_of_unity(p, q)
    h = (n + 1) // 2
    one = ctx.one()
    wm = ctx.sub(omega, one)
    wim = ctx.sub(ctx.inv(omega), one)
    a = MultilinearPoly.constant(n, ctx, one)
    for i in range(h):
        a = a.mul(_affine_in_var(n, ctx, i, one, wm))
    b = MultilinearPoly.constant(n, ctx, one)
    for i in range(h, n):
        b = b.mul(_affine_in_var(n, ctx, i, one, wim))
    return a.sub(b)
