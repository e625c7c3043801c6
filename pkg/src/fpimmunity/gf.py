"""Prime fields F_p and extension fields F_{p^k}.

Elements of a prime field are plain ints in [0, p).  Elements of an
extension field are coefficient tuples of length k (polynomial basis,
constant term first).  Both context classes are immutable and expose the
same operation surface, so higher layers can stay field-agnostic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotCoprime, NotPrime, SearchLimit, ZeroElement

DEFAULT_DEGREE_CAP = 16


def is_prime(p: int) -> bool:
    """Trial-division primality test, adequate for the small moduli used here."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division: {prime: multiplicity}."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class PrimeFieldCtx:
    """Arithmetic context for F_p.  Elements are ints reduced into [0, p)."""

    p: int

    @property
    def size(self) -> int:
        return self.p

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, a: int):
        return a % self.p

    def is_zero(self, a) -> bool:
        return a == 0

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroElement("0 has no multiplicative inverse")
        return pow(a, self.p - 2, self.p)

    def pow_(self, a, e: int):
        if e < 0:
            return self.inv(self.pow_(a, -e))
        return pow(a, e, self.p)


def make_prime_field(p: int) -> PrimeFieldCtx:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return PrimeFieldCtx(p)


# --- dense polynomial helpers over F_p (coefficient tuples, constant first) ---


def _ptrim(c: list[int]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, m, p):
    """Remainder of a modulo monic-leading m over F_p."""
    a = list(a)
    dm = len(m) - 1
    lead_inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        if a[-1] == 0:
            a.pop()
            continue
        f = a[-1] * lead_inv % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - f * mi) % p
        a.pop()
    return _ptrim(a)


def _psub(a, b, p):
    return _ptrim([(x - y) % p for x, y in _zip_pad(a, b)])


def _pgcd(a, b, p):
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base, e, m, p):
    """base^e modulo polynomial m over F_p."""
    result = (1,)
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _has_root(poly, p) -> bool:
    for a in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * a + c) % p
        if acc == 0:
            return True
    return False


def poly_is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Irreducibility over F_p.

    Degree <= 3 uses the root test; degree 4 uses exhaustive trial division
    by low-degree monic polynomials; larger degrees use the standard
    x^(p^k) = x criterion with gcd checks at proper divisors of k.
    """
    k = len(poly) - 1
    if k <= 0:
        return False
    if k == 1:
        return True
    if _has_root(poly, p):
        return False
    if k <= 3:
        return True
    if k == 4:
        return not _has_quadratic_factor(poly, p)
    x = (0, 1)
    for r in factorize(k):
        t = _ppowmod(x, p ** (k // r), poly, p)
        diff = _psub(t, x, p)
        if len(_pgcd(poly, diff, p)) - 1 > 0:
            return False
    t = _ppowmod(x, p ** k, poly, p)
    return t == x


def _has_quadratic_factor(poly, p) -> bool:
    for c0 in range(p):
        for c1 in range(p):
            if not _pmod(poly, (c0, c1, 1), p):
                return True
    return False


def _monic_polys(degree: int, p: int):
    """Monic degree-`degree` polynomials, lowest coefficient vector first."""
    for idx in range(p ** degree):
        coeffs = []
        v = idx
        for _ in range(degree):
            coeffs.append(v % p)
            v //= p
        yield tuple(coeffs) + (1,)


@lru_cache(maxsize=None)
def first_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Deterministic modulus choice: first irreducible monic polynomial of
    degree k, enumerating coefficient vectors in ascending base-p order."""
    for cand in _monic_polys(k, p):
        if poly_is_irreducible(cand, p):
            return cand
    raise SearchLimit(f"no irreducible polynomial of degree {k} over F_{p}")


@dataclass(frozen=True)
class ExtFieldCtx:
    """Arithmetic context for F_{p^k} = F_p[z]/(modulus)."""

    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.p ** self.k

    def zero(self):
        return (0,) * self.k

    def one(self):
        return self.from_int(1)

    def from_int(self, a: int):
        return (a % self.p,) + (0,) * (self.k - 1)

    def from_coeffs(self, coeffs):
        c = [x % self.p for x in coeffs]
        if len(c) > self.k:
            c = list(_pmod(c, self.modulus, self.p))
        return tuple(c + [0] * (self.k - len(c)))

    def gen(self):
        """The residue class of the variable z."""
        if self.k == 1:
            return ((-self.modulus[0]) % self.p,)
        return (0, 1) + (0,) * (self.k - 2)

    def is_zero(self, a) -> bool:
        return not any(a)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        prod = _pmod(_pmul(_ptrim(list(a)), _ptrim(list(b)), self.p),
                     self.modulus, self.p)
        return tuple(prod) + (0,) * (self.k - len(prod))

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroElement("0 has no multiplicative inverse")
        # extended Euclid in F_p[z]
        r0, r1 = self.modulus, _ptrim(list(a))
        s0, s1 = (), (1,)
        p = self.p
        while r1:
            q, rem = _pdivmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _ptrim([(x - y) % p for x, y in
                                 _zip_pad(s0, _pmul(q, s1, p))])
        lead_inv = pow(r0[-1], p - 2, p)
        out = tuple(x * lead_inv % p for x in s0)
        return out + (0,) * (self.k - len(out))

    def pow_(self, a, e: int):
        if e < 0:
            return self.inv(self.pow_(a, -e))
        result = self.one()
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def elements(self):
        for idx in range(self.size):
            coeffs = []
            v = idx
            for _ in range(self.k):
                coeffs.append(v % self.p)
                v //= self.p
            yield tuple(coeffs)


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(tuple(a) + (0,) * (n - len(a)), tuple(b) + (0,) * (n - len(b)))


def _pdivmod(a, b, p):
    """Polynomial division a = q*b + r over F_p."""
    a = list(a)
    q = [0] * max(1, len(a) - len(b) + 1)
    dm = len(b) - 1
    lead_inv = pow(b[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        if a[-1] == 0:
            a.pop()
            continue
        f = a[-1] * lead_inv % p
        shift = len(a) - 1 - dm
        q[shift] = f
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - f * bi) % p
        a.pop()
    return _ptrim(q), _ptrim(a)


def make_ext_field(p: int, k: int) -> ExtFieldCtx:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return ExtFieldCtx(p, k, first_irreducible(p, k))


def element_order(ctx, a) -> int:
    """Multiplicative order of a nonzero element."""
    if ctx.is_zero(a):
        raise ZeroElement("order of 0 is undefined")
    n = ctx.size - 1
    t = n
    for r in factorize(n):
        while t % r == 0 and ctx.pow_(a, t // r) == ctx.one():
            t //= r
    return t


def first_primitive_element(ctx):
    """Lexicographically first generator of the multiplicative group
    (ascending base-p encoding of the coefficient tuple)."""
    n = ctx.size - 1
    primes = list(factorize(n))
    if isinstance(ctx, PrimeFieldCtx):
        candidates = range(1, ctx.p)
    else:
        candidates = (e for e in ctx.elements() if not ctx.is_zero(e))
    for g in candidates:
        if all(ctx.pow_(g, n // r) != ctx.one() for r in primes):
            return g
    raise SearchLimit("no primitive element found")  # unreachable


def find_root_of_unity(p: int, q: int, k_cap: int = DEFAULT_DEGREE_CAP):
    """Smallest extension F_{p^k} containing an element of exact order q,
    together with a deterministic such element.

    k is the multiplicative order of p modulo q; the modulus and the
    primitive element are both chosen first-in-enumeration-order so results
    are reproducible bit for bit.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if q < 2:
        raise NotCoprime(f"order {q} must be at least 2")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"{p} divides {q}; no element of order {q} exists")
    k = 1
    acc = p % q
    while acc != 1:
        k += 1
        if k > k_cap:
            raise SearchLimit(f"required extension degree exceeds cap {k_cap}")
        acc = acc * p % q
    ctx = make_ext_field(p, k)
    g = first_primitive_element(ctx)
    omega = ctx.pow_(g, (ctx.size - 1) // q)
    assert element_order(ctx, omega) == q
    return ctx, omega
