"""Tests for prime-field and extension-field arithmetic."""

import itertools

import pytest

from fpimmunity.errors import NotCoprime, NotPrime, ZeroElement
from fpimmunity.gf import (element_order, factorize, find_root_of_unity,
                           first_irreducible, first_primitive_element, is_prime,
                           make_ext_field, make_prime_field,
                           poly_is_irreducible)


def all_small_fields(limit=256):
    """Every (prime field or extension field) context with p^k <= limit."""
    out = []
    for p in range(2, limit + 1):
        if not is_prime(p):
            continue
        out.append(make_prime_field(p))
        k = 2
        while p ** k <= limit:
            out.append(make_ext_field(p, k))
            k += 1
    return out


def elements_of(ctx):
    if hasattr(ctx, "elements"):
        return list(ctx.elements())
    return list(range(ctx.p))


def test_make_prime_field_basics():
    F5 = make_prime_field(5)
    assert F5.mul(2, 3) == 1
    F2 = make_prime_field(2)
    assert F2.add(1, 1) == 0


def test_make_prime_field_rejects_composite():
    with pytest.raises(NotPrime):
        make_prime_field(4)
    with pytest.raises(NotPrime):
        make_prime_field(1)


def test_is_prime_and_factorize():
    assert [p for p in range(2, 30) if is_prime(p)] == \
        [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert factorize(60) == {2: 2, 3: 1, 5: 1}
    assert factorize(7) == {7: 1}


def test_first_irreducible_deterministic():
    # the unique irreducible quadratic over F_2 is z^2 + z + 1
    assert first_irreducible(2, 2) == (1, 1, 1)
    assert first_irreducible(2, 2) == first_irreducible(2, 2)
    mod = first_irreducible(3, 3)
    assert len(mod) == 4 and mod[-1] == 1
    assert poly_is_irreducible(mod, 3)


def test_poly_is_irreducible_known_cases():
    assert poly_is_irreducible((1, 1, 1), 2)       # z^2+z+1
    assert not poly_is_irreducible((1, 0, 1), 2)   # (z+1)^2
    assert poly_is_irreducible((1, 1, 0, 1), 2)    # z^3+z+1
    assert not poly_is_irreducible((2, 0, 1), 3)   # z^2+2 = (z+1)(z+2)


@pytest.mark.parametrize("ctx", all_small_fields(),
                         ids=lambda c: f"GF({c.p}^{getattr(c, 'k', 1)})")
def test_field_axioms_pairs(ctx):
    els = elements_of(ctx)
    zero, one = ctx.zero(), ctx.one()
    for a in els:
        assert ctx.add(a, ctx.neg(a)) == zero
        assert ctx.mul(a, one) == a
        if a != zero:
            assert ctx.mul(a, ctx.inv(a)) == one
    for a, b in itertools.product(els, repeat=2):
        assert ctx.add(a, b) == ctx.add(b, a)
        assert ctx.mul(a, b) == ctx.mul(b, a)


@pytest.mark.parametrize("ctx", all_small_fields(16),
                         ids=lambda c: f"GF({c.p}^{getattr(c, 'k', 1)})")
def test_field_axioms_triples_exhaustive(ctx):
    els = elements_of(ctx)
    for a, b, c in itertools.product(els, repeat=3):
        assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        assert ctx.mul(a, ctx.add(b, c)) == \
            ctx.add(ctx.mul(a, b), ctx.mul(a, c))


def test_element_order_examples():
    F5 = make_prime_field(5)
    assert element_order(F5, 1) == 1
    assert element_order(F5, 2) == 4
    F4 = make_ext_field(2, 2)
    for a in F4.elements():
        if a not in (F4.zero(), F4.one()):
            assert element_order(F4, a) == 3
    with pytest.raises(ZeroElement):
        element_order(F5, 0)


def test_first_primitive_element():
    F5 = make_prime_field(5)
    assert first_primitive_element(F5) == 2
    F9 = make_ext_field(3, 2)
    g = first_primitive_element(F9)
    assert element_order(F9, g) == 8


def test_find_root_of_unity_examples():
    ctx, w = find_root_of_unity(2, 3)
    assert ctx.k == 2
    assert element_order(ctx, w) == 3

    ctx, w = find_root_of_unity(5, 4)
    assert ctx.k == 1
    assert w == (2,)

    with pytest.raises(NotCoprime):
        find_root_of_unity(3, 3)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("q", range(2, 13))
def test_find_root_of_unity_grid(p, q):
    if q % p == 0:
        with pytest.raises(NotCoprime):
            find_root_of_unity(p, q)
        return
    ctx, w = find_root_of_unity(p, q)
    assert element_order(ctx, w) == q
    # minimality of the extension degree
    k = ctx.k
    for j in range(1, k):
        assert (p ** j - 1) % q != 0
    assert (p ** k - 1) % q == 0
