"""Tests for the quotient-ring polynomials and Boolean functions."""

import itertools
import random

import pytest

from fpimmunity.errors import ArityMismatch, BadShape, NotCoprime
from fpimmunity.gf import find_root_of_unity, make_ext_field, make_prime_field
from fpimmunity.ring import (BooleanFunction, MultilinearPoly,
                             format_truth_table, from_truth_table, ideal_member,
                             indicator_poly, mod_indicator, monomial_key,
                             monomials_of_degree, monomials_up_to,
                             not_mod_upper_witness, parse_truth_table, popcount,
                             tightness_witness, y_transform)

F2 = make_prime_field(2)
F3 = make_prime_field(3)
F5 = make_prime_field(5)


def rand_poly(n, field, rng, max_terms=6):
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        terms[rng.randrange(1 << n)] = rng.randrange(1, field.p)
    return MultilinearPoly(n, field, terms)


def test_monomial_enumeration():
    assert monomials_of_degree(3, 1) == [1, 2, 4]
    assert monomials_of_degree(3, 2) == [3, 5, 6]
    assert monomials_up_to(3, 2) == [0, 1, 2, 4, 3, 5, 6]
    assert sorted(monomials_up_to(3, 2), key=monomial_key) == \
        monomials_up_to(3, 2)


def test_evaluate_examples():
    p = MultilinearPoly(2, F2, {0b11: 1})        # x1*x2
    assert p.evaluate((1, 1)) == 1
    assert p.evaluate((1, 0)) == 0
    q = MultilinearPoly(2, F3, {0b01: 1, 0b10: 2})  # x1 - x2
    assert q.evaluate((0, 1)) == 2
    assert MultilinearPoly.zero(3, F2).evaluate(5) == 0
    with pytest.raises(ArityMismatch):
        p.evaluate((1, 0, 1))


def test_multiply_idempotent():
    x1 = MultilinearPoly.variable(2, F3, 0)
    assert x1.mul(x1) == x1
    s = MultilinearPoly(2, F2, {0b01: 1, 0b10: 1})  # x1 + x2
    assert s.mul(s) == s                            # 2*x1x2 = 0 over F_2
    g = MultilinearPoly(2, F3, {0b11: 2, 0: 1})
    one = MultilinearPoly.constant(2, F3, 1)
    assert one.mul(g) == g


def test_multiply_matches_pointwise_product():
    rng = random.Random(7)
    for n, field in [(3, F2), (3, F3), (2, F5)]:
        for _ in range(30):
            a, b = rand_poly(n, field, rng), rand_poly(n, field, rng)
            ab = a.mul(b)
            for x in range(1 << n):
                assert ab.evaluate(x) == \
                    field.mul(a.evaluate(x), b.evaluate(x))


def test_ring_laws_exhaustive_small():
    # commutative/associative/distributive over all sparse polys on n=2
    for field in (F2, F3):
        polys = [MultilinearPoly(2, field, {m: c})
                 for m in range(4) for c in range(1, field.p)]
        polys.append(MultilinearPoly.zero(2, field))
        for a, b in itertools.product(polys, repeat=2):
            assert a.mul(b) == b.mul(a)
            assert a.add(b) == b.add(a)
        for a, b, c in itertools.islice(
                itertools.product(polys, repeat=3), 2000):
            assert a.mul(b).mul(c) == a.mul(b.mul(c))
            assert a.mul(b.add(c)) == a.mul(b).add(a.mul(c))


def test_restrict_examples():
    x1x2 = MultilinearPoly(2, F2, {0b11: 1})
    assert x1x2.restrict({0: 1}) == MultilinearPoly(2, F2, {0b10: 1})
    assert x1x2.restrict({0: 0}).is_zero()
    p = MultilinearPoly(3, F5, {0b001: 1, 0b010: 4, 0b100: 1})  # x1-x2+x3
    r = p.restrict({1: 1})
    assert r == MultilinearPoly(3, F5, {0b001: 1, 0b100: 1, 0: 4})


def test_restrict_commutes_with_evaluation():
    rng = random.Random(11)
    for _ in range(50):
        p = rand_poly(4, F3, rng)
        bits = [rng.randrange(2) for _ in range(4)]
        fixed = {0: bits[0], 2: bits[2]}
        r = p.restrict(fixed)
        assert r.evaluate(bits) == p.evaluate(bits)


def test_mod_indicator_examples():
    assert mod_indicator(3, 2).table == (1, 0, 0, 1, 0, 1, 1, 0)
    f = mod_indicator(4, 5)
    assert f.one_set() == [0]
    g = mod_indicator(6, 3)
    assert sorted({popcount(x) for x in g.one_set()}) == [0, 3, 6]


def test_boolean_function_basics():
    f = BooleanFunction(2, [0, 1, 1, 0])
    assert sorted(f.zero_set() + f.one_set()) == list(range(4))
    assert f.negate().table == (1, 0, 0, 1)
    assert not f.is_constant()
    with pytest.raises(BadShape):
        BooleanFunction(2, [0, 1, 1])
    with pytest.raises(BadShape):
        BooleanFunction(1, [0, 2])


def test_truth_table_text_round_trip():
    f = mod_indicator(3, 2)
    text = format_truth_table(f, 5)
    g, p = parse_truth_table(text)
    assert g == f and p == 5
    with pytest.raises(BadShape):
        parse_truth_table("2 3\n01\n")


def test_from_truth_table_interpolates():
    rng = random.Random(3)
    for field in (F2, F3, F5):
        for n in (1, 2, 3, 4):
            vals = [rng.randrange(field.p) for _ in range(1 << n)]
            poly = from_truth_table(vals, n, field)
            assert [poly.evaluate(x) for x in range(1 << n)] == vals


def test_ideal_member_examples():
    chi2 = mod_indicator(2, 2)
    g = MultilinearPoly(2, F2, {0b01: 1, 0b10: 1})  # x1 + x2
    assert not ideal_member(g, chi2)                # g(01) = 1
    assert ideal_member(MultilinearPoly.zero(2, F2), chi2)
    assert ideal_member(tightness_witness(6, 3, 2), mod_indicator(6, 3))


def test_ideal_member_is_absorption():
    # g in <f>  iff  g * indicator(f) = g as functions
    rng = random.Random(5)
    for _ in range(40):
        n = 3
        f = BooleanFunction(n, [rng.randrange(2) for _ in range(1 << n)])
        g = rand_poly(n, F3, rng)
        ind = indicator_poly(f, F3)
        absorbed = all(g.mul(ind).evaluate(x) == g.evaluate(x)
                       for x in range(1 << n))
        assert ideal_member(g, f) == absorbed


def test_tightness_witness():
    w = tightness_witness(6, 3, 2)
    assert w.degree == 3
    assert ideal_member(w, mod_indicator(6, 3))

    w = tightness_witness(4, 2, 3)
    assert w.degree == 2
    assert ideal_member(w, mod_indicator(4, 2))
    # explicit product (x1-x2)(x3-x4)
    assert w == MultilinearPoly(4, F3, {0b0101: 1, 0b0110: 2,
                                        0b1001: 2, 0b1010: 1})

    with pytest.raises(BadShape):
        tightness_witness(5, 3, 2)


def test_not_mod_upper_witness():
    # vanishes on weights divisible by q, degree <= ceil(n/2), nonzero
    for n, q, p in [(4, 3, 2), (2, 2, 3), (3, 6, 5), (6, 3, 2)]:
        w = not_mod_upper_witness(n, q, p)
        assert not w.is_zero()
        assert w.degree <= (n + 1) // 2
        F = w.field
        for x in range(1 << n):
            if popcount(x) % q == 0:
                assert F.is_zero(w.evaluate(x))
    with pytest.raises(NotCoprime):
        not_mod_upper_witness(4, 4, 2)


def test_y_transform_degree_preserved():
    ctx, omega = find_root_of_unity(2, 3)
    rng = random.Random(13)
    for _ in range(30):
        terms = {rng.randrange(16): ctx.from_int(1 + rng.randrange(3))
                 for _ in range(rng.randrange(1, 5))}
        poly = MultilinearPoly(4, ctx, terms)
        t = y_transform(poly, omega)
        assert t.degree == poly.degree
        t2 = y_transform(poly, omega, inverse=True)
        assert t2.degree == poly.degree


def test_y_transform_constant_fixed():
    ctx, omega = find_root_of_unity(2, 3)
    c = MultilinearPoly.constant(3, ctx, ctx.from_int(1))
    assert y_transform(c, omega) == c


def test_y_monomial_complement_identity():
    # (prod_{i in S} y_i) * (prod_i y'_i) = prod_{i in complement(S)} y'_i
    # pointwise on {0,1}^n
    n, q, p = 3, 3, 2
    ctx, omega = find_root_of_unity(p, q)
    one = ctx.one()
    wm = ctx.sub(omega, one)
    wim = ctx.sub(ctx.inv(omega), one)

    def y(i, prime):
        return MultilinearPoly(n, ctx, {0: one, 1 << i: wim if prime else wm})

    for S in range(1 << n):
        lhs = MultilinearPoly.constant(n, ctx, one)
        for i in range(n):
            if S >> i & 1:
                lhs = lhs.mul(y(i, False))
        for i in range(n):
            lhs = lhs.mul(y(i, True))
        rhs = MultilinearPoly.constant(n, ctx, one)
        for i in range(n):
            if not S >> i & 1:
                rhs = rhs.mul(y(i, True))
        for x in range(1 << n):
            assert lhs.evaluate(x) == rhs.evaluate(x)


def test_extension_field_coefficients():
    F4 = make_ext_field(2, 2)
    a = F4.gen()
    p = MultilinearPoly(2, F4, {0b01: a})
    assert p.evaluate((1, 0)) == a
    assert p.mul(p) == p.scale(a)  # (a x1)^2 = a^2 x1
