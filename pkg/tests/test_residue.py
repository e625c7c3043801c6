"""Tests for the residue character over F_{2^n} and its immunity bound."""

import random

import pytest

from fpimmunity.errors import BadShape, NotDivisor, TooLarge
from fpimmunity.gf import element_order
from fpimmunity.residue import (build_binary_field, make_basis,
                                power_system_rank, rank_over_field,
                                residue_character, univariate_weight_degree,
                                verify_residue_immunity, with_random_basis)
from fpimmunity.ring import from_truth_table, popcount


def test_build_binary_field_examples():
    bfm = build_binary_field(2)
    assert bfm.ext.modulus == (1, 1, 1)  # z^2 + z + 1
    assert element_order(bfm.ext, bfm.xi) == 3
    bfm = build_binary_field(4)
    assert element_order(bfm.ext, bfm.xi) == 15
    with pytest.raises(BadShape):
        build_binary_field(1)
    with pytest.raises(TooLarge):
        build_binary_field(17)


def test_basis_spans():
    for n in (2, 3, 4, 6):
        bfm = build_binary_field(n)
        images = {bfm.phi(x) for x in range(1 << n)}
        assert len(images) == 1 << n  # basis independent => phi bijective


def test_random_basis_spans_and_names():
    bfm = build_binary_field(4)
    for seed in (0, 1, 7):
        rb = with_random_basis(bfm, seed)
        assert rb.basis_name == f"random:{seed}"
        images = {rb.phi(x) for x in range(16)}
        assert len(images) == 16
    assert make_basis(4, "random:1").basis == with_random_basis(bfm, 1).basis
    with pytest.raises(BadShape):
        make_basis(4, "hexagonal")


def test_residue_character_examples():
    bfm = build_binary_field(4)
    lam5 = residue_character(bfm, 5)
    assert len(lam5.one_set()) == 4
    bfm2 = build_binary_field(2)
    lam3 = residue_character(bfm2, 3)
    assert len(lam3.one_set()) == 2
    lam1 = residue_character(bfm2, 1)
    assert all(b == 1 for b in lam1.table)
    with pytest.raises(NotDivisor):
        residue_character(bfm, 7)


def test_one_set_size_formula():
    for n, q in [(2, 3), (4, 3), (4, 5), (4, 15), (6, 7), (6, 9)]:
        bfm = build_binary_field(n)
        lam = residue_character(bfm, q)
        assert len(lam.one_set()) == ((1 << n) - 1) // q + 1


def test_univariate_weight_degree():
    assert univariate_weight_degree({0}) == 0
    assert univariate_weight_degree({3}) == 2
    assert univariate_weight_degree({5, 8}) == 2
    assert univariate_weight_degree([]) is None


def test_degree_correspondence():
    # the multilinear degree of x -> P(phi(x)) equals the max popcount
    # over the exponents appearing in P
    rng = random.Random(0)
    for n in (2, 3, 4):
        bfm = build_binary_field(n)
        ext = bfm.ext
        for _ in range(20):
            support = {rng.randrange(1 << n)
                       for _ in range(rng.randrange(1, 4))}
            coeffs = {e: ext.pow_(bfm.xi, rng.randrange(ext.size - 1))
                      for e in support}
            values = []
            for x in range(1 << n):
                acc = ext.zero()
                v = bfm.phi(x)
                for e, c in coeffs.items():
                    t = ext.one() if e == 0 else ext.pow_(v, e)
                    acc = ext.add(acc, ext.mul(c, t))
                values.append(acc)
            poly = from_truth_table(values, n, ext)
            assert poly.degree == univariate_weight_degree(support)


def test_power_system_full_rank():
    # evaluating the low-popcount monomials at 0 and the q-th powers gives
    # full column rank whenever the counting hypothesis holds
    from fpimmunity.hilbert import binom_sum
    for n, q in [(2, 3), (3, 7), (4, 3), (4, 5), (4, 15)]:
        bfm = build_binary_field(n)
        for d in range(n + 1):
            if binom_sum(n, d) * q > (1 << n):
                break
            r, cols = power_system_rank(bfm, q, d)
            assert r == cols


def test_rank_over_field_prime_case_sanity():
    from fpimmunity.gf import make_prime_field
    F5 = make_prime_field(5)
    rows = [[1, 2, 3], [2, 4, 1], [2, 4, 2]]
    assert rank_over_field(rows, F5) == 2
    assert rank_over_field([[1, 2, 3], [2, 4, 1]], F5) == 1  # 2*(1,2,3)


def test_verify_residue_immunity_grid():
    for n, q in [(4, 3), (4, 5), (4, 15), (6, 3), (6, 7)]:
        rep = verify_residue_immunity(n, q)
        assert rep.passed, (n, q, rep)
        assert rep.measured_immunity > rep.bound_d


def test_residue_bound_fails_on_subfield_case():
    # At n=6, q=9 the counting hypothesis gives bound_d = 1 (C(6,<=1) = 7
    # = 64/9 rounded down), but (2^6-1)/9 = 7 = 2^3-1, so the 9th powers
    # together with 0 form the subfield F_8 -- an F_2-linear 3-dimensional
    # subspace of F_64.  Any linear functional containing it in its kernel
    # is a degree-1 annihilator, so the measured immunity is exactly 1, not
    # > 1.  Linearity is basis-independent, so no basis change helps.  The
    # full-rank argument behind the bound silently assumes the exponent
    # multiples q*i are pairwise distinct mod 2^n - 1, which fails here
    # (9*1 = 9*8 = 9 mod 63).
    rep = verify_residue_immunity(6, 9)
    assert rep.bound_d == 1
    assert rep.measured_immunity == 1
    assert not rep.passed
    rep2 = verify_residue_immunity(6, 9, "random:1")
    assert rep2.measured_immunity == 1
    assert not rep2.passed


def test_residue_bound_basis_invariant():
    for n, q in [(4, 3), (4, 5), (6, 7)]:
        for basis in ("polynomial", "random:1", "random:2"):
            rep = verify_residue_immunity(n, q, basis)
            assert rep.passed, (n, q, basis, rep)
