"""Embeddings: signed scalars and the maps into cuts and reals."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from segreals import (
    Comparison,
    PosRational,
    SignedRational,
    bracket,
    f_embed,
    g_embed,
    less_than,
    phi,
    rational_interval,
    root_cut,
    s_r,
)
from segreals.cut import add as cut_add
from segreals.cut import compare as cut_compare
from segreals.cut import mul as cut_mul
from segreals.real import add as radd
from segreals.real import mul as rmul

from support import brackets_overlap, fr, interval_contains, q, straddles

small_rationals = st.builds(PosRational, st.integers(1, 30), st.integers(1, 30))
signed = st.one_of(
    st.just(SignedRational.zero()),
    small_rationals.map(SignedRational.from_pos),
    small_rationals.map(SignedRational.from_neg),
)


class TestSignedRational:
    @given(signed, signed)
    def test_add_matches_fractions(self, a, b):
        assert fr(a + b) == fr(a) + fr(b)

    @given(signed, signed)
    def test_sub_matches_fractions(self, a, b):
        assert fr(a - b) == fr(a) - fr(b)

    @given(signed, signed)
    def test_mul_matches_fractions(self, a, b):
        assert fr(a * b) == fr(a) * fr(b)

    @given(signed)
    def test_neg_matches_fractions(self, a):
        assert fr(-a) == -fr(a)

    @given(signed, signed)
    def test_order_matches_fractions(self, a, b):
        assert (a < b) == (fr(a) < fr(b))
        assert (a <= b) == (fr(a) <= fr(b))
        assert a.compare(b) == (fr(a) > fr(b)) - (fr(a) < fr(b))

    @given(signed)
    def test_fraction_round_trip(self, a):
        assert SignedRational.from_fraction(fr(a)) == a

    def test_from_int(self):
        assert SignedRational.from_int(0) == SignedRational.zero()
        assert fr(SignedRational.from_int(-7)) == -7
        assert fr(SignedRational.from_int(3)) == 3

    def test_canonical_zero(self):
        assert (SignedRational.from_pos(q(2)) - SignedRational.from_pos(q(2))
                ) == SignedRational.zero()

    def test_text_forms(self):
        assert str(SignedRational.from_pos(q(3, 2))) == "3/2"
        assert str(SignedRational.from_neg(q(3, 2))) == "-3/2"
        assert str(SignedRational.zero()) == "0/1"

    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            SignedRational(2, q(1))
        with pytest.raises(ValueError):
            SignedRational(0, q(1))
        with pytest.raises(ValueError):
            SignedRational(1, None)


class TestPhi:
    @given(small_rationals, small_rationals, st.sampled_from([100, 10 ** 4]))
    @settings(max_examples=40, deadline=None)
    def test_preserves_addition(self, r, s, n):
        image = cut_add(phi(r), phi(s))
        assert straddles(bracket(image, n), fr(r) + fr(s))
        assert brackets_overlap(bracket(image, n), bracket(phi(r + s), n))

    @given(small_rationals, small_rationals, st.sampled_from([100, 10 ** 4]))
    @settings(max_examples=40, deadline=None)
    def test_preserves_multiplication(self, r, s, n):
        image = cut_mul(phi(r), phi(s))
        assert straddles(bracket(image, n), fr(r) * fr(s))
        assert brackets_overlap(bracket(image, n), bracket(phi(r * s), n))

    @given(small_rationals, small_rationals)
    @settings(max_examples=60, deadline=None)
    def test_isotone(self, r, s):
        if fr(r) == fr(s):
            return
        lo, hi = (r, s) if r < s else (s, r)
        gap = fr(hi) - fr(lo)
        n = int(2 / gap) + 1
        assert cut_compare(phi(lo), phi(hi), n) is Comparison.LESS
        # coarser queries may fail to separate but must never flip
        for coarse in (1, 10):
            assert cut_compare(phi(lo), phi(hi), coarse) is not Comparison.GREATER


class TestFEmbed:
    @given(small_rationals, small_rationals, st.sampled_from([100, 10 ** 4]))
    @settings(max_examples=40, deadline=None)
    def test_preserves_addition(self, r, s, n):
        a, b = phi(r), phi(s)
        lhs = rational_interval(radd(f_embed(a), f_embed(b)), n)
        rhs = rational_interval(f_embed(cut_add(a, b)), n)
        assert interval_contains(lhs, fr(r) + fr(s))
        assert interval_contains(rhs, fr(r) + fr(s))

    @given(small_rationals, small_rationals)
    @settings(max_examples=40, deadline=None)
    def test_preserves_multiplication(self, r, s):
        a, b = phi(r), phi(s)
        lhs = rational_interval(rmul(f_embed(a), f_embed(b)), 10 ** 4)
        assert interval_contains(lhs, fr(r) * fr(s))

    def test_carries_irrationals(self):
        x = f_embed(root_cut(2, q(2)))
        iv = rational_interval(x, 10 ** 6)
        assert fr(iv.lo) ** 2 < 2 < fr(iv.hi) ** 2

    @given(small_rationals, small_rationals)
    @settings(max_examples=40, deadline=None)
    def test_isotone(self, r, s):
        if fr(r) == fr(s):
            return
        lo, hi = (r, s) if r < s else (s, r)
        n = int(4 / (fr(hi) - fr(lo))) + 1
        assert less_than(f_embed(phi(lo)), f_embed(phi(hi)), n) is Comparison.LESS


class TestGEmbed:
    @given(signed, signed, st.sampled_from([100, 10 ** 4]))
    @settings(max_examples=40, deadline=None)
    def test_ring_homomorphism_on_sums(self, a, b, n):
        lhs = rational_interval(radd(g_embed(a), g_embed(b)), n)
        rhs = rational_interval(g_embed(a + b), n)
        assert interval_contains(lhs, fr(a) + fr(b))
        assert interval_contains(rhs, fr(a) + fr(b))
        assert not (lhs.hi < rhs.lo or rhs.hi < lhs.lo)

    @given(signed, signed)
    @settings(max_examples=40, deadline=None)
    def test_ring_homomorphism_on_products(self, a, b):
        lhs = rational_interval(rmul(g_embed(a), g_embed(b)), 10 ** 4)
        assert interval_contains(lhs, fr(a) * fr(b))

    def test_zero_lands_on_syntactic_zero(self):
        x = g_embed(SignedRational.zero())
        assert x.pos is x.neg
        assert interval_contains(rational_interval(x, 100), Fraction(0))

    def test_negative_mirrors_positive(self):
        plus = g_embed(SignedRational.from_pos(q(5, 3)))
        minus = g_embed(SignedRational.from_neg(q(5, 3)))
        assert interval_contains(rational_interval(plus, 1000), Fraction(5, 3))
        assert interval_contains(rational_interval(minus, 1000), Fraction(-5, 3))

    @given(signed, signed)
    @settings(max_examples=60, deadline=None)
    def test_isotone(self, a, b):
        if fr(a) == fr(b):
            return
        lo, hi = (a, b) if a < b else (b, a)
        n = int(4 / (fr(hi) - fr(lo))) + 1
        assert less_than(g_embed(lo), g_embed(hi), n) is Comparison.LESS


class TestCompatibility:
    @given(small_rationals, st.sampled_from([100, 10 ** 4]))
    @settings(max_examples=40, deadline=None)
    def test_f_after_phi_agrees_with_g(self, r, n):
        via_f = rational_interval(f_embed(phi(r)), n)
        via_g = rational_interval(g_embed(SignedRational.from_pos(r)), n)
        assert interval_contains(via_f, fr(r))
        assert interval_contains(via_g, fr(r))
        assert not (via_f.hi < via_g.lo or via_g.hi < via_f.lo)
