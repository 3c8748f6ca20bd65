from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from classes.errors import BadNumberError, IntervalRangeError
from classes.interval import Interval, ONE, ZERO
from strategies import interval, intervals


class TestConstruction:
    def test_decimal_strings_become_reduced_fractions(self):
        mu = interval('0.2', '0.40')

        assert mu.lo == Fraction(1, 5)
        assert mu.hi == Fraction(2, 5)

    def test_ratio_syntax(self):
        assert interval('1/3', '2/3') == Interval(Fraction(1, 3), Fraction(2, 3))

    def test_degenerate_interval_is_allowed(self):
        assert Interval.point('0.5') == interval('0.5', '0.5')

    @pytest.mark.parametrize('lo, hi', [('0.5', '0.4'), ('-0.1', '0.2'), ('0.2', '1.1')])
    def test_out_of_range_is_rejected(self, lo, hi):
        with pytest.raises(IntervalRangeError):
            interval(lo, hi)

    @pytest.mark.parametrize('text', [
        '0.2/3', 'abc', '', '1e-1', '1/0', '.5', '\u0660.\u0665', '\u0661/\u0662', '\uff10.\uff15'
    ])
    def test_bad_numbers(self, text):
        with pytest.raises(BadNumberError):
            Interval.parse_bound(text)

    @pytest.mark.parametrize('value, text', [
        (Fraction(1, 5), '0.2'),
        (Fraction(1), '1'),
        (Fraction(0), '0'),
        (Fraction(3, 40), '0.075'),
        (Fraction(1, 3), '1/3'),
    ])
    def test_format_bound(self, value, text):
        assert Interval.format_bound(value) == text

    def test_str(self):
        assert str(interval('0.1', '0.3')) == '[0.1,0.3]'


class TestOperations:
    @pytest.mark.parametrize('d1, d2, expected', [
        (('0.2', '0.4'), ('0.1', '0.3'), ('0.1', '0.3')),
        (('0.5', '0.5'), ('0.5', '0.5'), ('0.5', '0.5')),
        (('0.2', '0.6'), ('0.3', '0.4'), ('0.2', '0.4')),
    ])
    def test_rmin(self, d1, d2, expected):
        assert interval(*d1).rmin(interval(*d2)) == interval(*expected)

    @pytest.mark.parametrize('d1, d2, expected', [
        (('0.2', '0.4'), ('0.1', '0.3'), ('0.2', '0.4')),
        (('0', '0'), ('0.3', '0.7'), ('0.3', '0.7')),
        (('0.2', '0.6'), ('0.3', '0.4'), ('0.3', '0.6')),
    ])
    def test_rmax(self, d1, d2, expected):
        assert interval(*d1).rmax(interval(*d2)) == interval(*expected)

    @pytest.mark.parametrize('d1, d2, expected', [
        (('0', '0'), ('0.3', '0.7'), ('0.3', '0.7')),
        (('1', '1'), ('0.3', '0.7'), ('1', '1')),
        (('0.5', '0.5'), ('0.5', '0.5'), ('0.75', '0.75')),
    ])
    def test_prob_sum(self, d1, d2, expected):
        assert interval(*d1) + interval(*d2) == interval(*expected)

    @pytest.mark.parametrize('k, expected', [
        ('1', ('0.2', '0.4')),
        ('0', ('0', '0')),
        ('0.5', ('0.1', '0.2')),
    ])
    def test_scale(self, k, expected):
        assert Interval.to_rational(k) * interval('0.2', '0.4') == interval(*expected)

    def test_scale_rejects_factor_above_one(self):
        with pytest.raises(IntervalRangeError):
            interval('0.2', '0.4').scale(2)

    def test_partial_order(self):
        assert interval('0.1', '0.3') <= interval('0.2', '0.4')
        assert not interval('0.1', '0.5') <= interval('0.2', '0.4')
        assert not interval('0.2', '0.4') <= interval('0.1', '0.5')
        assert interval('0.1', '0.3') < interval('0.2', '0.4')
        assert not interval('0.1', '0.3') < interval('0.1', '0.3')


class TestLatticeLaws:
    @given(intervals(), intervals())
    def test_commutative(self, a, b):
        assert a.rmin(b) == b.rmin(a)
        assert a.rmax(b) == b.rmax(a)
        assert a + b == b + a

    @given(intervals(), intervals(), intervals())
    def test_associative(self, a, b, c):
        assert a.rmin(b).rmin(c) == a.rmin(b.rmin(c))
        assert a.rmax(b).rmax(c) == a.rmax(b.rmax(c))
        assert (a + b) + c == a + (b + c)

    @given(intervals())
    def test_idempotent_and_bounded(self, a):
        assert a.rmin(a) == a
        assert a.rmax(a) == a
        assert a.rmin(ZERO) == ZERO
        assert a.rmax(ONE) == ONE
        assert a + ZERO == a
        assert ZERO <= a <= ONE

    @given(intervals(), intervals())
    def test_absorption(self, a, b):
        assert a.rmin(a.rmax(b)) == a
        assert a.rmax(a.rmin(b)) == a

    @given(intervals(), intervals())
    def test_meet_and_join_are_bounds(self, a, b):
        assert a.rmin(b) <= a <= a.rmax(b)
        assert (a <= b) == (a.rmin(b) == a)

    @given(intervals(), intervals(), intervals())
    def test_prob_sum_is_monotone(self, a, b, c):
        if a <= b:
            assert a + c <= b + c

    @given(intervals(), intervals())
    def test_exact_arithmetic_repeats(self, a, b):
        assert (a + b).sort_key() == (a + b).sort_key()
        assert hash(a.rmin(b)) == hash(b.rmin(a))

    @given(intervals(), st.fractions(0, 1, max_denominator=10))
    def test_scale_stays_below(self, a, k):
        assert a.scale(k) <= a
