from __future__ import annotations

import random
from fractions import Fraction

import pytest

from flick.series import (
    PolyZ,
    RationalFunctionZ,
    SeriesQ,
    bell_closed_form,
    bell_ogf_coefficients,
    expand_rational,
    row_gf_full,
    row_gf_odd,
)
from flick.todd import todd_recurrence, todd_row
from flick.transforms import row_sums

BELL_PREFIX = [1, 2, 2, 5, 7, 21, 37, 126, 264, 1001]


def poly_product_oracle(*factors: list[int]) -> list[int]:
    # Schoolbook convolution, written independently of PolyZ.__mul__.
    out = [1]
    for factor in factors:
        new = [0] * (len(out) + len(factor) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(factor):
                new[i + j] += a * b
        out = new
    return out


class TestPolyZ:
    def test_trimming_and_degree(self):
        assert PolyZ([1, 2, 0, 0]).coeffs == (1, 2)
        assert PolyZ([0, 0]).coeffs == ()
        assert PolyZ([]).degree == -1
        assert PolyZ([0, 1]).degree == 1
        assert not PolyZ([0])
        assert PolyZ([3])

    def test_arithmetic(self):
        a = PolyZ([1, 2])
        b = PolyZ([3, 0, 4])
        assert (a + b).coeffs == (4, 2, 4)
        assert (a * b).coeffs == tuple(poly_product_oracle([1, 2], [3, 0, 4]))
        assert (a + a.scale(-1)).coeffs == ()
        assert a(10) == 21

    def test_to_str(self):
        assert PolyZ([]).to_str() == "0"
        assert PolyZ([1, -5, 4]).to_str() == "1 - 5*x + 4*x^2"
        assert PolyZ([-1, 5]).to_str("n") == "-1 + 5*n"
        assert PolyZ([0, 1]).to_str() == "x"
        assert PolyZ([0, 0, -3]).to_str() == "-3*x^2"

    def test_immutable_and_hashable(self):
        a = PolyZ([1, 2])
        with pytest.raises(AttributeError):
            a.coeffs = (9,)
        assert hash(PolyZ([1, 2])) == hash(a)
        assert PolyZ([1, 2]) == a


class TestExpandRational:
    def test_geometric(self):
        f = RationalFunctionZ(num=PolyZ([1]), den=PolyZ([1, -1]))
        assert expand_rational(f, 4) == [1, 1, 1, 1]

    def test_row2_odd_slots(self):
        # x / ((1-x)(1-4x))
        den = PolyZ(poly_product_oracle([1, -1], [1, -4]))
        assert den.coeffs == (1, -5, 4)
        f = RationalFunctionZ(num=PolyZ([0, 1]), den=den)
        assert expand_rational(f, 5) == [0, 1, 5, 21, 85]

    def test_row2_full(self):
        # x(1+2x) / ((1-x^2)(1-4x^2))
        den = PolyZ(poly_product_oracle([1, 0, -1], [1, 0, -4]))
        f = RationalFunctionZ(num=PolyZ([0, 1, 2]), den=den)
        assert expand_rational(f, 9) == [0, 1, 2, 5, 10, 21, 42, 85, 170]

    def test_order_zero(self):
        f = RationalFunctionZ(num=PolyZ([1]), den=PolyZ([1, -1]))
        assert expand_rational(f, 0) == []

    def test_pole_at_origin_rejected(self):
        with pytest.raises(ValueError):
            RationalFunctionZ(num=PolyZ([1]), den=PolyZ([0, 1]))
        with pytest.raises(ValueError):
            RationalFunctionZ(num=PolyZ([1]), den=PolyZ([]))

    def test_non_unit_constant_rejected(self):
        with pytest.raises(ValueError):
            RationalFunctionZ(num=PolyZ([1]), den=PolyZ([2, 1]))


class TestRowGeneratingFunctions:
    def test_odd_gf_denominators(self):
        assert row_gf_odd(2).den.coeffs == (1, -5, 4)
        assert row_gf_odd(2).num.coeffs == (0, 1)

    def test_full_gf_numerator(self):
        assert row_gf_full(3).num.coeffs == (0, 1, 3)  # x + 3x^2

    def test_odd_gf_row1_is_geometric(self):
        assert expand_rational(row_gf_odd(1), 6) == [0, 1, 1, 1, 1, 1]

    def test_full_matches_array_rows(self):
        for n in range(1, 7):
            coeffs = expand_rational(row_gf_full(n), 21)
            assert coeffs[0] == 0
            assert coeffs[1:] == todd_row(n, 20)

    def test_odd_matches_odd_columns(self):
        for n in range(1, 7):
            coeffs = expand_rational(row_gf_odd(n), 11)
            assert coeffs[0] == 0
            assert coeffs[1:] == [todd_recurrence(n, 2 * k - 1) for k in range(1, 11)]

    def test_rejects_n_zero(self):
        with pytest.raises(ValueError):
            row_gf_odd(0)
        with pytest.raises(ValueError):
            row_gf_full(0)


class TestBellOgf:
    def test_hand_expansion_prefix(self):
        # k=1 term: (x + 2x^2)/(1-x^2); k=2 term: (x^3 + 3x^4)/((1-x^2)(1-4x^2));
        # through x^4 that sums to x + 2x^2 + 2x^3 + 5x^4.
        assert bell_ogf_coefficients(5) == [1, 2, 2, 5]

    def test_first_coefficient(self):
        assert bell_ogf_coefficients(2) == [1]

    def test_reference_prefix(self):
        assert bell_ogf_coefficients(11) == BELL_PREFIX

    def test_matches_row_sums_to_24(self):
        assert bell_ogf_coefficients(25) == row_sums(24).values

    def test_rejects_order_zero(self):
        with pytest.raises(ValueError):
            bell_ogf_coefficients(0)


class TestBellClosedForm:
    def test_hand_values(self):
        # 2! * [x^1] cosh(2s) = 2 * 1/2; adding s*sinh(2s) doubles it at n=2
        assert bell_closed_form(1) == 1
        assert bell_closed_form(2) == 2

    def test_reference_prefix(self):
        assert [bell_closed_form(n) for n in range(1, 11)] == BELL_PREFIX

    def test_matches_row_sums_to_20(self):
        sums = row_sums(20).values
        for n in range(1, 21):
            assert bell_closed_form(n) == sums[n - 1]

    def test_rejects_n_zero(self):
        with pytest.raises(ValueError):
            bell_closed_form(0)


class TestSeriesQ:
    def test_length_must_match_order(self):
        with pytest.raises(ValueError):
            SeriesQ([Fraction(1)], order=2)

    def test_truncation_to_min_order(self):
        f = SeriesQ([Fraction(1), Fraction(2), Fraction(3)], 3)
        g = SeriesQ([Fraction(1), Fraction(1)], 2)
        assert (f + g).order == 2
        assert (f * g).order == 2
        assert (f * g).coeffs == [Fraction(1), Fraction(3)]

    def test_coefficient_beyond_order_raises(self):
        f = SeriesQ.one(3)
        with pytest.raises(IndexError):
            f.coefficient(3)

    def test_product_associative_and_unital(self):
        rng = random.Random(8957)
        for _ in range(50):
            order = rng.randint(1, 8)
            series = [
                SeriesQ(
                    [
                        Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                        for _ in range(order)
                    ],
                    order,
                )
                for _ in range(3)
            ]
            f, g, h = series
            assert (f * g) * h == f * (g * h)
            assert f * SeriesQ.one(order) == f
            assert f + SeriesQ.zero(order) == f
