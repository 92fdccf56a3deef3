import pytest
from fractions import Fraction

from robba.errors import InvariantViolation, ZeroElement
from robba.padic_core import INF, LaurentElement
from robba.polygon import Interval
from robba.valuations import (bounded_approx, frobenius_rescaling_holds, height, interval_min_valuation, is_unit,
                              newton_polygon, partial_valuation, position, semiunit_presentation, split_at_zero,
                              weighted_valuation)


@pytest.fixture
def x(ctx):
    """p·u^-3 + u^2"""
    return LaurentElement.from_terms(ctx, {-3: 5, 2: 1})


@pytest.fixture
def u5_plus_p(ctx):
    return LaurentElement.from_terms(ctx, {0: 5, 5: 1})


class TestPartialValuation:
    def test_values(self, x):
        assert partial_valuation(x, 0) == 2
        assert partial_valuation(x, 1) == -3

    def test_below_valuation_is_infinite(self, x):
        assert partial_valuation(x, -1) == INF


class TestWeightedValuation:
    def test_values(self, x):
        assert weighted_valuation(x, 1) == -2
        assert weighted_valuation(x, 0) == 0
        assert weighted_valuation(x, Fraction(1, 2)) == Fraction(-1, 2)

    def test_zero(self, ctx):
        assert weighted_valuation(LaurentElement.zero(ctx), 1) == INF

    def test_radius_above_r0(self, x):
        with pytest.raises(InvariantViolation):
            weighted_valuation(x, 2)

    def test_product_is_additive(self, x, u5_plus_p):
        for r in (Fraction(0), Fraction(1, 3), Fraction(1)):
            assert weighted_valuation(x * u5_plus_p, r) == weighted_valuation(x, r) + weighted_valuation(u5_plus_p, r)

    def test_frobenius_rescaling(self, x):
        assert frobenius_rescaling_holds(x, Fraction(1))
        assert frobenius_rescaling_holds(x, Fraction(1, 2))

    def test_interval_minimum_at_endpoint(self, x):
        assert interval_min_valuation(x, Interval.closed(0, 1)) == -2


class TestNewtonPolygon:
    def test_single_slope(self, u5_plus_p):
        polygon = newton_polygon(u5_plus_p, Interval(0, 1))
        assert polygon.multiset == [Fraction(1, 5)]
        assert not polygon.precision_limited

    def test_slope_one(self, ctx):
        polygon = newton_polygon(LaurentElement.from_terms(ctx, {0: 5, 1: 1}), Interval(0, 1))
        assert polygon.multiset == [Fraction(1)]

    def test_slope_outside_interval_is_dropped(self, ctx):
        polygon = newton_polygon(LaurentElement.from_terms(ctx, {0: 5, 1: 1}), Interval(0, Fraction(1, 2)))
        assert polygon.is_empty

    def test_multiplicities_add_under_product(self, u5_plus_p, ctx):
        y = LaurentElement.from_terms(ctx, {0: 25, 2: 1})
        interval = Interval(0, 1)
        product = newton_polygon(u5_plus_p * y, interval).multiset
        assert product == sorted(newton_polygon(u5_plus_p, interval).multiset + newton_polygon(y, interval).multiset)

    def test_zero(self, ctx):
        with pytest.raises(ZeroElement):
            newton_polygon(LaurentElement.zero(ctx), Interval(0, 1))


class TestUnitAndHeight:
    def test_is_unit(self, ctx, u5_plus_p):
        p_plus_u = LaurentElement.from_terms(ctx, {0: 5, 1: 1})
        assert is_unit(p_plus_u, Interval(0, Fraction(1, 2)))
        assert not is_unit(p_plus_u, Interval(0, 1))
        assert not is_unit(u5_plus_p, Interval(0, 1))
        assert is_unit(LaurentElement.monomial(ctx, -7, 3), Interval(0, 1))

    def test_height(self, u5_plus_p):
        assert height(u5_plus_p, 1) == 1
        assert height(u5_plus_p, Fraction(1, 10)) == 0

    def test_height_of_zero(self, ctx):
        with pytest.raises(ZeroElement):
            height(LaurentElement.zero(ctx), 1)


class TestDigitPresentations:
    def test_semiunit_presentation(self, ctx):
        pieces = semiunit_presentation(LaurentElement.from_terms(ctx, {0: 7, 1: 5}))
        assert [i for i, _ in pieces] == [0, 1]

    def test_every_digit_is_a_unit(self, ctx):
        pieces = semiunit_presentation(LaurentElement.from_terms(ctx, {0: 5, 5: 1}))
        assert pieces == [(0, LaurentElement.monomial(ctx, 5)), (1, LaurentElement.one(ctx))]

    def test_split_at_zero(self, ctx):
        x = LaurentElement.from_terms(ctx, {1: Fraction(1, 5), 0: 3, 2: 25})
        outer, inner = split_at_zero(x)
        assert outer == LaurentElement.from_terms(ctx, {1: Fraction(1, 5), 0: 3})
        assert inner == LaurentElement.monomial(ctx, 2, 25)
        assert outer + inner == x


class TestApproximation:
    def test_bounded_approx_keeps_digit_zero(self, ctx):
        # p^-1·u^5 + 1 + p·u: 桁 0 だけで負の桁の下界を満たす
        x = LaurentElement.from_terms(ctx, {5: Fraction(1, 5), 0: 1, 1: 5})
        assert bounded_approx(x, Fraction(1, 2), Interval(0, Fraction(1, 2))) == 1

    def test_bounded_approx_interval_beyond_r(self, x):
        with pytest.raises(InvariantViolation):
            bounded_approx(x, Fraction(1, 4), Interval(0, Fraction(1, 2)))

    def test_position(self, ctx, x):
        unit, i, y = position(x, 1)
        assert i == -1
        assert unit == LaurentElement.monomial(ctx, 3)
        assert y == LaurentElement.from_terms(ctx, {0: 1, 5: Fraction(1, 5)})
        assert y == unit * x.scale_p(i)
        assert weighted_valuation(y, 1) == 0

    def test_position_of_zero(self, ctx):
        with pytest.raises(ZeroElement):
            position(LaurentElement.zero(ctx), 1)
