import pytest
from fractions import Fraction

from robba.errors import ContextMismatch, InvariantViolation, NegativeSupport, NotAUnit, PrecisionExhausted, ZeroDivisor
from robba.padic_core import (INF, LaurentElement, PAdicScalar, RingContext, certify_inverse, digit_decompose, digit_slice,
                              frobenius, invert_in_field, invert_unit, p_adic_valuation)


def element(ctx, terms):
    return LaurentElement.from_terms(ctx, terms)


class TestIntegerValuation:
    @pytest.mark.parametrize("n, expected", [(250, 3), (-250, 3), (7, 0), (5 ** 30, 24), (0, 24)])
    def test_capped(self, n, expected):
        assert p_adic_valuation(n, 5, 24) == expected


class TestRingContext:
    def test_rejects_composite_p(self):
        with pytest.raises(InvariantViolation, match="not prime"):
            RingContext(4, 4, 10, -8, 8)

    def test_rejects_q_not_power_of_p(self):
        with pytest.raises(InvariantViolation):
            RingContext(5, 10, 10, -8, 8)

    def test_prime_power_q(self):
        assert RingContext(3, 9, 10, -8, 8).q == 9

    def test_rejects_empty_window(self):
        with pytest.raises(InvariantViolation, match="empty"):
            RingContext(5, 5, 10, 8, 8)

    def test_rejects_nonpositive_precision(self):
        with pytest.raises(InvariantViolation):
            RingContext(5, 5, 0, -8, 8)

    def test_widened_keeps_precision(self, ctx):
        wide = ctx.widened(-64, 4096)
        assert wide.window == (-64, 4096)
        assert wide.prec == ctx.prec
        assert wide != ctx


class TestScalar:
    def test_fraction_with_p_in_denominator(self, ctx):
        s = PAdicScalar.from_fraction(ctx, Fraction(2, 5))
        assert s.vexp == -1
        assert s.to_fraction(ctx) == Fraction(2, 5)

    def test_unit_denominator_becomes_inverse(self, ctx):
        s = PAdicScalar.from_fraction(ctx, Fraction(1, 3))
        assert s.vexp == 0
        assert (s.mantissa * 3) % ctx.modulus == 1

    def test_below_precision_is_zero(self, ctx):
        assert PAdicScalar.from_fraction(ctx, 5 ** 24).is_zero


class TestArithmetic:
    def test_valuation_of_zero(self, ctx):
        assert LaurentElement.zero(ctx).valuation == INF

    def test_common_p_power(self, ctx):
        x = element(ctx, {0: 5, 1: 25})
        assert x.valuation == 1
        assert x.is_integral

    def test_negative_digit(self, ctx):
        x = element(ctx, {0: Fraction(1, 5)})
        assert x.valuation == -1
        assert not x.is_integral

    def test_product(self, ctx):
        x = element(ctx, {0: 1, 1: 1})
        y = element(ctx, {0: 1, 1: -1})
        assert x * y == element(ctx, {0: 1, 2: -1})

    def test_power(self, ctx):
        x = element(ctx, {0: 1, 1: 1})
        assert x ** 2 == element(ctx, {0: 1, 1: 2, 2: 1})
        with pytest.raises(InvariantViolation):
            x ** -1

    def test_cancellation(self, ctx):
        x = element(ctx, {-3: 7, 4: Fraction(2, 25)})
        assert (x - x).is_zero

    def test_coefficients_reduced_mod_p_to_the_n(self, ctx):
        x = element(ctx, {0: 1 + 5 ** 24})
        assert x == 1

    def test_context_mismatch(self, ctx, narrow_ctx):
        with pytest.raises(ContextMismatch):
            LaurentElement.one(ctx) + LaurentElement.one(narrow_ctx)

    def test_window_truncation(self, narrow_ctx):
        u5 = LaurentElement.monomial(narrow_ctx, 5)
        product = u5 * u5
        assert product.is_zero
        assert product.truncated_hi
        assert product.top == 8

    def test_scale_and_shift(self, ctx):
        x = LaurentElement.monomial(ctx, 1, 3)
        assert x.shift_u(2) == LaurentElement.monomial(ctx, 3, 3)
        assert x.scale_p(2).valuation == 2
        assert x.scale_p(2) == LaurentElement.monomial(ctx, 1, 75)

    def test_specialize_zero(self, ctx):
        assert element(ctx, {0: 3, 2: 1}).specialize_zero() == 3
        with pytest.raises(NegativeSupport):
            element(ctx, {-1: 1, 0: 1}).specialize_zero()


class TestFrobenius:
    def test_exponents_multiplied_by_q(self, ctx):
        x = element(ctx, {0: 3, 2: 1})
        assert frobenius(x) == element(ctx, {0: 3, 10: 1})
        assert frobenius(x, 2) == element(ctx, {0: 3, 50: 1})

    def test_is_a_ring_map(self, ctx):
        x = element(ctx, {-1: 2, 1: 5})
        y = element(ctx, {0: 1, 3: 1})
        assert frobenius(x * y) == frobenius(x) * frobenius(y)

    def test_rejects_zero_iterations(self, ctx):
        with pytest.raises(InvariantViolation):
            frobenius(LaurentElement.one(ctx), 0)


class TestDigits:
    def test_decompose(self, ctx):
        # 7 + 5u = 2 + p·(1 + u)
        digits = digit_decompose(element(ctx, {0: 7, 1: 5}))
        assert [i for i, _ in digits] == [0, 1]
        assert digits[0][1] == 2
        assert digits[1][1] == element(ctx, {0: 1, 1: 1})

    def test_slice(self, ctx):
        x = element(ctx, {0: 7, 1: 5})
        assert digit_slice(x, 0, 1) == 2
        assert digit_slice(x, 1, None) == element(ctx, {0: 5, 1: 5})
        assert digit_slice(x, 0, 1) + digit_slice(x, 1, None) == x


class TestInverse:
    def test_geometric_series(self, ctx):
        x = element(ctx, {0: 1, 1: 5})
        assert x * invert_unit(x, 1) == 1

    def test_monomial(self, ctx):
        x = LaurentElement.monomial(ctx, -3)
        assert invert_unit(x, 1) == LaurentElement.monomial(ctx, 3)

    def test_in_field_with_negative_digit(self, ctx):
        # p^-1 の桁がある元の逆元は1桁分だけ精度を失う
        x = element(ctx, {0: Fraction(1, 5), 2: 1})
        assert (x * invert_in_field(x) - 1).valuation >= ctx.prec - 1

    def test_in_field_with_positive_valuation(self, ctx):
        # -p の仮数は法 p^(N-1) でしか分からないので、逆元は絶対 p^(N-2) より上の桁を持たない
        y = invert_in_field(LaurentElement.constant(ctx, -5))
        assert y == LaurentElement.constant(ctx, Fraction(5 ** 23 - 1, 5))
        assert (LaurentElement.constant(ctx, -5) * y - 1).valuation >= ctx.prec - 1
        certify_inverse(LaurentElement.constant(ctx, -5), y)

    def test_element_with_slope_is_not_a_unit(self, ctx):
        with pytest.raises(NotAUnit):
            invert_unit(element(ctx, {0: 5, 5: 1}), 1)

    def test_zero(self, ctx):
        with pytest.raises(ZeroDivisor):
            invert_unit(LaurentElement.zero(ctx), 1)

    def test_radius_outside_r0(self, ctx):
        with pytest.raises(InvariantViolation):
            invert_unit(LaurentElement.one(ctx), 2)

    def test_certificate_rejects_wrong_inverse(self, ctx):
        x = element(ctx, {0: 1, 1: 5})
        certify_inverse(x, invert_in_field(x))
        with pytest.raises(PrecisionExhausted):
            certify_inverse(x, LaurentElement.one(ctx))
