"""Normalized base-60 float model and machine epsilon."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import nonzero_rationals
from sexagesimal import (
    HALF_UP,
    TRUNC,
    DomainError,
    SexFloat,
    SexNumber,
    machine_epsilon,
    normalize_float,
    to_decimal,
)


class TestNormalizeFloat:
    def test_tablet_ratio(self):
        f = normalize_float(Fraction(28561, 14400), 8)
        assert f.mantissa == (1, 59, 0, 15, 0, 0, 0, 0)
        assert f.exponent == 1
        assert f.to_rational() == Fraction(28561, 14400)

    def test_mantissa_interval_boundary(self):
        f = normalize_float(Fraction(1, 60), 4)
        assert f.mantissa == (1, 0, 0, 0)
        assert f.exponent == 0

    def test_two(self):
        f = normalize_float(Fraction(2), 8)
        assert f.mantissa == (2, 0, 0, 0, 0, 0, 0, 0)
        assert f.exponent == 1

    def test_zero_is_distinguished(self):
        f = normalize_float(Fraction(0), 8)
        assert f == SexFloat.zero(8)
        assert f.sign == 0 and f.exponent == 0
        assert f.to_rational() == 0

    def test_rounding_carry_bumps_exponent(self):
        # 59.999 rounds up across the whole mantissa at two sexagesits
        f = normalize_float(Fraction(59999, 1000), 2, HALF_UP)
        assert f.mantissa == (1, 0)
        assert f.exponent == 2
        assert f.to_rational() == 60

    def test_precision_validated(self):
        with pytest.raises(DomainError):
            normalize_float(Fraction(1), 0)

    @given(nonzero_rationals(), st.integers(1, 12))
    def test_normalization_invariant(self, x, precision):
        f = normalize_float(x, precision, TRUNC)
        assert f.mantissa[0] != 0
        mantissa_value = abs(f.to_rational()) / Fraction(60) ** f.exponent
        assert Fraction(1, 60) <= mantissa_value < 1

    @given(nonzero_rationals(), st.integers(1, 10))
    def test_truncation_prefix_is_stable(self, x, precision):
        # growing the mantissa never rewrites already-emitted sexagesits
        small = normalize_float(x, precision, TRUNC)
        large = normalize_float(x, precision + 1, TRUNC)
        assert large.mantissa[:precision] == small.mantissa
        assert large.exponent == small.exponent

    def test_half_up_can_carry_once(self):
        # the documented exception to prefix stability: a single rounding carry
        x = Fraction(7199, 7200)  # 0;59:59:30, a tie at two sexagesits
        short = normalize_float(x, 2, HALF_UP)
        longer = normalize_float(x, 3, HALF_UP)
        assert short.mantissa == (1, 0) and short.exponent == 1
        assert longer.mantissa == (59, 59, 30) and longer.exponent == 0


class TestSexFloatConversions:
    def test_to_sex_number_positive_exponent(self):
        f = SexFloat(1, (1, 24, 51, 10), 1)
        assert f.to_sex_number() == SexNumber(1, (1, 24, 51, 10), 3)

    def test_to_sex_number_negative_exponent(self):
        f = SexFloat(1, (30,), -1)
        assert f.to_sex_number().canonical_text() == "0;0:30"

    def test_to_sex_number_exponent_beyond_mantissa(self):
        f = SexFloat(1, (1,), 3)
        assert f.to_sex_number().canonical_text() == "1:0:0"

    def test_from_sex_number_pads(self):
        x = SexNumber(1, (2,), 0)
        f = SexFloat.from_sex_number(x, precision=4)
        assert f.mantissa == (2, 0, 0, 0)
        assert f.exponent == 1

    def test_from_sex_number_overflow(self):
        with pytest.raises(DomainError):
            SexFloat.from_sex_number(SexNumber(1, (1, 2, 3), 0), precision=2)

    def test_validation(self):
        with pytest.raises(ValueError):
            SexFloat(1, (0, 1), 0)  # unnormalized
        with pytest.raises(ValueError):
            SexFloat(0, (1, 0), 0)  # zero sign with nonzero mantissa


class TestMachineEpsilon:
    def test_exact_value(self):
        assert machine_epsilon(8) == Fraction(1, 60**8)
        assert machine_epsilon(1) == Fraction(1, 60)

    def test_decimal_expansion_of_p2(self):
        exp = to_decimal(machine_epsilon(2))
        assert exp.preperiod_text == "0.0002"
        assert exp.period_text == "7"

    @pytest.mark.parametrize("precision", range(1, 65))
    def test_ordering(self, precision):
        assert machine_epsilon(precision + 1) * 60 == machine_epsilon(precision)

    def test_validation(self):
        with pytest.raises(DomainError):
            machine_epsilon(0)
