"""Rational parsing/arithmetic and exact base-60 / base-10 expansion."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import nonzero_rationals, rationals, sex_numbers
from sexagesimal import (
    HALF_EVEN,
    HALF_UP,
    TRUNC,
    DomainError,
    ParseError,
    SexNumber,
    arith,
    from_sexagesimal,
    int_sqrt,
    is_regular,
    parse_decimal,
    to_decimal,
    to_sexagesimal,
)


class TestParseDecimal:
    def test_plain_fraction(self):
        assert parse_decimal("1.5625") == Fraction(25, 16)

    def test_zero(self):
        assert parse_decimal("0") == Fraction(0)
        assert parse_decimal("-0.0") == Fraction(0)

    def test_scientific_is_exact(self):
        # must be the literal over a power of ten, no float intermediate
        value = parse_decimal("5.95374180765127242e-15")
        assert value == Fraction(595374180765127242, 10**32)

    def test_negative_and_exponent(self):
        assert parse_decimal("-2.5e3") == Fraction(-2500)
        assert parse_decimal("3e-5") == Fraction(3, 100000)

    @pytest.mark.parametrize(
        "text,position",
        [
            ("", 1),
            ("abc", 1),
            (".5", 1),
            ("1..5", 3),
            ("1.", 3),
            ("1e", 3),
            ("1e+5", 3),
            ("1.5x", 4),
            ("1 ", 2),
            ("--1", 2),
        ],
    )
    def test_errors_carry_position(self, text, position):
        with pytest.raises(ParseError) as err:
            parse_decimal(text)
        assert err.value.position == position


class TestArith:
    def test_add(self):
        assert arith("add", Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)

    def test_mul_against_integer_oracle(self):
        # (d/b)^2 for the first tablet row, checked by plain integer products
        got = arith("mul", Fraction(169, 120), Fraction(169, 120))
        assert got.numerator == 169 * 169
        assert got.denominator == 120 * 120

    def test_div(self):
        assert arith("div", Fraction(1), Fraction(7)) == Fraction(1, 7)

    def test_div_by_zero(self):
        with pytest.raises(DomainError):
            arith("div", Fraction(1), Fraction(0))

    def test_unknown_op(self):
        with pytest.raises(DomainError):
            arith("pow", Fraction(1), Fraction(2))

    @given(rationals(), rationals())
    def test_results_are_reduced(self, x, y):
        got = arith("mul", x, y)
        assert got.denominator > 0
        import math

        assert math.gcd(abs(got.numerator), got.denominator) == 1


class TestIntSqrt:
    def test_tablet_row_oracle(self):
        # 169^2 - 119^2 = 14400 and 120^2 = 14400
        assert 169**2 - 119**2 == 14400 == 120**2
        assert int_sqrt(14400) == (120, True)

    def test_not_perfect(self):
        assert int_sqrt(2) == (1, False)

    def test_zero(self):
        assert int_sqrt(0) == (0, True)

    def test_negative(self):
        with pytest.raises(DomainError):
            int_sqrt(-1)

    @given(st.integers(0, 10**30))
    def test_floor_property(self, n):
        root, perfect = int_sqrt(n)
        assert root**2 <= n < (root + 1) ** 2
        assert perfect == (root**2 == n)


class TestSexNumber:
    def test_canonicalization(self):
        x = SexNumber.from_digits(1, [0, 0, 1, 30, 0], 2)
        assert x == SexNumber(1, (1, 30), 1)

    def test_purely_fractional_gets_leading_zero(self):
        x = SexNumber.from_digits(1, [30], 1)
        assert x.digits == (0, 30)
        assert x.int_digits == (0,)

    def test_zero_is_unique(self):
        assert SexNumber.from_digits(1, [0, 0], 1) == SexNumber(0, (0,), 0)
        assert SexNumber.from_digits(-1, [0], 0).is_zero

    @pytest.mark.parametrize(
        "sign,digits,frac",
        [
            (2, (1,), 0),
            (1, (), 0),
            (1, (60,), 0),
            (1, (0, 1), 0),  # leading zero on a nonzero integer part
            (1, (1, 0), 1),  # trailing zero fractional digit
            (0, (1,), 0),
            (1, (1,), 2),
        ],
    )
    def test_invalid_forms_rejected(self, sign, digits, frac):
        with pytest.raises(ValueError):
            SexNumber(sign, digits, frac)


def _longdiv_base60(num, den, limit=500):
    """Independent long-division oracle: fractional digits plus repetend."""
    digits, seen, rem = [], {}, num % den
    while rem and rem not in seen and len(digits) < limit:
        seen[rem] = len(digits)
        rem *= 60
        digits.append(rem // den)
        rem %= den
    if rem == 0:
        return digits, []
    start = seen[rem]
    return digits[:start], digits[start:]


class TestToSexagesimal:
    def test_tablet_ratio(self):
        number, info = to_sexagesimal(Fraction(25, 16), 4)
        assert number == SexNumber(1, (1, 33, 45), 2)
        assert number.canonical_text() == "1;33:45"
        assert info.terminates_within(4)

    def test_single_negative_power(self):
        number, info = to_sexagesimal(Fraction(1, 60), 4)
        assert number.canonical_text() == "0;1"
        assert info.terminates and info.frac_len == 1

    def test_one_seventh_repetend(self):
        pre_oracle, period_oracle = _longdiv_base60(1, 7)
        number, info = to_sexagesimal(Fraction(1, 7), 6, detect_repetend=True)
        assert period_oracle == [8, 34, 17]
        assert info.period == tuple(period_oracle)
        assert info.frac_digits == tuple(pre_oracle)
        assert not info.terminates
        assert number.frac_digits == (8, 34, 17, 8, 34, 17)

    def test_terminates_beyond_budget(self):
        # 1/3600 needs two fractional sexagesits
        number, info = to_sexagesimal(Fraction(1, 3600), 1)
        assert number.is_zero
        assert info.terminates and info.frac_len == 2
        assert not info.terminates_within(1)
        assert info.terminates_within(2)

    def test_negative_max_frac_rejected(self):
        with pytest.raises(DomainError):
            to_sexagesimal(Fraction(1), -1)


class TestRounding:
    # 1/120 is exactly half of the last kept place at max_frac=1
    def test_truncate(self):
        number, _ = to_sexagesimal(Fraction(1, 120), 1, TRUNC)
        assert number.is_zero

    def test_half_up(self):
        number, _ = to_sexagesimal(Fraction(1, 120), 1, HALF_UP)
        assert number.canonical_text() == "0;1"

    def test_half_even_ties(self):
        down, _ = to_sexagesimal(Fraction(1, 120), 1, HALF_EVEN)  # 0.5 -> 0
        up, _ = to_sexagesimal(Fraction(3, 120), 1, HALF_EVEN)  # 1.5 -> 2
        keep, _ = to_sexagesimal(Fraction(5, 120), 1, HALF_EVEN)  # 2.5 -> 2
        assert down.is_zero
        assert up.canonical_text() == "0;2"
        assert keep.canonical_text() == "0;2"

    def test_magnitude_symmetry(self):
        number, _ = to_sexagesimal(Fraction(-1, 120), 1, HALF_UP)
        assert number.canonical_text() == "-0;1"

    def test_unknown_mode(self):
        with pytest.raises(DomainError):
            to_sexagesimal(Fraction(1), 1, "nearest")


class TestFromSexagesimal:
    def test_tablet_ratio_digits(self):
        x = SexNumber(1, (1, 59, 0, 15), 3)
        assert from_sexagesimal(x) == Fraction(28561, 14400)

    def test_half(self):
        assert from_sexagesimal(SexNumber(1, (0, 30), 1)) == Fraction(1, 2)

    def test_integer(self):
        assert from_sexagesimal(SexNumber(1, (2, 49), 0)) == 169

    @given(sex_numbers())
    def test_round_trip(self, x):
        value = from_sexagesimal(x)
        back, info = to_sexagesimal(value, x.frac_count, TRUNC)
        assert back == x
        assert info.terminates_within(x.frac_count)


class TestToDecimal:
    @pytest.mark.parametrize(
        "power,preperiod,period",
        [
            (1, "0.01", "6"),
            (2, "0.0002", "7"),
            (3, "0.000004", "629"),
        ],
    )
    def test_negative_powers_of_sixty(self, power, preperiod, period):
        exp = to_decimal(Fraction(1, 60**power))
        assert exp.preperiod_text == preperiod
        assert exp.period_text == period

    def test_terminating(self):
        exp = to_decimal(Fraction(25, 16))
        assert exp.preperiod_text == "1.5625"
        assert exp.period == ()
        assert exp.complete and exp.terminates

    def test_no_detection_truncates(self):
        exp = to_decimal(Fraction(1, 3), max_frac=4, detect_repetend=False)
        assert exp.frac_digits == (3, 3, 3, 3)
        assert not exp.complete
        assert not exp.terminates

    def test_str_forms(self):
        assert str(to_decimal(Fraction(1, 60))) == "0.01(6)"
        assert str(to_decimal(Fraction(1, 3))) == "0.(3)"
        assert str(to_decimal(Fraction(-3, 2))) == "-1.5"
        assert str(to_decimal(Fraction(1, 3), 4, detect_repetend=False)) == "0.3333..."

    @given(nonzero_rationals())
    def test_termination_matches_regularity_base10(self, x):
        exp = to_decimal(x, max_frac=0, detect_repetend=False)
        den = x.denominator
        while den % 2 == 0:
            den //= 2
        while den % 5 == 0:
            den //= 5
        assert exp.terminates == (den == 1)


class TestInvariants:
    @given(nonzero_rationals())
    def test_termination_iff_regular_denominator(self, x):
        _, info = to_sexagesimal(x, 0, detect_repetend=False)
        assert info.terminates == is_regular(x.denominator).is_regular

    @pytest.mark.parametrize("n", range(1, 13))
    def test_cross_base_identity(self, n):
        assert Fraction(10) ** -n == Fraction(6) ** n * Fraction(60) ** -n

    def test_decimal_repetend_minimality_brute_force(self):
        # every emitted period must not be a repetition of a shorter block
        for q in range(2, 10001):
            period = to_decimal(Fraction(1, q), max_frac=0).period
            size = len(period)
            for block in range(1, size):
                if size % block == 0:
                    assert period != period[:block] * (size // block), f"1/{q}"
