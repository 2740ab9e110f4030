from fractions import Fraction

from hypothesis import settings, strategies as st

from sexagesimal import SexNumber

settings.register_profile("suite", max_examples=60, deadline=None)
settings.load_profile("suite")


@st.composite
def sex_numbers(draw, max_digits=10):
    digits = draw(st.lists(st.integers(0, 59), min_size=1, max_size=max_digits))
    frac_count = draw(st.integers(0, len(digits)))
    sign = draw(st.sampled_from([-1, 1]))
    return SexNumber.from_digits(sign, digits, frac_count)


def rationals(max_num=10**6, max_den=10**6, min_value=None):
    strat = st.fractions(max_denominator=max_den).filter(
        lambda f: abs(f.numerator) <= max_num
    )
    if min_value is not None:
        strat = strat.filter(lambda f: f > min_value)
    return strat


def nonzero_rationals():
    return rationals().filter(lambda f: f != 0)


__all__ = ["sex_numbers", "rationals", "nonzero_rationals", "Fraction"]
