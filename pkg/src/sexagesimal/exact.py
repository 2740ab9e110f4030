"""Exact rational arithmetic and base-60 positional form.

All numeric truth lives in `fractions.Fraction` (aliased ``Rational``): values
are always stored reduced, with a positive denominator and zero as 0/1.  A
base-60 digit ("sexagesit") is a plain int in 0..59; `SexNumber` holds a
sign, a digit sequence and the count of digits right of the radix point.

Canonical base-60 text writes sexagesits as decimal numbers separated by
``:`` with ``;`` as the radix point, e.g. ``1;59:0:15`` or ``2:49``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError

Rational = Fraction

BASE = 60

# rounding modes (applied to the magnitude; ties per mode name)
TRUNC = "trunc"
HALF_UP = "half-up"
HALF_EVEN = "half-even"
ROUNDING_MODES = (TRUNC, HALF_UP, HALF_EVEN)

# period detection gives up after this many distinct long-division remainders
PERIOD_STATE_BOUND = 10**6

_ASCII_DIGITS = "0123456789"


class DecimalParseError(ParseError):
    pass


def parse_decimal(text: str) -> Fraction:
    """Parse a decimal literal ``[-]digits[.digits][(e|E)[-]digits]`` exactly.

    No binary float is ever constructed; ``"5.95374180765127242e-15"`` comes
    back as the literal fraction over a power of ten.
    """
    s = text
    n = len(s)
    i = 0

    def fail(msg: str, pos: int):
        raise DecimalParseError(f"{msg} at position {pos}: {text!r}", position=pos)

    if n == 0:
        fail("empty decimal literal", 1)
    sign = 1
    if s[i] == "-":
        sign = -1
        i += 1

    def scan_digits(what: str) -> str:
        nonlocal i
        start = i
        while i < n and s[i] in _ASCII_DIGITS:
            i += 1
        if i == start:
            fail(f"expected {what}", i + 1)
        return s[start:i]

    int_part = scan_digits("digit")
    frac_part = ""
    if i < n and s[i] == ".":
        i += 1
        frac_part = scan_digits("digit after '.'")
    exp = 0
    if i < n and s[i] in "eE":
        i += 1
        exp_sign = 1
        if i < n and s[i] == "-":
            exp_sign = -1
            i += 1
        exp = exp_sign * int(scan_digits("exponent digit"))
    if i != n:
        fail(f"unexpected character {s[i]!r}", i + 1)

    value = Fraction(int(int_part + frac_part), 10 ** len(frac_part))
    if exp:
        value *= Fraction(10) ** exp
    return sign * value


def arith(op: str, x: Fraction, y: Fraction) -> Fraction:
    """Exact add/sub/mul/div; the result is stored reduced."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y == 0:
            raise DomainError("division by zero")
        return x / y
    raise DomainError(f"unknown operation {op!r}")


def int_sqrt(n: int) -> tuple[int, bool]:
    """Floor square root of a non-negative integer, plus a perfect-square flag."""
    if n < 0:
        raise DomainError("int_sqrt of a negative number")
    r = math.isqrt(n)
    return r, r * r == n


def _check_mode(mode: str):
    if mode not in ROUNDING_MODES:
        raise DomainError(f"unknown rounding mode {mode!r}")


def _round_quotient(num: int, den: int, mode: str) -> int:
    # num, den > 0; rounds num/den to an integer per mode
    q, r = divmod(num, den)
    if mode == TRUNC or r == 0:
        return q
    if mode == HALF_UP:
        return q + (1 if 2 * r >= den else 0)
    return q + (1 if (2 * r > den or (2 * r == den and q % 2 == 1)) else 0)


def _digits_of_int(n: int, base: int = BASE) -> tuple[int, ...]:
    if n == 0:
        return (0,)
    out = []
    while n:
        n, d = divmod(n, base)
        out.append(d)
    return tuple(reversed(out))


@dataclass(frozen=True)
class SexNumber:
    """A base-60 positional numeral: sign, digits (most significant first),
    and how many of those digits lie right of the radix point.

    Instances are canonical: no leading zeros on a nonzero integer part, a
    single leading 0 when the value is purely fractional, no trailing zero
    fractional digits, and zero is sign=0, digits=(0,), frac_count=0.
    """

    sign: int
    digits: tuple[int, ...]
    frac_count: int

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, not {self.sign!r}")
        if not self.digits:
            raise ValueError("digit sequence is empty")
        for d in self.digits:
            if not (isinstance(d, int) and 0 <= d < BASE):
                raise ValueError(f"sexagesit out of range: {d!r}")
        if not 0 <= self.frac_count <= len(self.digits):
            raise ValueError("frac_count out of range")
        if self.sign == 0:
            if self.digits != (0,) or self.frac_count != 0:
                raise ValueError("zero must be digits=(0,), frac_count=0")
            return
        int_digits = self.digits[: len(self.digits) - self.frac_count]
        if not int_digits:
            raise ValueError("integer part must carry at least one digit")
        if len(int_digits) > 1 and int_digits[0] == 0:
            raise ValueError("leading zero in integer part")
        if int_digits == (0,) and self.frac_count == 0:
            raise ValueError("nonzero sign with zero digits")
        if self.frac_count and self.digits[-1] == 0:
            raise ValueError("trailing zero fractional digit")

    @classmethod
    def from_digits(cls, sign: int, digits, frac_count: int) -> "SexNumber":
        """Build the canonical SexNumber for an arbitrary digit string."""
        digits = list(digits)
        if frac_count > len(digits):
            digits = [0] * (frac_count - len(digits)) + digits
        if sign == 0 or not any(digits):
            return cls(0, (0,), 0)
        while frac_count and digits[-1] == 0:
            digits.pop()
            frac_count -= 1
        int_len = len(digits) - frac_count
        if int_len == 0:
            digits = [0] + digits
            int_len = 1
        keep = int_len
        while keep > 1 and digits[int_len - keep] == 0:
            keep -= 1
        digits = digits[int_len - keep :]
        return cls(1 if sign > 0 else -1, tuple(digits), frac_count)

    @classmethod
    def from_int(cls, n: int) -> "SexNumber":
        return cls.from_digits(1 if n >= 0 else -1, _digits_of_int(abs(n)), 0)

    @classmethod
    def _from_scaled(cls, sign: int, scaled: int, frac_count: int) -> "SexNumber":
        # scaled = magnitude * 60**frac_count, already rounded
        return cls.from_digits(sign, _digits_of_int(scaled), frac_count)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    @property
    def int_digits(self) -> tuple[int, ...]:
        return self.digits[: len(self.digits) - self.frac_count]

    @property
    def frac_digits(self) -> tuple[int, ...]:
        return self.digits[len(self.digits) - self.frac_count :]

    def to_rational(self) -> Fraction:
        return from_sexagesimal(self)

    def canonical_text(self) -> str:
        """Render in the canonical ``1;59:0:15`` text form."""
        text = ":".join(str(d) for d in self.int_digits)
        if self.frac_count:
            text += ";" + ":".join(str(d) for d in self.frac_digits)
        return ("-" if self.sign < 0 else "") + text

    def __str__(self) -> str:
        return self.canonical_text()


def from_sexagesimal(x: SexNumber) -> Fraction:
    """Exact rational value of a positional numeral (inverse of
    `to_sexagesimal` on terminating inputs)."""
    value = 0
    for d in x.digits:
        value = value * BASE + d
    return Fraction(x.sign * value, BASE**x.frac_count)


@dataclass(frozen=True)
class Expansion:
    """The exact positional expansion of a rational in some base.

    ``frac_digits`` holds the emitted fractional digits before any repetend;
    ``period`` is the minimal repetend (empty when the expansion terminates
    or was not resolved).  ``terminates`` is exact (decided from the reduced
    denominator), and ``frac_len`` gives the exact terminating length when
    it applies.  ``complete`` tells whether the digits shown fully
    characterize the value.
    """

    sign: int
    int_digits: tuple[int, ...]
    frac_digits: tuple[int, ...]
    period: tuple[int, ...]
    base: int
    terminates: bool
    frac_len: int | None
    complete: bool

    def _join(self, digits) -> str:
        if self.base == 10:
            return "".join(str(d) for d in digits)
        return ":".join(str(d) for d in digits)

    @property
    def preperiod_text(self) -> str:
        """Sign, integer part and fractional digits before the repetend,
        e.g. ``0.01`` for 1/60 in base 10."""
        point = "." if self.base == 10 else ";"
        text = self._join(self.int_digits)
        if self.frac_digits:
            text += point + self._join(self.frac_digits)
        return ("-" if self.sign < 0 else "") + text

    @property
    def period_text(self) -> str:
        return self._join(self.period)

    def terminates_within(self, max_frac: int) -> bool:
        return self.terminates and self.frac_len is not None and self.frac_len <= max_frac

    def __str__(self) -> str:
        point = "." if self.base == 10 else ";"
        text = self._join(self.int_digits)
        if self.frac_digits or self.period:
            text += point + self._join(self.frac_digits)
        if self.period:
            text += f"({self.period_text})"
        elif not self.complete:
            text += "..."
        return ("-" if self.sign < 0 else "") + text


def _terminating_frac_len(den: int, base: int) -> int | None:
    """Exact count of fractional digits of 1/den in ``base``, or None when
    the expansion does not terminate (den carries a prime not in base).

    Dividing by gcd(den, base) once per step lowers every prime exponent by
    at most one base's worth, so the step count is the minimal k with
    den | base**k.
    """
    k = 0
    while den > 1:
        g = math.gcd(den, base)
        if g == 1:
            return None
        den //= g
        k += 1
    return k


def _expand(x: Fraction, base: int, max_frac: int, detect_repetend: bool) -> Expansion:
    num, den = abs(x.numerator), x.denominator
    sign = 0 if num == 0 else (1 if x.numerator > 0 else -1)
    int_digits = _digits_of_int(num // den, base)
    rem = num % den
    frac_len = _terminating_frac_len(den, base)
    terminates = frac_len is not None

    digits: list[int] = []
    period: tuple[int, ...] = ()
    complete = False
    if rem == 0:
        complete = True
    elif terminates:
        while rem:
            rem *= base
            digits.append(rem // den)
            rem %= den
        complete = True
    elif detect_repetend:
        seen: dict[int, int] = {}
        while rem not in seen:
            if len(seen) >= PERIOD_STATE_BOUND:
                digits = digits[:max_frac]
                break
            seen[rem] = len(digits)
            rem *= base
            digits.append(rem // den)
            rem %= den
        else:
            start = seen[rem]
            period = tuple(digits[start:])
            digits = digits[:start]
            complete = True
    else:
        while rem and len(digits) < max_frac:
            rem *= base
            digits.append(rem // den)
            rem %= den

    return Expansion(
        sign=sign,
        int_digits=int_digits,
        frac_digits=tuple(digits),
        period=period,
        base=base,
        terminates=terminates,
        frac_len=frac_len,
        complete=complete,
    )


def to_sexagesimal(
    x: Fraction,
    max_frac: int,
    mode: str = TRUNC,
    detect_repetend: bool = False,
) -> tuple[SexNumber, Expansion]:
    """Round ``x`` to at most ``max_frac`` fractional sexagesits and report
    how the exact expansion behaves (terminates within/beyond the budget, or
    repeats -- with the minimal repetend when ``detect_repetend`` is set)."""
    if max_frac < 0:
        raise DomainError("max_frac must be non-negative")
    _check_mode(mode)
    x = Fraction(x)
    scaled = _round_quotient(abs(x.numerator) * BASE**max_frac, x.denominator, mode)
    sign = 0 if scaled == 0 else (1 if x.numerator > 0 else -1)
    number = SexNumber._from_scaled(sign, scaled, max_frac)
    return number, _expand(x, BASE, max_frac, detect_repetend)


def to_decimal(x: Fraction, max_frac: int = 64, detect_repetend: bool = True) -> Expansion:
    """Exact decimal expansion of a rational.

    When the expansion repeats and ``detect_repetend`` is set, the minimal
    repetend is found by long-division cycle detection (bounded by
    `PERIOD_STATE_BOUND` distinct remainders; past the bound the result is
    marked incomplete and truncated at ``max_frac`` digits).
    """
    if max_frac < 0:
        raise DomainError("max_frac must be non-negative")
    return _expand(Fraction(x), 10, max_frac, detect_repetend)
