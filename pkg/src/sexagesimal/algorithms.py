"""Heron's square-root iteration and area formula, base-divisor analysis,
regular numbers, Pythagorean triple generation, and the Plimpton 322
reconstruction against the embedded transcription.

Everything runs in exact rational arithmetic; square roots are the only
approximate results and they carry their own precision contract.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from importlib.resources import files
from typing import NamedTuple

from .errors import DomainError
from .exact import TRUNC, Rational, SexNumber, int_sqrt, to_sexagesimal
from .floating import SexFloat
from .glyphs import GlyphError, decode_glyphs

HERON_ITERATION_CAP = 1000

# interpretations of the tablet's ratio column
RATIO_DIAGONAL = "d2b2"  # (d/b)^2, reproduces the printed leading 1
RATIO_SHORT = "a2b2"  # (a/b)^2, drops the leading 1

_PLIMPTON_RESOURCE = "data/plimpton322.tsv"


class Regularity(NamedTuple):
    """Factorization of n as 2^a * 3^b * 5^c * cofactor."""

    is_regular: bool
    exp2: int
    exp3: int
    exp5: int
    cofactor: int


@dataclass(frozen=True)
class Triple:
    """A Pythagorean triple: short side, medium side, diagonal."""

    a: int
    b: int
    d: int

    def __post_init__(self):
        if not 0 < self.a <= self.b < self.d:
            raise ValueError("sides must satisfy 0 < a <= b < d")
        if self.a**2 + self.b**2 != self.d**2:
            raise ValueError("not a Pythagorean triple")


@dataclass(frozen=True)
class HeronResult:
    value: SexFloat
    iterations: int
    residual: Fraction


@dataclass(frozen=True)
class PlimptonRow:
    """One reconstructed tablet row: the ratio column as exact sexagesimal
    digits, plus the short side and diagonal."""

    index: int
    ratio_digits: SexNumber
    a: int
    d: int

    def __post_init__(self):
        if not 1 <= self.index <= 15:
            raise ValueError("row index must be in 1..15")
        if not 0 < self.a < self.d:
            raise ValueError("require 0 < a < d")
        root, perfect = int_sqrt(self.d**2 - self.a**2)
        if not perfect:
            raise ValueError("d^2 - a^2 is not a perfect square")
        object.__setattr__(self, "_b", root)

    @property
    def b(self) -> int:
        return self._b

    @property
    def triple(self) -> Triple:
        sides = sorted((self.a, self.b))
        return Triple(sides[0], sides[1], self.d)


def heron_sqrt(
    x: Rational,
    start: Rational | None = None,
    precision: int = 8,
) -> HeronResult:
    """Square root by the iteration a(n+1) = (a(n) + x/a(n)) / 2, run in
    exact rationals until successive iterates differ by less than
    60**(-precision).

    The result is the final iterate truncated to ``precision`` fractional
    sexagesits and normalized; ``start`` defaults to the integer square
    root of floor(x) (at least 1).
    """
    x = Fraction(x)
    if x <= 0:
        raise DomainError("square root requires a positive value")
    if precision < 1:
        raise DomainError("precision must be at least 1")
    if start is None:
        cur = Fraction(max(1, math.isqrt(int(x))))
    else:
        cur = Fraction(start)
        if cur <= 0:
            raise DomainError("starting guess must be positive")
    eps = Fraction(1, 60**precision)
    for iterations in range(1, HERON_ITERATION_CAP + 1):
        nxt = (cur + x / cur) / 2
        residual = abs(nxt - cur)
        cur = nxt
        if residual < eps:
            break
    else:
        raise DomainError(f"no convergence within {HERON_ITERATION_CAP} iterations")
    number, _ = to_sexagesimal(cur, precision, TRUNC)
    if number.is_zero:
        value = SexFloat.zero(precision)
    else:
        int_width = 0 if number.int_digits == (0,) else len(number.int_digits)
        value = SexFloat.from_sex_number(number, precision=int_width + precision)
    return HeronResult(value=value, iterations=iterations, residual=residual)


def heron_area(a: Rational, b: Rational, c: Rational, precision: int = 8) -> SexFloat:
    """Triangle area from the three sides: sqrt(s(s-a)(s-b)(s-c)) with s the
    semiperimeter, the radicand exact and the root via `heron_sqrt`."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if min(a, b, c) <= 0:
        raise DomainError("sides must be positive")
    s = (a + b + c) / 2
    radicand = s * (s - a) * (s - b) * (s - c)
    if radicand <= 0:
        raise DomainError("degenerate or impossible triangle")
    return heron_sqrt(radicand, precision=precision).value


def nontrivial_divisors(n: int) -> list[int]:
    """All divisors d of n with 1 < d < n, ascending."""
    if n < 2:
        raise DomainError("n must be at least 2")
    small, large = [], []
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def is_regular(n: int) -> Regularity:
    """Whether n = 2^a * 3^b * 5^c; exactly these denominators give
    terminating base-60 expansions."""
    if n < 1:
        raise DomainError("n must be at least 1")
    exps = []
    for p in (2, 3, 5):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        exps.append(e)
    return Regularity(n == 1, exps[0], exps[1], exps[2], n)


def triple_from_generators(p: int, q: int) -> Triple:
    """Primitive-triple parametrization: sides {p^2-q^2, 2pq}, diagonal
    p^2+q^2, for coprime p > q >= 1 of opposite parity."""
    if not p > q >= 1:
        raise DomainError("require p > q >= 1")
    if math.gcd(p, q) != 1:
        raise DomainError("require gcd(p, q) = 1")
    if p % 2 == 1 and q % 2 == 1:
        raise DomainError("require p and q not both odd")
    legs = sorted((p * p - q * q, 2 * p * q))
    return Triple(legs[0], legs[1], p * p + q * q)


def _terminating_sexagesimal(x: Fraction) -> SexNumber:
    reg = is_regular(x.denominator)
    if not reg.is_regular:
        raise DomainError(f"expansion of {x} does not terminate (denominator cofactor {reg.cofactor})")
    frac_len = max((reg.exp2 + 1) // 2, reg.exp3, reg.exp5)
    number, _ = to_sexagesimal(x, frac_len, TRUNC)
    return number


def plimpton_row_compute(a: int, d: int, index: int, ratio: str = RATIO_DIAGONAL) -> PlimptonRow:
    """Rebuild a tablet row from its short side and diagonal: recover
    b = sqrt(d^2 - a^2) and expand the ratio column exactly."""
    if not 0 < a < d:
        raise DomainError("require 0 < a < d")
    b, perfect = int_sqrt(d * d - a * a)
    if not perfect:
        raise DomainError(f"d^2 - a^2 = {d * d - a * a} is not a perfect square")
    if ratio == RATIO_DIAGONAL:
        value = Fraction(d * d, b * b)
    elif ratio == RATIO_SHORT:
        value = Fraction(a * a, b * b)
    else:
        raise DomainError(f"unknown ratio interpretation {ratio!r}")
    return PlimptonRow(index=index, ratio_digits=_terminating_sexagesimal(value), a=a, d=d)


class TableRecord(NamedTuple):
    """One verbatim record of the embedded transcription."""

    index: int
    ratio_glyphs: str
    a_glyphs: str
    d_glyphs: str


def load_table() -> list[TableRecord]:
    """The embedded 15-row transcription (index, ratio, a, d glyph strings)."""
    text = files(__package__).joinpath(_PLIMPTON_RESOURCE).read_text("utf-8")
    records = []
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        index, ratio_glyphs, a_glyphs, d_glyphs = line.split("\t")
        records.append(TableRecord(int(index), ratio_glyphs, a_glyphs, d_glyphs))
    return records


class DigitMismatch(NamedTuple):
    position: int  # 1-based sexagesit position in the published string
    published: int | None
    computed: int | None


@dataclass(frozen=True)
class RowDiff:
    """Reconstruction of one row diffed against its published glyphs."""

    index: int
    row: PlimptonRow | None
    published: SexNumber | None
    mismatches: tuple[DigitMismatch, ...]
    error: str | None

    @property
    def ok(self) -> bool:
        return self.error is None and not self.mismatches


def _diff_digits(published: tuple[int, ...], computed: tuple[int, ...]) -> tuple[DigitMismatch, ...]:
    out = []
    for i in range(max(len(published), len(computed))):
        p = published[i] if i < len(published) else None
        c = computed[i] if i < len(computed) else None
        if p != c:
            out.append(DigitMismatch(i + 1, p, c))
    return tuple(out)


def reconstruct_table(ratio: str = RATIO_DIAGONAL) -> list[RowDiff]:
    """Decode every embedded row, recompute b and the ratio column, and diff
    the result per sexagesit against the published glyphs.  Rows that fail
    to decode or reconstruct are reported in the diff, never raised."""
    diffs = []
    for record in load_table():
        try:
            a = decode_glyphs(record.a_glyphs)
            d = decode_glyphs(record.d_glyphs)
            published = decode_glyphs(record.ratio_glyphs)
            if a.frac_count or d.frac_count:
                raise DomainError("side columns must be integers")
            row = plimpton_row_compute(
                int(a.to_rational()), int(d.to_rational()), record.index, ratio
            )
        except (GlyphError, DomainError) as exc:
            diffs.append(
                RowDiff(record.index, row=None, published=None, mismatches=(), error=str(exc))
            )
            continue
        if ratio == RATIO_SHORT:
            # the published column keeps the ambiguous leading 1; the (a/b)^2
            # reading drops it and keeps the fractional tail
            mismatches = _diff_digits(published.digits[1:], row.ratio_digits.frac_digits)
        else:
            mismatches = _diff_digits(published.digits, row.ratio_digits.digits)
        diffs.append(
            RowDiff(record.index, row=row, published=published, mismatches=mismatches, error=None)
        )
    return diffs
