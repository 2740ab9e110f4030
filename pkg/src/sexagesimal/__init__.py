"""Exact base-60 (sexagesimal) arithmetic toolkit.

Arbitrary-precision rational arithmetic, exact radix conversion with
repetend detection, a normalized base-60 float model with its machine
epsilon, a one-character-per-digit glyph codec, Heron's square-root
iteration and area formula, and digit-level verification of the embedded
Plimpton 322 and physical-constants transcriptions.
"""

from .algorithms import (
    RATIO_DIAGONAL,
    RATIO_SHORT,
    HeronResult,
    PlimptonRow,
    Regularity,
    RowDiff,
    Triple,
    heron_area,
    heron_sqrt,
    is_regular,
    load_table,
    nontrivial_divisors,
    plimpton_row_compute,
    reconstruct_table,
    triple_from_generators,
)
from .constants import (
    ConstantEntry,
    EntryStatus,
    VerificationReport,
    encode_scientific,
    load_constants,
    render_report,
    verify_constant,
    verify_table,
)
from .errors import DomainError, ParseError, SexagesimalError
from .exact import (
    BASE,
    HALF_EVEN,
    HALF_UP,
    TRUNC,
    Expansion,
    Rational,
    SexNumber,
    arith,
    from_sexagesimal,
    int_sqrt,
    parse_decimal,
    to_decimal,
    to_sexagesimal,
)
from .floating import SexFloat, machine_epsilon, normalize_float
from .glyphs import (
    DEFAULT_TABLE,
    DigitRangeError,
    GlyphTable,
    UnknownGlyphError,
    decode_canonical,
    decode_glyphs,
    encode_canonical,
    encode_glyphs,
)

__version__ = "0.1.0"

__all__ = [
    "BASE",
    "ConstantEntry",
    "DEFAULT_TABLE",
    "DigitRangeError",
    "DomainError",
    "EntryStatus",
    "Expansion",
    "GlyphTable",
    "HALF_EVEN",
    "HALF_UP",
    "HeronResult",
    "ParseError",
    "PlimptonRow",
    "RATIO_DIAGONAL",
    "RATIO_SHORT",
    "Rational",
    "Regularity",
    "RowDiff",
    "SexFloat",
    "SexNumber",
    "SexagesimalError",
    "TRUNC",
    "Triple",
    "UnknownGlyphError",
    "VerificationReport",
    "arith",
    "decode_canonical",
    "decode_glyphs",
    "encode_canonical",
    "encode_glyphs",
    "encode_scientific",
    "from_sexagesimal",
    "heron_area",
    "heron_sqrt",
    "int_sqrt",
    "is_regular",
    "load_constants",
    "load_table",
    "machine_epsilon",
    "nontrivial_divisors",
    "normalize_float",
    "parse_decimal",
    "plimpton_row_compute",
    "reconstruct_table",
    "render_report",
    "to_decimal",
    "to_sexagesimal",
    "triple_from_generators",
    "verify_constant",
    "verify_table",
]
