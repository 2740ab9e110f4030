"""Command-line front door: conversion, exact arithmetic, square roots,
areas, machine epsilon, divisor analysis, Plimpton 322 reconstruction and
constants verification.

Exit codes: 0 success, 1 domain or parse errors (diagnostic on stderr,
naming the originating module), 2 usage errors.  Output is deterministic
for fixed input and flags; all numeric input is plain text.
"""

import argparse
import sys

from .algorithms import (
    RATIO_DIAGONAL,
    RATIO_SHORT,
    heron_area,
    heron_sqrt,
    is_regular,
    load_table,
    nontrivial_divisors,
    reconstruct_table,
    triple_from_generators,
)
from .constants import encode_scientific, render_report, verify_table
from .errors import SexagesimalError
from .exact import (
    HALF_EVEN,
    HALF_UP,
    TRUNC,
    Expansion,
    Rational,
    arith,
    from_sexagesimal,
    parse_decimal,
    to_decimal,
    to_sexagesimal,
)
from .floating import machine_epsilon
from .glyphs import DEFAULT_TABLE, decode_canonical, decode_glyphs, encode_glyphs

NOTATIONS = ("decimal", "canonical", "glyph")

_PARSE_ORIGIN = {"decimal": "exact", "canonical": "glyphs", "glyph": "glyphs"}
_COMMAND_ORIGIN = {
    "convert": "exact",
    "arith": "exact",
    "sqrt": "algorithms",
    "area": "algorithms",
    "epsilon": "floating",
    "divisors": "algorithms",
    "plimpton": "algorithms",
    "constants": "constants",
}


class _Failure(Exception):
    def __init__(self, origin: str, message: str):
        super().__init__(message)
        self.origin = origin
        self.message = message


def _parse_value(text: str, notation: str) -> Rational:
    try:
        if notation == "decimal":
            return parse_decimal(text)
        if notation == "canonical":
            return from_sexagesimal(decode_canonical(text))
        return from_sexagesimal(decode_glyphs(text))
    except SexagesimalError as exc:
        raise _Failure(_PARSE_ORIGIN[notation], str(exc)) from exc


def _expansion_glyphs(exp: Expansion) -> str:
    glyph = DEFAULT_TABLE.glyph
    text = "".join(glyph(d) for d in exp.int_digits)
    if exp.frac_digits or exp.period:
        text += ";" + "".join(glyph(d) for d in exp.frac_digits)
    if exp.period:
        text += "(" + "".join(glyph(d) for d in exp.period) + ")"
    elif not exp.complete:
        text += "..."
    return ("-" if exp.sign < 0 else "") + text


def _render_value(x: Rational, notation: str, precision: int, mode: str) -> str:
    if notation == "decimal":
        return str(to_decimal(x, max_frac=precision, detect_repetend=True))
    number, info = to_sexagesimal(x, precision, mode, detect_repetend=True)
    if info.terminates_within(precision):
        return encode_glyphs(number) if notation == "glyph" else number.canonical_text()
    if info.complete and info.period:
        return _expansion_glyphs(info) if notation == "glyph" else str(info)
    text = encode_glyphs(number) if notation == "glyph" else number.canonical_text()
    return text + "..."


def _render_float(value, notation: str, precision: int) -> str:
    number = value.to_sex_number()
    if notation == "glyph":
        return encode_glyphs(number)
    if notation == "decimal":
        return str(to_decimal(number.to_rational(), max_frac=precision, detect_repetend=True))
    return number.canonical_text()


def _precision(text: str) -> int:
    value = int(text)
    if not 1 <= value <= 64:
        raise argparse.ArgumentTypeError("precision must be in 1..64")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sexagesimal",
        description="Exact base-60 arithmetic, codecs and table verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, notation_in=True, notation_out=True):
        p.add_argument("--p", type=_precision, default=8, metavar="N",
                       help="precision in sexagesits (1..64, default 8)")
        p.add_argument("--round", choices=(TRUNC, HALF_UP, HALF_EVEN), default=TRUNC,
                       help="rounding mode (default trunc)")
        if notation_in:
            p.add_argument("--from", dest="notation_in", choices=NOTATIONS, default="decimal",
                           help="input notation (default decimal)")
        if notation_out:
            p.add_argument("--to", dest="notation_out", choices=NOTATIONS, default="canonical",
                           help="output notation (default canonical)")

    p = sub.add_parser("convert", help="convert a number between notations")
    common(p)
    p.add_argument("value")

    p = sub.add_parser("arith", help="exact rational arithmetic")
    common(p)
    p.add_argument("op", choices=("add", "sub", "mul", "div"))
    p.add_argument("x")
    p.add_argument("y")

    p = sub.add_parser("sqrt", help="square root by Heron's iteration")
    common(p)
    p.add_argument("--start", metavar="X0", help="starting guess (same notation as input)")
    p.add_argument("value")

    p = sub.add_parser("area", help="triangle area from three sides (Heron)")
    common(p)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")

    p = sub.add_parser("epsilon", help="machine epsilon 60^-P")
    p.add_argument("--p", type=_precision, default=8, metavar="N",
                   help="mantissa length (1..64, default 8)")

    p = sub.add_parser("divisors", help="nontrivial divisors and regularity")
    p.add_argument("--format", choices=("human", "machine"), default="human")
    p.add_argument("n", type=int)

    p = sub.add_parser("plimpton", help="reconstruct the embedded Plimpton 322 table")
    p.add_argument("--check", action="store_true",
                   help="reconstruct and diff all 15 rows (the default action)")
    p.add_argument("--ratio", choices=(RATIO_DIAGONAL, RATIO_SHORT), default=RATIO_DIAGONAL,
                   help="ratio column interpretation (default d2b2)")
    p.add_argument("--format", choices=("human", "machine"), default="human")
    p.add_argument("--generators", nargs=2, type=int, metavar=("P", "Q"),
                   help="emit the triple generated by (P, Q) instead")

    p = sub.add_parser("constants", help="verify the embedded constants table")
    p.add_argument("--format", choices=("human", "machine"), default="human")
    p.add_argument("--encode", metavar="VALUE",
                   help="encode a decimal value in scientific glyph notation instead")
    p.add_argument("--p", type=_precision, default=8, metavar="N",
                   help="mantissa sexagesits for --encode (default 8)")

    return parser


def _cmd_convert(args) -> tuple[str, int]:
    value = _parse_value(args.value, args.notation_in)
    return _render_value(value, args.notation_out, args.p, args.round) + "\n", 0


def _cmd_arith(args) -> tuple[str, int]:
    x = _parse_value(args.x, args.notation_in)
    y = _parse_value(args.y, args.notation_in)
    result = arith(args.op, x, y)
    return _render_value(result, args.notation_out, args.p, args.round) + "\n", 0


def _cmd_sqrt(args) -> tuple[str, int]:
    value = _parse_value(args.value, args.notation_in)
    start = _parse_value(args.start, args.notation_in) if args.start else None
    result = heron_sqrt(value, start, args.p)
    text = _render_float(result.value, args.notation_out, args.p)
    return f"{text} ({result.iterations} iterations)\n", 0


def _cmd_area(args) -> tuple[str, int]:
    sides = [_parse_value(t, args.notation_in) for t in (args.a, args.b, args.c)]
    value = heron_area(*sides, precision=args.p)
    return _render_float(value, args.notation_out, args.p) + "\n", 0


def _cmd_epsilon(args) -> tuple[str, int]:
    eps = machine_epsilon(args.p)
    # 18 significant digits of the conventional binary-double rendering
    return f"{float(eps):.17e} (= 60^-{args.p})\n", 0


def _cmd_divisors(args) -> tuple[str, int]:
    divisors = nontrivial_divisors(args.n)
    reg = is_regular(args.n)
    factor_text = f"2^{reg.exp2} * 3^{reg.exp3} * 5^{reg.exp5}"
    if reg.cofactor != 1:
        factor_text += f" * {reg.cofactor}"
    if args.format == "machine":
        line = "\t".join(
            (
                str(args.n),
                ",".join(str(d) for d in divisors),
                str(len(divisors)),
                "regular" if reg.is_regular else "irregular",
                f"{reg.exp2},{reg.exp3},{reg.exp5},{reg.cofactor}",
            )
        )
        return line + "\n", 0
    lines = [
        f"divisors of {args.n}: " + (" ".join(str(d) for d in divisors) or "(none)"),
        f"count: {len(divisors)}",
        f"factorization: {factor_text} ({'regular' if reg.is_regular else 'not regular'})",
    ]
    return "\n".join(lines) + "\n", 0


def _mismatch_text(diff) -> str:
    parts = []
    for m in diff.mismatches:
        pub = "-" if m.published is None else m.published
        com = "-" if m.computed is None else m.computed
        parts.append(f"{m.position}: published {pub} vs computed {com}")
    return "; ".join(parts)


def _cmd_plimpton(args) -> tuple[str, int]:
    if args.generators:
        triple = triple_from_generators(*args.generators)
        if args.format == "machine":
            return f"{triple.a}\t{triple.b}\t{triple.d}\n", 0
        return f"a={triple.a} b={triple.b} d={triple.d}\n", 0
    diffs = reconstruct_table(args.ratio)
    records = {record.index: record for record in load_table()}
    lines = []
    ok_count = sum(1 for d in diffs if d.ok)
    for diff in diffs:
        if diff.error is not None:
            status, detail = "error", diff.error
            a = b = d = ratio = "-"
        else:
            status = "match" if diff.ok else "mismatch"
            detail = _mismatch_text(diff)
            a, b, d = diff.row.a, diff.row.b, diff.row.d
            ratio = diff.row.ratio_digits.canonical_text()
        published = records[diff.index].ratio_glyphs
        if args.format == "machine":
            lines.append(
                "\t".join(
                    (str(diff.index), str(a), str(b), str(d), str(ratio), published, status, detail)
                )
            )
        else:
            line = f"row {diff.index:2d}: a={a} b={b} d={d} ratio={ratio} published={published} [{status}]"
            if detail:
                line += f" {detail}"
            lines.append(line)
    if args.format == "human":
        lines.append(f"{ok_count}/{len(diffs)} rows match the published transcription")
    return "\n".join(lines) + "\n", 0 if ok_count == len(diffs) else 1


def _cmd_constants(args) -> tuple[str, int]:
    if args.encode:
        value = _parse_value(args.encode, "decimal")
        glyphs, exponent, notation = encode_scientific(value, args.p)
        if args.format == "machine":
            return f"{glyphs}\t{exponent}\t{notation}\n", 0
        return (f"{glyphs}·{notation}" if notation else glyphs) + "\n", 0
    return render_report(verify_table(), machine=args.format == "machine"), 0


_COMMANDS = {
    "convert": _cmd_convert,
    "arith": _cmd_arith,
    "sqrt": _cmd_sqrt,
    "area": _cmd_area,
    "epsilon": _cmd_epsilon,
    "divisors": _cmd_divisors,
    "plimpton": _cmd_plimpton,
    "constants": _cmd_constants,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    try:
        output, code = _COMMANDS[args.command](args)
    except _Failure as failure:
        print(f"sexagesimal {args.command}: error ({failure.origin}): {failure.message}",
              file=sys.stderr)
        return 1
    except SexagesimalError as exc:
        origin = _COMMAND_ORIGIN[args.command]
        print(f"sexagesimal {args.command}: error ({origin}): {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
