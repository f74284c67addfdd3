"""JSON-friendly conversion helpers shared by the CLI and the verifier.

Rationals are serialized as "p/q" strings, denominator always present,
so values round-trip exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError


def format_rational(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text.strip()!r}") from exc


def jsonable(x):
    """Recursively convert tuples, sets, and Fractions for json.dumps."""
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(jsonable(v) for v in x)
    return x
