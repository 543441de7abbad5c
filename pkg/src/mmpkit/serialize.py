"""Exact-rational serialization and canonical JSON.

Machine reports never contain floating point: every rational value is a
string "p" or "p/q" in lowest terms with positive denominator, and every
report is dumped with sorted keys and fixed separators so identical
inputs produce byte-identical output and reports round-trip through any
JSON parser.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

_FRACTION_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def fraction_to_str(value) -> str:
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_fraction(value) -> Fraction:
    """Parse an int or a 'p/q' string into an exact Fraction."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _FRACTION_RE.match(value):
            raise ValueError(f"not a rational: {value!r}")
        num, _, den = value.partition("/")
        if den == "":
            return Fraction(int(num))
        if int(den) == 0:
            raise ValueError(f"zero denominator: {value!r}")
        return Fraction(int(num), int(den))
    raise ValueError(f"not a rational: {value!r}")


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
