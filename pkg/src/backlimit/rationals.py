"""Exact rational scalars and their text form.

Every point value in this package is a :class:`fractions.Fraction`; nothing
in the core ever touches floating point.  This module only adds the text
round-trip used by map files, the CLI and JSON reports: literals are either
an integer ``p`` or a fraction ``p/q`` with ``q > 0``, always emitted in
lowest terms.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rat = Fraction

_LITERAL = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` into an exact Fraction (canonicalized)."""
    m = _LITERAL.match(text.strip())
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    """Canonical lowest-terms literal; integers print without a denominator."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
