"""Exact rational scalars and their wire format.

Scalars are ``fractions.Fraction`` values throughout: canonical reduced
form and positive denominator come for free, and all arithmetic is exact.
The JSON wire format is a decimal integer string, optionally ``"p/q"``.
"""

from __future__ import annotations

import re
from fractions import Fraction

_FRAC_RE = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def parse_frac(s) -> Fraction:
    """Parse a fraction string like ``"3"`` or ``"-2/7"``; ints pass through."""
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if not isinstance(s, str) or not _FRAC_RE.match(s.strip()):
        raise ValueError(f"not a fraction string: {s!r}")
    return Fraction(s.strip())


def frac_str(x) -> str:
    """Canonical string for a rational: ``"p"`` when integral, else ``"p/q"``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
