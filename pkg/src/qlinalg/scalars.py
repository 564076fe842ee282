"""Exact scalars.

Every number in this package is a ``fractions.Fraction``.  Floats are refused
everywhere: a float has already lost the exactness this library exists to
keep, so coercion raises instead of guessing.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import MalformedScalar, ZeroDenominator

Q = Fraction

_INT = re.compile(r"[+-]?\d+\Z")
_RATIO = re.compile(r"([+-]?\d+)/(\d+)\Z")
_DECIMAL = re.compile(r"[+-]?\d+\.\d+\Z")


def parse_scalar(text: str) -> Fraction:
    """Read an integer, a ``p/q`` fraction, or a terminating decimal.

    >>> parse_scalar("17/7")
    Fraction(17, 7)
    >>> parse_scalar("-0.25")
    Fraction(-1, 4)
    >>> parse_scalar("6")
    Fraction(6, 1)
    """
    s = text.strip()
    if _INT.match(s) or _DECIMAL.match(s):
        return Fraction(s)
    m = _RATIO.match(s)
    if m:
        if int(m.group(2)) == 0:
            raise ZeroDenominator(f"zero denominator in {text!r}")
        return Fraction(s)
    raise MalformedScalar(f"not an exact scalar: {text!r}")


def format_scalar(q: Fraction) -> str:
    """Render ``Fraction(3)`` as ``3`` and ``Fraction(-8, 7)`` as ``-8/7``."""
    return str(q)


def as_scalar(value) -> Fraction:
    """Coerce an int, Fraction, or scalar string; refuse floats loudly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):  # bool is an int, but almost surely a bug here
        raise TypeError("refusing to treat a bool as a scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, float):
        raise TypeError(
            f"floats are not exact: got {value!r}; pass an int, Fraction, or string"
        )
    raise TypeError(f"cannot make an exact scalar from {type(value).__name__}")
