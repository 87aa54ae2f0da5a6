"""Exact rational scalars and the comparison tricks the lab is built on.

Everything numeric in the core is a :class:`fractions.Fraction` (aliased
``Scalar``): arbitrary-precision integers over a positive denominator,
always in lowest terms, with exact arithmetic.  The contractive conditions
checked elsewhere are *strict* inequalities, so no floating point is
allowed anywhere near a verdict.  Floats appear only in report rendering,
via :func:`approx_text`, and are always labelled approximate.

The one non-rational quantity the lab ever meets is a square root
(geometric-mean contractive terms).  ``lt_sqrt`` decides ``a < sqrt(u)``
without materializing the root, by sign analysis and squaring.
"""

from __future__ import annotations

from fractions import Fraction

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def as_scalar(value) -> Fraction:
    """Coerce ints, Fractions, and "p/q" / decimal strings to an exact Scalar.

    Floats are rejected: a float argument is almost always a silent
    precision bug in this code base.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a Scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot interpret {value!r} as an exact Scalar")


def parse_scalar(text: str) -> Fraction:
    """Parse the "p/q" text form (integer shorthand "p" and decimals allowed)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a valid Scalar literal: {text!r}") from exc


def scalar_text(x: Fraction) -> str:
    """Render a Scalar as "p/q" (or "p" when the denominator is 1)."""
    return str(x)


def approx_text(x: Fraction, digits: int = 6) -> str:
    """Rendering-only decimal approximation, explicitly marked as such."""
    return f"{float(x):.{digits}g}"


def compare(a, b) -> int:
    """Exact trichotomy: -1 if a < b, 0 if a == b, +1 if a > b.

    Fraction comparison cross-multiplies integers, so no rounding can occur.
    """
    a = as_scalar(a)
    b = as_scalar(b)
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def lt_sqrt(a, u) -> bool:
    """Decide ``a < sqrt(u)`` exactly, without computing the root.

    True iff a < 0, or a >= 0 and a**2 < u.  Raises ValueError for u < 0
    (no real root to compare against).
    """
    a = as_scalar(a)
    u = as_scalar(u)
    if u < 0:
        raise ValueError(f"lt_sqrt: negative radicand {u}")
    if a < 0:
        return True
    return a * a < u
