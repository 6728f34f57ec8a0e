"""Rational number backend: gmpy2 when available, fractions otherwise."""
from __future__ import annotations

from math import gcd as igcd, isqrt

try:
    from gmpy2 import mpq  # type: ignore[import-not-found]

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as mpq  # type: ignore[assignment]

    HAVE_GMPY2 = False

__all__ = ["mpq", "igcd", "isqrt", "rational_sqrt", "HAVE_GMPY2"]


def rational_sqrt(value):
    """Exact square root of a nonnegative rational, or None if irrational."""
    if value < 0:
        return None
    num = int(value.numerator)
    den = int(value.denominator)
    rn = isqrt(num)
    if rn * rn != num:
        return None
    rd = isqrt(den)
    if rd * rd != den:
        return None
    return mpq(rn, rd)
