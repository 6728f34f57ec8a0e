"""Packed exponent vectors over (x, y, u1, u2) with graded reverse-lex ordering."""
from __future__ import annotations

NVARS = 4
VAR_NAMES = ("x", "y", "u1", "u2")
_BITS = 16
_MASK = (1 << _BITS) - 1
_SHIFTS = tuple(i * _BITS for i in range(NVARS))

UNIT = 0
VAR_KEYS = tuple(1 << s for s in _SHIFTS)


def pack(exponents) -> int:
    key = 0
    for i, e in enumerate(exponents):
        if e < 0 or e > _MASK:
            raise ValueError(f"exponent out of range: {e}")
        key |= e << _SHIFTS[i]
    return key


def unpack(key: int) -> tuple[int, int, int, int]:
    return tuple((key >> s) & _MASK for s in _SHIFTS)  # type: ignore[return-value]


def var_exponent(key: int, var: int) -> int:
    return (key >> _SHIFTS[var]) & _MASK


def total_degree(key: int) -> int:
    return sum(unpack(key))


def grevlex_key(key: int) -> int:
    """Sort key: larger means later in increasing grevlex order.

    Encoded as a single integer (degree, then complemented exponents of
    u2, u1, y in decreasing significance) so comparisons stay cheap."""
    ey = (key >> 16) & _MASK
    e1 = (key >> 32) & _MASK
    e2 = key >> 48
    deg = (key & _MASK) + ey + e1 + e2
    return (deg << 48) | ((_MASK - e2) << 32) | ((_MASK - e1) << 16) | (_MASK - ey)


def monomial_divides(a: int, b: int) -> bool:
    """True when monomial a divides monomial b (componentwise <=)."""
    for s in _SHIFTS:
        if ((a >> s) & _MASK) > ((b >> s) & _MASK):
            return False
    return True


def monomial_gcd(a: int, b: int) -> int:
    key = 0
    for s in _SHIFTS:
        key |= min((a >> s) & _MASK, (b >> s) & _MASK) << s
    return key


def monomial_min(keys) -> int:
    """Componentwise minimum over an iterable of packed monomials."""
    mins = [_MASK] * NVARS
    for key in keys:
        for i, s in enumerate(_SHIFTS):
            e = (key >> s) & _MASK
            if e < mins[i]:
                mins[i] = e
    return pack(mins)


def shift_down(key: int, var: int, by: int = 1) -> int:
    return key - (by << _SHIFTS[var])


def format_monomial(key: int) -> str:
    if key == 0:
        return "1"
    factors = []
    for name, e in zip(VAR_NAMES, unpack(key)):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)
