"""Gaussian rationals: complex numbers with exact rational real and imaginary parts."""
from __future__ import annotations

from ._numbers import mpq, rational_sqrt


class GaussianRational:
    """Immutable a + b*i with arbitrary-precision rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0) -> None:
        object.__setattr__(self, "re", mpq(re))
        object.__setattr__(self, "im", mpq(im))

    def __setattr__(self, name, value):  # noqa: ANN001
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def from_rational(cls, p, q=1) -> "GaussianRational":
        return cls(mpq(p, q), 0)

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_positive_canonical(self) -> bool:
        """Sign convention used to pick canonical roots: re > 0, or re == 0 and im > 0."""
        if self.re:
            return self.re > 0
        return self.im > 0

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def inverse(self) -> "GaussianRational":
        return ONE / self

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def sqrt(self) -> "GaussianRational | None":
        """Exact square root within the Gaussian rationals, or None."""
        a, b = self.re, self.im
        if not b:
            if not a:
                return ZERO
            r = rational_sqrt(a)
            if r is not None:
                return GaussianRational(r, 0)
            r = rational_sqrt(-a)
            if r is not None:
                return GaussianRational(0, r)
            return None
        s = rational_sqrt(a * a + b * b)
        if s is None:
            return None
        p = rational_sqrt((a + s) / 2)
        if p is None or not p:
            return None
        return GaussianRational(p, b / (2 * p))

    # -- conversions -----------------------------------------------------

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self) -> str:
        return format_gaussian(self)


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I_UNIT = GaussianRational(0, 1)


def _format_rational(q) -> str:
    return str(q)


def format_gaussian(c: GaussianRational, parenthesize_mixed: bool = True) -> str:
    """Canonical text form: 'a/b', 'c/d*i', 'i', or '(a/b+c/d*i)'."""
    re, im = c.re, c.im
    if not im:
        return _format_rational(re)
    if im == 1:
        im_part = "i"
    elif im == -1:
        im_part = "-i"
    else:
        im_part = f"{_format_rational(im)}*i"
    if not re:
        return im_part
    joined = f"{_format_rational(re)}+{im_part}" if im > 0 else f"{_format_rational(re)}{im_part}"
    return f"({joined})" if parenthesize_mixed else joined
