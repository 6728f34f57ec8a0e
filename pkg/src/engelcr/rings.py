"""Scalar-ring abstraction so the geometric pipeline runs unchanged on two
backends: exact ExtScalar arithmetic, and truncated numeric jets (the
cross-check oracle).

A scalar must support +, -, *, /, ** with integer exponents, unary -, and
the methods conj(), partial(var), is_zero().  The ring object supplies
constants, injection of polynomial graph data, and the one square root the
normalization stage takes.
"""
from __future__ import annotations

from .algebra import ExtScalar, GaussianRational, Polynomial, RationalFunction, SqrtContext


class ExactRing:
    """Scalars are ExtScalar: rational functions extended by one square root."""

    name = "exact"
    exact = True

    def __init__(self) -> None:
        self._zero = ExtScalar(RationalFunction.zero())
        self._one = ExtScalar(RationalFunction.one())
        self._i = ExtScalar.from_gaussian(GaussianRational(0, 1))

    def zero(self) -> ExtScalar:
        return self._zero

    def one(self) -> ExtScalar:
        return self._one

    def i(self) -> ExtScalar:
        return self._i

    def from_int(self, n: int) -> ExtScalar:
        return ExtScalar.from_gaussian(GaussianRational(n, 0))

    def from_rational(self, p: int, q: int = 1) -> ExtScalar:
        return ExtScalar.from_gaussian(GaussianRational.from_rational(p, q))

    def graph_scalar(self, poly: Polynomial) -> ExtScalar:
        return ExtScalar(RationalFunction.from_polynomial(poly))

    def sqrt_branch(self, s: ExtScalar, branch: int) -> ExtScalar:
        """beta with beta**2 == s, on the requested branch of the square root."""
        if not s.is_rational():
            raise ValueError("square root is only taken of rational scalars")
        ctx = SqrtContext(s.p, branch)
        return ExtScalar.beta(ctx)

    def residual_repr(self, s: ExtScalar):
        """Serializable residual for a check: exact scalars report 0 or a formula."""
        return 0 if s.is_zero() else str(s)
