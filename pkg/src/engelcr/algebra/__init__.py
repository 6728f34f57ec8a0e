"""Exact scalar arithmetic: Gaussian rationals, polynomials, rational
functions, and the quadratic extension by a square root."""
from __future__ import annotations

from .extension import ExtScalar, SqrtContext
from .gaussian import GaussianRational, format_gaussian
from .parser import parse_expression
from .polynomial import U1, U2, VAR_NAMES, VARIABLES, X, Y, Polynomial, poly_to_string
from .rational import RationalFunction

__all__ = [
    "ExtScalar",
    "GaussianRational",
    "Polynomial",
    "RationalFunction",
    "SqrtContext",
    "U1",
    "U2",
    "VARIABLES",
    "VAR_NAMES",
    "X",
    "Y",
    "conjugate",
    "field_arith",
    "format_gaussian",
    "is_zero",
    "parse_expression",
    "partial_derivative",
    "poly_to_string",
]

_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def field_arith(a, b, op: str):
    """Apply a field operation ('add', 'sub', 'mul', 'div') to two scalars."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None
    return fn(a, b)


def is_zero(a) -> bool:
    """Exact zero test for any scalar type in this package."""
    return a.is_zero()


def conjugate(a):
    """Complex conjugation (extended by conj(beta) = 1/beta on ExtScalar)."""
    return a.conj()


def partial_derivative(a, var: int):
    """Partial derivative with respect to coordinate index var (x, y, u1, u2)."""
    return a.partial(var)
