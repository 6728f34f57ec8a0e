"""Quadratic extension of the rational-function field by beta = sqrt(radicand).

An ExtScalar is a pair (p, q) of rational functions representing p + q*beta,
where beta**2 equals the radicand held by a shared SqrtContext.  The
conjugation rule is conj(beta) = 1/beta, which is an involution exactly when
the radicand has unit modulus (radicand * conj(radicand) == 1); the geometric
pipeline only ever builds contexts with that property, and tests check it.

When the radicand is a perfect square the extension is trivial: beta folds to
branch * root (root carries the canonical sign: leading coefficient with
positive real part, or positive imaginary part when the real part vanishes),
and every ExtScalar normalizes to q == 0.
"""
from __future__ import annotations

from ..errors import ContextMismatch
from .gaussian import GaussianRational
from .rational import RationalFunction

_HALF = GaussianRational.from_rational(1, 2)


class SqrtContext:
    """Shared description of the square root adjoined to the field."""

    __slots__ = ("radicand", "branch", "perfect_square", "root")

    def __init__(self, radicand: RationalFunction, branch: int = 1) -> None:
        if radicand.is_zero():
            raise ZeroDivisionError("radicand of a square-root context must be nonzero")
        if branch not in (1, -1):
            raise ValueError("branch must be +1 or -1")
        root = radicand.sqrt()
        object.__setattr__(self, "radicand", radicand)
        object.__setattr__(self, "branch", branch)
        object.__setattr__(self, "perfect_square", root is not None)
        object.__setattr__(self, "root", root)

    def __setattr__(self, name, value):  # noqa: ANN001
        raise AttributeError("SqrtContext is immutable")

    def branch_root(self) -> RationalFunction:
        """branch * canonical root — only valid for perfect squares."""
        if self.root is None:
            raise ValueError("radicand is not a perfect square")
        return self.root if self.branch == 1 else -self.root

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SqrtContext):
            return NotImplemented
        return self.branch == other.branch and self.radicand == other.radicand

    def __hash__(self) -> int:
        return hash((self.branch, self.radicand))

    def __repr__(self) -> str:
        return f"SqrtContext(radicand={self.radicand!s}, branch={self.branch:+d})"


def _merge_ctx(a: SqrtContext | None, b: SqrtContext | None) -> SqrtContext | None:
    if a is None:
        return b
    if b is None or a == b:
        return a
    raise ContextMismatch("cannot combine scalars from different square-root contexts")


class ExtScalar:
    __slots__ = ("p", "q", "ctx")

    def __init__(
        self,
        p: RationalFunction,
        q: RationalFunction | None = None,
        ctx: SqrtContext | None = None,
    ) -> None:
        if q is None:
            q = RationalFunction.zero()
        if q.is_zero():
            ctx = None
        elif ctx is None:
            raise ValueError("a nonzero beta part requires a square-root context")
        elif ctx.perfect_square:
            p = p + q * ctx.branch_root()
            q = RationalFunction.zero()
            ctx = None
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "ctx", ctx)

    def __setattr__(self, name, value):  # noqa: ANN001
        raise AttributeError("ExtScalar is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def rational(cls, p: RationalFunction) -> "ExtScalar":
        return cls(p)

    @classmethod
    def from_gaussian(cls, c: GaussianRational) -> "ExtScalar":
        return cls(RationalFunction.from_gaussian(c))

    @classmethod
    def beta(cls, ctx: SqrtContext) -> "ExtScalar":
        return cls(RationalFunction.zero(), RationalFunction.one(), ctx)

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.p.is_zero() and self.q.is_zero()

    def is_rational(self) -> bool:
        return self.q.is_zero()

    def as_gaussian(self) -> GaussianRational | None:
        if not self.q.is_zero():
            return None
        return self.p.as_gaussian()

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "ExtScalar") -> "ExtScalar":
        ctx = _merge_ctx(self.ctx, other.ctx)
        return ExtScalar(self.p + other.p, self.q + other.q, ctx)

    def __sub__(self, other: "ExtScalar") -> "ExtScalar":
        ctx = _merge_ctx(self.ctx, other.ctx)
        return ExtScalar(self.p - other.p, self.q - other.q, ctx)

    def __neg__(self) -> "ExtScalar":
        return ExtScalar(-self.p, -self.q, self.ctx)

    def __mul__(self, other: "ExtScalar") -> "ExtScalar":
        ctx = _merge_ctx(self.ctx, other.ctx)
        if self.q.is_zero() and other.q.is_zero():
            return ExtScalar(self.p * other.p)
        if self.q.is_zero():
            return ExtScalar(self.p * other.p, self.p * other.q, ctx)
        if other.q.is_zero():
            return ExtScalar(self.p * other.p, self.q * other.p, ctx)
        radicand = ctx.radicand
        p = self.p * other.p + self.q * other.q * radicand
        q = self.p * other.q + self.q * other.p
        return ExtScalar(p, q, ctx)

    def __truediv__(self, other: "ExtScalar") -> "ExtScalar":
        return self * other.reciprocal()

    def reciprocal(self) -> "ExtScalar":
        if self.q.is_zero():
            return ExtScalar(self.p.reciprocal())
        norm = self.norm()
        return ExtScalar(self.p / norm, -self.q / norm, self.ctx)

    def norm(self) -> RationalFunction:
        """p**2 - q**2 * radicand; zero only for the zero scalar."""
        if self.q.is_zero():
            return self.p * self.p
        return self.p * self.p - self.q * self.q * self.ctx.radicand

    def __pow__(self, e: int) -> "ExtScalar":
        if e < 0:
            return self.reciprocal() ** (-e)
        out = ExtScalar(RationalFunction.one())
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def scale(self, c: GaussianRational) -> "ExtScalar":
        return ExtScalar(self.p.scale(c), self.q.scale(c), self.ctx)

    # -- field operations used by the geometry ---------------------------

    def conj(self) -> "ExtScalar":
        """Coefficient conjugation extended by conj(beta) = 1/beta = beta/radicand."""
        if self.q.is_zero():
            return ExtScalar(self.p.conj())
        return ExtScalar(self.p.conj(), self.q.conj() / self.ctx.radicand, self.ctx)

    def partial(self, var: int) -> "ExtScalar":
        """d/d(var), using d(beta) = (d(radicand) / (2*radicand)) * beta."""
        dp = self.p.derivative(var)
        if self.q.is_zero():
            return ExtScalar(dp)
        radicand = self.ctx.radicand
        dq = self.q.derivative(var) + self.q * radicand.derivative(var).scale(_HALF) / radicand
        return ExtScalar(dp, dq, self.ctx)

    def sqrt_rational(self) -> "ExtScalar | None":
        """Square root when this scalar is rational and a perfect square."""
        if not self.q.is_zero():
            return None
        r = self.p.sqrt()
        if r is None:
            return None
        return ExtScalar(r)

    # -- evaluation ------------------------------------------------------

    def eval_parts(self, point) -> tuple[GaussianRational, GaussianRational] | None:
        """Exact values (p(point), q(point)), or None if either hits a pole."""
        pv = self.p.eval_gaussian(point)
        if pv is None:
            return None
        if self.q.is_zero():
            return pv, GaussianRational(0, 0)
        qv = self.q.eval_gaussian(point)
        if qv is None:
            return None
        return pv, qv

    # -- comparison and formatting --------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtScalar):
            return NotImplemented
        return self.p == other.p and self.q == other.q and self.ctx == other.ctx

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.ctx))

    def __repr__(self) -> str:
        return f"ExtScalar({self!s})"

    def __str__(self) -> str:
        if self.q.is_zero():
            return str(self.p)
        if self.p.is_zero():
            return f"({self.q})*beta"
        return f"({self.p}) + ({self.q})*beta"
