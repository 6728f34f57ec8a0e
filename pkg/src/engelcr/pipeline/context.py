"""Shared run state for the geometric pipeline: the scalar ring, the
ledger of identity checks, and the registry of functions that must not
vanish at sample points."""
from __future__ import annotations

from ..algebra import GaussianRational, Polynomial, RationalFunction
from ..errors import ConsistencyError

_MAX_RESIDUAL_CHARS = 400


class CheckRecord:
    __slots__ = ("name", "status", "residual", "detail")

    def __init__(self, name: str, status: str, residual, detail: str | None = None) -> None:
        self.name = name
        self.status = status  # "pass" | "fail" | "skipped"
        self.residual = residual
        self.detail = detail

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": self.status, "residual": self.residual}
        if self.detail:
            out["detail"] = self.detail
        return out

    def __repr__(self) -> str:
        return f"CheckRecord({self.name}: {self.status}, residual={self.residual!r})"


class DenominatorRegistry:
    """Polynomials whose zero sets must be avoided when sampling points:
    denominators of stored quantities and numerators of divisors taken
    along the way.  Their union bounds the singular locus of the run."""

    def __init__(self) -> None:
        self._polys: dict[str, Polynomial] = {}

    def add_polynomial(self, p: Polynomial) -> None:
        if p.is_zero() or p.is_constant():
            return
        lc = p.leading_coeff()
        one = GaussianRational(1, 0)
        if lc != one:
            p = p.scale(one / lc)
        self._polys.setdefault(str(p), p)

    def add_rational(self, rf: RationalFunction, divisor: bool = False) -> None:
        for atom, _ in rf.denominator_factors():
            self.add_polynomial(atom)
        if divisor:
            self.add_polynomial(rf.num)

    def add_scalar(self, s, divisor: bool = False) -> None:
        """Register an ExtScalar's denominators (and numerators when it is
        later divided by), plus its square-root context if any."""
        self.add_rational(s.p, divisor=divisor)
        if not s.q.is_zero():
            self.add_rational(s.q, divisor=False)
        if s.ctx is not None:
            self.add_rational(s.ctx.radicand, divisor=True)

    def polynomials(self) -> list[Polynomial]:
        return [self._polys[k] for k in sorted(self._polys)]

    def descriptions(self) -> list[str]:
        return sorted(self._polys)


def _residual_value(obj, exact: bool):
    """Serializable residual: 0 when the object vanishes, else a formula
    string (exact ring) or a float magnitude (numeric ring)."""
    if obj is None:
        return None
    if isinstance(obj, bool):
        return 0 if obj else 1
    if obj.is_zero():
        return 0
    if exact:
        text = repr(obj) if not isinstance(obj, str) else obj
        if len(text) > _MAX_RESIDUAL_CHARS:
            text = text[:_MAX_RESIDUAL_CHARS] + "..."
        return text
    return _magnitude(obj)


def _magnitude(obj) -> float:
    comps = getattr(obj, "comps", None)
    if comps is not None:
        vals = comps.values()
        return max((_magnitude(v) for v in vals), default=0.0)
    return obj.magnitude()


class RunContext:
    """Carries the ring and collects check results.

    strict=True (classification): a failed core check raises
    ConsistencyError, because the verdict would not be trustworthy.
    strict=False (verification/diagnostics): everything is recorded and
    the run continues."""

    def __init__(self, ring, strict: bool = True) -> None:
        self.ring = ring
        self.strict = strict
        self.checks: list[CheckRecord] = []
        self.diagnostics: list[CheckRecord] = []
        self.registry = DenominatorRegistry()

    # -- checks ----------------------------------------------------------

    def check(self, name: str, residual, core: bool = True, detail: str | None = None) -> bool:
        """Record a required identity.  `residual` is anything with
        is_zero() (scalar, form, bundle scalar), a bool, or a dict of
        labeled residuals (empty means pass)."""
        if isinstance(residual, dict):
            ok = not residual
            value = 0 if ok else _residual_value(next(iter(residual.values())), self.ring.exact)
        else:
            ok = residual if isinstance(residual, bool) else residual.is_zero()
            value = _residual_value(residual, self.ring.exact)
        record = CheckRecord(name, "pass" if ok else "fail", value, detail)
        self.checks.append(record)
        if not ok and core and self.strict and self.ring.exact:
            raise ConsistencyError(f"internal identity {name} failed (residual {value!r})")
        return ok

    def diagnostic(self, name: str, residual, detail: str | None = None) -> None:
        """Record an informational comparison; never fails a run."""
        if isinstance(residual, dict):
            ok = not residual
            value = 0 if ok else _residual_value(next(iter(residual.values())), self.ring.exact)
        else:
            ok = residual if isinstance(residual, bool) else residual.is_zero()
            value = _residual_value(residual, self.ring.exact)
        self.diagnostics.append(CheckRecord(name, "pass" if ok else "fail", value, detail))

    def skip(self, name: str, reason: str) -> None:
        self.checks.append(CheckRecord(name, "skipped", None, reason))

    def failed_checks(self) -> list[CheckRecord]:
        return [c for c in self.checks if c.status == "fail"]

    # -- registry --------------------------------------------------------

    def register(self, scalar, divisor: bool = False) -> None:
        """Track an exact scalar's denominators (and numerator when it is
        used as a divisor) for later point sampling.  No-op on numeric rings."""
        if self.ring.exact:
            self.registry.add_scalar(scalar, divisor=divisor)
