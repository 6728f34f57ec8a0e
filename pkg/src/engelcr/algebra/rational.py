"""Reduced rational functions num/den over the polynomial ring.

The denominator is kept factored: a product of interned monic "atom"
polynomials with positive integer exponents.  Every denominator in the
geometric pipeline is born multiplicatively -- an explicit division, a
product of fractions, a quotient-rule derivative -- so the atom set stays
small and fixed while numerators grow.  That turns reduction into a few
exact-divisibility checks against known atoms (each guarded by cheap
leading-monomial and modular-image rejections) instead of a multivariate
GCD of the full numerator and denominator on every operation, which is
the difference between milliseconds and minutes once coefficients swell.

Reduction by whole atoms is complete exactly when atoms are irreducible,
so registration works to keep them fine: new denominators are split by
monomial content, by GCDs against the atoms already known, and by GCDs
with their own partial derivatives (which also separate factors that omit
a variable).  If a large numerator still shares a partial factor with a
composite atom, the cancel step detects it with a (probe-gated) GCD and
refines the atom registry on the spot.  Any factor that survives all of
that travels whole and at worst leaves a fraction unreduced -- never
wrong: the value, zeroness, and the monic expanded denominator are
unaffected.  Construction is deterministic, so equal pipelines build
structurally equal fractions.
"""
from __future__ import annotations

from .gaussian import GaussianRational
from .monomials import var_exponent
from .polynomial import Polynomial

_GONE = GaussianRational(1, 0)

# Numerators at least this large trigger the GCD rescue when a whole-atom
# division fails.  The bar is high on purpose: atoms are refined as they are
# registered, so a partial overlap is rare, and even a probe-certified
# coprime GCD call must scan the whole numerator for its content first --
# prohibitive when it happens once per atom per arithmetic operation.
# Leaving a stuck factor in place never changes the value of the fraction.
_SWELL = 20000

# Atoms in first-discovery order; the index fixes the factor-tuple order so
# serialization is reproducible across runs of the same computation.  The
# active list is the peeling set; refinement replaces a composite entry
# with its pieces there while the index keeps retired atoms ordered.
_ATOM_LIST: list[Polynomial] = []
_ATOM_INDEX: dict[Polynomial, int] = {}
_ACTIVE: list[Polynomial] = []

Factors = tuple[tuple[Polynomial, int], ...]


def _monic(p: Polynomial) -> Polynomial:
    lc = p.leading_coeff()
    if lc != _GONE:
        p = p.scale(_GONE / lc)
    return p


def _register_atom(p: Polynomial) -> Polynomial:
    """Intern a monic non-constant polynomial, returning the canonical copy."""
    idx = _ATOM_INDEX.get(p)
    if idx is None:
        _ATOM_INDEX[p] = len(_ATOM_LIST)
        _ATOM_LIST.append(p)
        _ACTIVE.append(p)
        return p
    canon = _ATOM_LIST[idx]
    if canon not in _ACTIVE:
        _ACTIVE.append(canon)
    return canon


def _div_exact(a: Polynomial, b: Polynomial) -> Polynomial:
    q = a.exact_div(b)
    if q is None:  # pragma: no cover - callers guarantee divisibility
        raise ArithmeticError("expected exact polynomial division")
    return q


def _monomial_content(p: Polynomial) -> tuple[int, int, int, int]:
    """Componentwise minimum exponent of every variable over the terms."""
    mins = [None, None, None, None]
    for k in p.terms:
        for v in range(4):
            e = var_exponent(k, v)
            if mins[v] is None or e < mins[v]:
                mins[v] = e
        if all(m == 0 for m in mins):
            break
    return tuple(m or 0 for m in mins)


def _proper_divisor(q: Polynomial) -> Polynomial | None:
    """A monic proper divisor of q found by small GCD probes, or None.

    Tries the active atoms first (a new denominator often shares a factor
    with one already seen), then the partial derivatives: a repeated
    factor, or one that omits a variable, shows up in gcd(q, dq/dv).
    A nontrivial overlap that is proper for the *atom* refines the atom
    registry on the way through, whether or not it is proper for q."""
    for a in list(_ACTIVE):
        g = Polynomial.gcd(q, a)
        if not g.is_constant():
            g = _monic(g)
            if g.total_degree() <= 0:
                continue
            if g.total_degree() < a.total_degree():
                _refine_atom(a, g)
            if g.total_degree() < q.total_degree():
                return g
    for v in range(4):
        if q.degree(v) < 1:
            continue
        dq = q.derivative(v)
        if dq.is_zero():
            continue
        g = Polynomial.gcd(q, dq)
        if not g.is_constant():
            g = _monic(g)
            if 0 < g.total_degree() < q.total_degree():
                return g
    return None


def _atoms_of(p: Polynomial, out: dict[Polynomial, int], mult: int) -> None:
    """Split monic p into registered atom powers, adding mult-weighted
    exponents into out.  Best-effort: anything that resists the splitters
    is registered whole."""
    stack = [(p, mult)]
    while stack:
        q, m = stack.pop()
        if q.is_constant():
            continue
        cont = _monomial_content(q)
        if any(cont):
            mono = Polynomial.one()
            for v, e in enumerate(cont):
                if e:
                    atom = _register_atom(Polynomial.variable(v))
                    out[atom] = out.get(atom, 0) + e * m
                    mono = mono * Polynomial.variable(v) ** e
            q = _div_exact(q, mono)
            if q.is_constant():
                continue
        peeled = False
        for a in list(_ACTIVE):
            while True:
                r = q.exact_div(a)
                if r is None:
                    break
                out[a] = out.get(a, 0) + m
                q = r
                peeled = True
            if q.is_constant():
                break
        if q.is_constant():
            continue
        if peeled:
            stack.append((q, m))
            continue
        g = _proper_divisor(q)
        if g is not None:
            stack.append((g, m))
            stack.append((_monic(_div_exact(q, g)), m))
            continue
        atom = _register_atom(q)
        out[atom] = out.get(atom, 0) + m


def _refine_atom(atom: Polynomial, divisor: Polynomial) -> dict[Polynomial, int]:
    """Split a registered atom by a proper monic divisor, retiring the
    composite from the peeling set.  Returns the replacement exponents.

    The composite must leave the peeling set *before* its pieces are
    decomposed: the divisor divides the atom, so a still-active atom would
    be rediscovered as its own refinement, forever.  Retiring first also
    bounds nested refinements -- every level removes one active atom and
    registers only strictly smaller pieces."""
    try:
        _ACTIVE.remove(atom)
    except ValueError:
        pass  # already retired by an outer refinement
    pieces: dict[Polynomial, int] = {}
    _atoms_of(divisor, pieces, 1)
    _atoms_of(_monic(_div_exact(atom, divisor)), pieces, 1)
    return pieces


def _decompose(p: Polynomial) -> tuple[GaussianRational, dict[Polynomial, int]]:
    """Write p as lc * product of atom powers, splitting new factors as
    finely as the cheap probes allow.  Returns (lc, {atom: exponent})."""
    lc = p.leading_coeff()
    if lc != _GONE:
        p = p.scale(_GONE / lc)
    found: dict[Polynomial, int] = {}
    if not p.is_one():
        _atoms_of(p, found, 1)
    return lc, found


def _cancel(num: Polynomial, factors: dict[Polynomial, int]) -> Polynomial:
    """Divide common atoms out of num, dropping their exponents in place.

    When a large numerator fails a whole-atom division, a real GCD checks
    for a partial overlap; finding one refines the atom into its pieces
    (registry-wide) and the cancellation restarts on the finer factors."""
    restart = True
    while restart:
        restart = False
        for atom in sorted(factors, key=_ATOM_INDEX.__getitem__):
            e = factors[atom]
            while e:
                q = num.exact_div(atom)
                if q is None:
                    break
                num = q
                e -= 1
            if e:
                factors[atom] = e
            else:
                del factors[atom]
                continue
            if len(num.terms) >= _SWELL and atom.total_degree() > 1:
                g = Polynomial.gcd(num, atom)
                if not g.is_constant():
                    g = _monic(g)
                    if 0 < g.total_degree() < atom.total_degree():
                        pieces = _refine_atom(atom, g)
                        del factors[atom]
                        for piece, k in pieces.items():
                            factors[piece] = factors.get(piece, 0) + k * e
                        restart = True
                        break
    return num


def _sorted_factors(factors: dict[Polynomial, int]) -> Factors:
    return tuple(sorted(factors.items(), key=lambda ae: _ATOM_INDEX[ae[0]]))


def _build(num: Polynomial, factors: dict[Polynomial, int]) -> "RationalFunction":
    if num.is_zero():
        return _ZERO_RF
    num = _cancel(num, factors)
    return RationalFunction._raw(num, _sorted_factors(factors))


class RationalFunction:
    __slots__ = ("num", "factors", "_den")

    def __init__(self, num: Polynomial, den: Polynomial, _canonical: bool = False) -> None:
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        lc, factors = _decompose(den)
        if lc != _GONE:
            num = num.scale(_GONE / lc)
        if num.is_zero():
            factors = {}
        elif not _canonical:
            num = _cancel(num, factors)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "factors", _sorted_factors(factors))
        object.__setattr__(self, "_den", None)

    def __setattr__(self, name, value):  # noqa: ANN001
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def _raw(cls, num: Polynomial, factors: Factors) -> "RationalFunction":
        """Trusted constructor: num nonzero and not divisible by any atom."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "factors", factors)
        object.__setattr__(obj, "_den", None)
        return obj

    @property
    def den(self) -> Polynomial:
        """Expanded denominator (monic by construction); cached."""
        d = self._den
        if d is None:
            d = Polynomial.one()
            for atom, e in self.factors:
                for _ in range(e):
                    d = d * atom
            object.__setattr__(self, "_den", d)
        return d

    def denominator_factors(self) -> Factors:
        """The factored denominator as ((atom, exponent), ...)."""
        return self.factors

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "RationalFunction":
        if p.is_zero():
            return _ZERO_RF
        return cls._raw(p, ())

    @classmethod
    def from_gaussian(cls, c: GaussianRational) -> "RationalFunction":
        return cls.from_polynomial(Polynomial.constant(c))

    @classmethod
    def zero(cls) -> "RationalFunction":
        return _ZERO_RF

    @classmethod
    def one(cls) -> "RationalFunction":
        return _ONE_RF

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return not self.factors and self.num.is_one()

    def is_constant(self) -> bool:
        return not self.factors and self.num.is_constant()

    def as_gaussian(self) -> GaussianRational | None:
        if self.factors:
            return None
        return self.num.as_gaussian()

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.factors == other.factors:
            return _build(self.num + other.num, dict(self.factors))
        d1 = dict(self.factors)
        d2 = dict(other.factors)
        common = dict(d1)
        for atom, e in d2.items():
            if common.get(atom, 0) < e:
                common[atom] = e
        n = self.num * _cofactor(common, d1) + other.num * _cofactor(common, d2)
        return _build(n, common)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __neg__(self) -> "RationalFunction":
        if self.num.is_zero():
            return self
        return RationalFunction._raw(-self.num, self.factors)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        if self.num.is_zero() or other.num.is_zero():
            return _ZERO_RF
        merged = dict(self.factors)
        for atom, e in other.factors:
            merged[atom] = merged.get(atom, 0) + e
        return _build(self.num * other.num, merged)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        return self * other.reciprocal()

    def reciprocal(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("reciprocal of zero rational function")
        lc, factors = _decompose(self.num)
        num = self.den.scale(_GONE / lc)
        return _build(num, factors)

    def __pow__(self, e: int) -> "RationalFunction":
        if e < 0:
            return self.reciprocal() ** (-e)
        if e == 0:
            return _ONE_RF
        if e == 1 or self.num.is_zero():
            return self
        num = self.num
        for _ in range(e - 1):
            num = num * self.num
        return RationalFunction._raw(num, tuple((a, k * e) for a, k in self.factors))

    def scale(self, c: GaussianRational) -> "RationalFunction":
        if c.is_zero() or self.num.is_zero():
            return _ZERO_RF
        return RationalFunction._raw(self.num.scale(c), self.factors)

    def conj(self) -> "RationalFunction":
        if self.num.is_zero():
            return self
        factors: dict[Polynomial, int] = {}
        for atom, e in self.factors:
            ac = _register_atom(atom.conj())
            factors[ac] = factors.get(ac, 0) + e
        # Conjugation is an automorphism, so reducedness is preserved.
        return RationalFunction._raw(self.num.conj(), _sorted_factors(factors))

    def derivative(self, var: int) -> "RationalFunction":
        n = self.num
        nd = n.derivative(var)
        if not self.factors:
            return RationalFunction.from_polynomial(nd)
        # With D = prod a^e and R the radical over the atoms that vary:
        # (n/D)' = (n'R - n * sum_a e a' R/a) / (D R); constant atoms keep
        # their exponents, varying ones gain one.
        varying = [(a, e, a.derivative(var)) for a, e in self.factors]
        varying = [(a, e, ad) for a, e, ad in varying if not ad.is_zero()]
        den = dict(self.factors)
        if not varying:
            return _build(nd, den)
        radical = Polynomial.one()
        for a, _, _ in varying:
            radical = radical * a
        acc = Polynomial.zero()
        for a, e, ad in varying:
            acc = acc + (_div_exact(radical, a) * ad).scale(GaussianRational(e, 0))
            den[a] = e + 1
        return _build(nd * radical - n * acc, den)

    partial = derivative

    def sqrt(self) -> "RationalFunction | None":
        """Exact square root in the rational-function field, canonical sign."""
        rn = self.num.sqrt()
        if rn is None:
            return None
        if all(e % 2 == 0 for _, e in self.factors):
            root = RationalFunction._raw(rn, tuple((a, e // 2) for a, e in self.factors))
        else:
            rd = self.den.sqrt()
            if rd is None:
                return None
            root = RationalFunction(rn, rd)
        if not root.leading_coeff_canonical():
            root = -root
        return root

    def leading_coeff_canonical(self) -> bool:
        """True when num's leading coefficient has re > 0, or re == 0 and im > 0."""
        return self.num.leading_coeff().is_positive_canonical()

    # -- evaluation ------------------------------------------------------

    def eval_gaussian(self, point) -> GaussianRational | None:
        """Exact value at a rational point, or None at a pole."""
        d = _GONE
        for atom, e in self.factors:
            v = atom.eval_gaussian(point)
            if v.is_zero():
                return None
            for _ in range(e):
                d = d * v
        return self.num.eval_gaussian(point) / d

    # -- comparison and formatting --------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.factors == other.factors

    def __hash__(self) -> int:
        return hash((self.num, self.factors))

    def __repr__(self) -> str:
        return f"RationalFunction({self!s})"

    def __str__(self) -> str:
        if not self.factors:
            return str(self.num)
        return f"({self.num})/({self.den})"


def _cofactor(target: dict[Polynomial, int], have: dict[Polynomial, int]) -> Polynomial:
    """Product of atom powers lifting `have` up to `target`."""
    out = Polynomial.one()
    for atom, e in target.items():
        for _ in range(e - have.get(atom, 0)):
            out = out * atom
    return out


_ZERO_RF = RationalFunction._raw(Polynomial.zero(), ())
_ONE_RF = RationalFunction._raw(Polynomial.one(), ())
