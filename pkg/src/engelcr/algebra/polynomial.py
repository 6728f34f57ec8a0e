"""Multivariate polynomials over Gaussian rationals in (x, y, u1, u2).

Stored as Gaussian-integer coefficient dictionaries with one common positive
integer denominator, jointly reduced; this form is unique, so equality and
serialization are structural.
"""
from __future__ import annotations

from math import gcd as _igcd

from ._numbers import mpq
from .gaussian import GaussianRational
from .monomials import (
    VAR_KEYS,
    VAR_NAMES,
    format_monomial,
    grevlex_key,
    monomial_divides,
    pack,
    total_degree,
    unpack,
    var_exponent,
)
from .polygcd import (
    PolyDict,
    dict_exact_div,
    dict_mul,
    dict_scale,
    divides_probe,
    gaussian_content,
    gint_exact_div,
    poly_gcd_dict,
)

_ONE = GaussianRational(1, 0)
_MINUS_ONE = GaussianRational(-1, 0)

_ABSENT = object()
_CACHE_LIMIT = 1 << 17
_GCD_CACHE: dict = {}
_DIV_CACHE: dict = {}
_IMG_CACHE: dict = {}


def _lcm(a: int, b: int) -> int:
    return a // _igcd(a, b) * b


class Polynomial:
    """Immutable exact polynomial; construct via the classmethods."""

    __slots__ = ("terms", "den", "_hash")

    def __init__(self, terms: PolyDict, den: int = 1, _normalized: bool = False) -> None:
        if not _normalized:
            terms, den = _normalize(terms, den)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # noqa: ANN001
        raise AttributeError("Polynomial is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return _ZERO

    @classmethod
    def one(cls) -> "Polynomial":
        return _ONE_POLY

    @classmethod
    def constant(cls, c: GaussianRational) -> "Polynomial":
        return cls.from_gaussian_terms({0: c})

    @classmethod
    def integer(cls, n: int) -> "Polynomial":
        return cls({0: (n, 0)}, 1)

    @classmethod
    def variable(cls, var: int) -> "Polynomial":
        return cls({VAR_KEYS[var]: (1, 0)}, 1)

    @classmethod
    def from_gaussian_terms(cls, terms: dict[int, GaussianRational]) -> "Polynomial":
        den = 1
        for c in terms.values():
            den = _lcm(den, _lcm(int(c.re.denominator), int(c.im.denominator)))
        out: PolyDict = {}
        for k, c in terms.items():
            r = int(c.re.numerator) * (den // int(c.re.denominator))
            i = int(c.im.numerator) * (den // int(c.im.denominator))
            if r or i:
                out[k] = (r, i)
        return cls(out, den)

    # -- predicates and views -------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def is_one(self) -> bool:
        return self.den == 1 and self.terms == {0: (1, 0)}

    def as_gaussian(self) -> GaussianRational | None:
        """The constant value when this polynomial is constant, else None."""
        if not self.terms:
            return GaussianRational(0, 0)
        if len(self.terms) == 1 and 0 in self.terms:
            r, i = self.terms[0]
            return GaussianRational(mpq(r, self.den), mpq(i, self.den))
        return None

    def has_real_coefficients(self) -> bool:
        return all(i == 0 for _, i in self.terms.values())

    def variables_used(self) -> set[int]:
        used: set[int] = set()
        for k in self.terms:
            for v in range(4):
                if var_exponent(k, v):
                    used.add(v)
        return used

    def degree(self, var: int) -> int:
        return max((var_exponent(k, var) for k in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((total_degree(k) for k in self.terms), default=-1)

    def leading_key(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=grevlex_key)

    def leading_coeff(self) -> GaussianRational:
        r, i = self.terms[self.leading_key()]
        return GaussianRational(mpq(r, self.den), mpq(i, self.den))

    def coefficient(self, key: int) -> GaussianRational:
        c = self.terms.get(key)
        if c is None:
            return GaussianRational(0, 0)
        return GaussianRational(mpq(c[0], self.den), mpq(c[1], self.den))

    def iter_terms(self):
        """Yield (packed monomial, GaussianRational coefficient) pairs."""
        for k, (r, i) in self.terms.items():
            yield k, GaussianRational(mpq(r, self.den), mpq(i, self.den))

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        d1, d2 = self.den, other.den
        if d1 == d2:
            out = dict(self.terms)
            for k, (r, i) in other.terms.items():
                c = out.get(k)
                if c is None:
                    out[k] = (r, i)
                else:
                    nr, ni = c[0] + r, c[1] + i
                    if nr or ni:
                        out[k] = (nr, ni)
                    else:
                        del out[k]
            return Polynomial(out, d1)
        d = _lcm(d1, d2)
        m1, m2 = d // d1, d // d2
        out = {k: (r * m1, i * m1) for k, (r, i) in self.terms.items()}
        for k, (r, i) in other.terms.items():
            c = out.get(k)
            if c is None:
                out[k] = (r * m2, i * m2)
            else:
                nr, ni = c[0] + r * m2, c[1] + i * m2
                if nr or ni:
                    out[k] = (nr, ni)
                else:
                    del out[k]
        return Polynomial(out, d)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial({k: (-r, -i) for k, (r, i) in self.terms.items()}, self.den, _normalized=True)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(dict_mul(self.terms, other.terms), self.den * other.den)

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative polynomial power")
        out = _ONE_POLY
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def scale(self, c: GaussianRational) -> "Polynomial":
        if c.is_zero():
            return _ZERO
        cd = _lcm(int(c.re.denominator), int(c.im.denominator))
        cr = int(c.re.numerator) * (cd // int(c.re.denominator))
        ci = int(c.im.numerator) * (cd // int(c.im.denominator))
        return Polynomial(dict_scale(self.terms, (cr, ci)), self.den * cd)

    def conj(self) -> "Polynomial":
        return Polynomial({k: (r, -i) for k, (r, i) in self.terms.items()}, self.den, _normalized=True)

    def derivative(self, var: int) -> "Polynomial":
        shift = VAR_KEYS[var]
        out: PolyDict = {}
        for k, (r, i) in self.terms.items():
            e = var_exponent(k, var)
            if e:
                out[k - shift] = (r * e, i * e)
        return Polynomial(out, self.den)

    partial = derivative

    def exact_div(self, other: "Polynomial") -> "Polynomial | None":
        """Exact quotient self/other in the rational-coefficient ring, else None."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return _ZERO
        key = (self, other)
        hit = _DIV_CACHE.get(key, _ABSENT)
        if hit is not _ABSENT:
            return hit
        # Cheap rejections first: in a graded order the leading monomial of a
        # product is the product of leading monomials, so divisibility of the
        # leading monomials is necessary; a failed modular image division is
        # conclusive too.  Both spare the term-by-term division below.  The
        # image cache makes testing one big dividend against many candidate
        # divisors cost a single evaluation pass.
        imgs = _IMG_CACHE.get(self)
        if imgs is None:
            if len(_IMG_CACHE) >= 1 << 12:
                _IMG_CACHE.clear()
            imgs = _IMG_CACHE[self] = {}
        if not monomial_divides(other.leading_key(), self.leading_key()) or \
                not divides_probe(other.terms, self.terms, imgs):
            if len(_DIV_CACHE) >= _CACHE_LIMIT:
                _DIV_CACHE.clear()
            _DIV_CACHE[key] = None
            return None
        cont = gaussian_content(other.terms)
        pp = other.terms if cont == (1, 0) else {
            k: gint_exact_div(c, cont) for k, c in other.terms.items()
        }
        q = dict_exact_div(self.terms, pp)  # type: ignore[arg-type]
        if q is None:
            result = None
        else:
            # self/other = (q / cont) * other.den / self.den
            norm = cont[0] * cont[0] + cont[1] * cont[1]
            scaled = dict_scale(q, (cont[0] * other.den, -cont[1] * other.den))
            result = Polynomial(scaled, self.den * norm)
        if len(_DIV_CACHE) >= _CACHE_LIMIT:
            _DIV_CACHE.clear()
        _DIV_CACHE[key] = result
        return result

    @staticmethod
    def gcd(a: "Polynomial", b: "Polynomial") -> "Polynomial":
        """GCD up to scalar, returned with unit-normalized integer coefficients.

        Results are memoized: the same denominators recombine constantly in
        downstream rational arithmetic, so repeat pairs dominate."""
        hit = _GCD_CACHE.get((a, b), _ABSENT)
        if hit is not _ABSENT:
            return hit
        hit = _GCD_CACHE.get((b, a), _ABSENT)
        if hit is not _ABSENT:
            return hit
        result = Polynomial(poly_gcd_dict(a.terms, b.terms), 1)
        if len(_GCD_CACHE) >= _CACHE_LIMIT:
            _GCD_CACHE.clear()
        _GCD_CACHE[(a, b)] = result
        return result

    def sqrt(self) -> "Polynomial | None":
        """Exact polynomial square root, or None; sign follows the leading root term."""
        if self.is_zero():
            return _ZERO
        lk = self.leading_key()
        exps = unpack(lk)
        if any(e % 2 for e in exps):
            return None
        half = pack(tuple(e // 2 for e in exps))
        c0 = self.leading_coeff().sqrt()
        if c0 is None:
            return None
        root = Polynomial.from_gaussian_terms({half: c0})
        err = self - root * root
        two_c0 = c0 + c0
        prev = None
        while not err.is_zero():
            ek = err.leading_key()
            gk = grevlex_key(ek)
            if prev is not None and gk >= prev:
                return None
            prev = gk
            if not monomial_divides(half, ek) or grevlex_key(ek - half) >= grevlex_key(half):
                return None
            tc = err.leading_coeff() / two_c0
            t = Polynomial.from_gaussian_terms({ek - half: tc})
            err = err - t * (root + root) - t * t
            root = root + t
        return root

    # -- evaluation ------------------------------------------------------

    def eval_gaussian(self, point) -> GaussianRational:
        """Exact value at a point given as a sequence of four rationals."""
        re_acc = mpq(0)
        im_acc = mpq(0)
        for k, (r, i) in self.terms.items():
            m = mpq(1)
            for v in range(4):
                e = var_exponent(k, v)
                if e:
                    m *= mpq(point[v]) ** e
            re_acc += r * m
            im_acc += i * m
        return GaussianRational(re_acc / self.den, im_acc / self.den)

    # -- comparison and formatting --------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.den == other.den and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.den, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Polynomial({self!s})"

    def __str__(self) -> str:
        return poly_to_string(self)


def _normalize(terms: PolyDict, den: int) -> tuple[PolyDict, int]:
    terms = {k: c for k, c in terms.items() if c[0] or c[1]}
    if not terms:
        return {}, 1
    if den == 0:
        raise ZeroDivisionError("zero denominator in polynomial")
    if den < 0:
        den = -den
        terms = {k: (-r, -i) for k, (r, i) in terms.items()}
    g = den
    for r, i in terms.values():
        g = _igcd(g, _igcd(abs(r), abs(i)))
        if g == 1:
            return terms, den
    if g > 1:
        terms = {k: (r // g, i // g) for k, (r, i) in terms.items()}
        den //= g
    return terms, den


_ZERO = Polynomial({}, 1, _normalized=True)
_ONE_POLY = Polynomial({0: (1, 0)}, 1, _normalized=True)

VARIABLES = tuple(Polynomial.variable(v) for v in range(4))
X, Y, U1, U2 = VARIABLES


def poly_to_string(p: Polynomial) -> str:
    """Canonical serialization: grevlex-descending monomials, explicit coefficients."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k in sorted(p.terms, key=grevlex_key, reverse=True):
        r, i = p.terms[k]
        c = GaussianRational(mpq(r, p.den), mpq(i, p.den))
        if k == 0:
            s = str(c)
        elif c == _ONE:
            s = format_monomial(k)
        elif c == _MINUS_ONE:
            s = "-" + format_monomial(k)
        else:
            s = f"{c}*{format_monomial(k)}"
        parts.append(s)
    out = parts[0]
    for s in parts[1:]:
        if s.startswith("-"):
            out += " - " + s[1:]
        else:
            out += " + " + s
    return out


__all__ = ["Polynomial", "poly_to_string", "VARIABLES", "X", "Y", "U1", "U2", "VAR_NAMES"]
