"""Exterior algebra on the line bundle M x {a != 0}.

Functions on the bundle are Laurent polynomials in the fiber coordinate a
with base scalars as coefficients (BundleScalar).  Differential forms
(BundleForm) are indexed by strictly increasing tuples of labels

    0 = da,  1 = sigma,  2 = rho,  3 = zeta,  4 = zetabar,

with BundleScalar components.  The four base labels name the 1-forms dual
to an adapted frame, not coordinate differentials, so `ext_d` and `conj`
take a FrameBasis describing that duality:

  * derivatives of components are taken along the dual frame fields;
  * d of each basis 1-form comes from the frame's bracket table;
  * conj of each basis 1-form comes from the frame's reality relations.

Called without a basis they fall back to flat coordinate semantics
(labels read as coordinate differentials, components differentiated by
coordinate partials), which is what the algebra's own unit tests use.

A Coframe holds n independent 1-forms together with the inverse
change-of-basis matrix (supplied by the caller, which builds it
structurally), so expansion never divides."""
from __future__ import annotations

from .errors import ConsistencyError

DA, DSIGMA, DRHO, DZETA, DZETABAR = 0, 1, 2, 3, 4
LABEL_NAMES = ("da", "sigma", "rho", "zeta", "zetabar")
BASE_LABELS = (DSIGMA, DRHO, DZETA, DZETABAR)


class BundleScalar:
    """Laurent polynomial in a: {exponent: base scalar}."""

    __slots__ = ("ring", "comps")

    def __init__(self, ring, comps: dict) -> None:
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "comps", {k: c for k, c in comps.items() if not c.is_zero()})

    def __setattr__(self, name, value):  # noqa: ANN001
        raise AttributeError("BundleScalar is immutable")

    @classmethod
    def zero(cls, ring) -> "BundleScalar":
        return cls(ring, {})

    @classmethod
    def from_scalar(cls, ring, s, weight: int = 0) -> "BundleScalar":
        return cls(ring, {weight: s})

    def is_zero(self) -> bool:
        return not self.comps

    def weights(self) -> tuple[int, ...]:
        return tuple(sorted(self.comps))

    def coefficient(self, weight: int):
        return self.comps.get(weight, self.ring.zero())

    def sole_coefficient(self, weight: int):
        """The coefficient at the given a-exponent, insisting no other appears."""
        extra = [k for k in self.comps if k != weight]
        if extra:
            raise ConsistencyError(
                f"bundle scalar has unexpected a-exponents {extra} (wanted only {weight})"
            )
        return self.coefficient(weight)

    def __add__(self, other: "BundleScalar") -> "BundleScalar":
        out = dict(self.comps)
        for k, c in other.comps.items():
            cur = out.get(k)
            out[k] = c if cur is None else cur + c
        return BundleScalar(self.ring, out)

    def __sub__(self, other: "BundleScalar") -> "BundleScalar":
        return self + (-other)

    def __neg__(self) -> "BundleScalar":
        return BundleScalar(self.ring, {k: -c for k, c in self.comps.items()})

    def __mul__(self, other: "BundleScalar") -> "BundleScalar":
        out: dict = {}
        for k1, c1 in self.comps.items():
            for k2, c2 in other.comps.items():
                k = k1 + k2
                p = c1 * c2
                cur = out.get(k)
                out[k] = p if cur is None else cur + p
        return BundleScalar(self.ring, out)

    def scale(self, s) -> "BundleScalar":
        return BundleScalar(self.ring, {k: s * c for k, c in self.comps.items()})

    def shift(self, n: int) -> "BundleScalar":
        """Multiply by a**n."""
        return BundleScalar(self.ring, {k + n: c for k, c in self.comps.items()})

    def conj(self) -> "BundleScalar":
        return BundleScalar(self.ring, {k: c.conj() for k, c in self.comps.items()})

    def partial(self, var: int) -> "BundleScalar":
        """Coordinate partial of every coefficient (flat semantics)."""
        return BundleScalar(self.ring, {k: c.partial(var) for k, c in self.comps.items()})

    def apply_field(self, field) -> "BundleScalar":
        """Directional derivative of every coefficient along a base field."""
        return BundleScalar(self.ring, {k: field.apply(c) for k, c in self.comps.items()})

    def a_derivative(self) -> "BundleScalar":
        ring = self.ring
        return BundleScalar(
            ring, {k - 1: c * ring.from_int(k) for k, c in self.comps.items() if k != 0}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BundleScalar):
            return NotImplemented
        return self.comps == other.comps

    def __hash__(self):
        raise TypeError("BundleScalar is not hashable")

    def __repr__(self) -> str:
        if not self.comps:
            return "0"
        return " + ".join(f"a^{k}*({c})" for k, c in sorted(self.comps.items()))


def _merge_labels(i: tuple[int, ...], j: tuple[int, ...]):
    """Merge two disjoint increasing label tuples; return (merged, parity sign)
    or None when they overlap."""
    merged = []
    sign = 1
    a, b = list(i), list(j)
    ka = kb = 0
    while ka < len(a) and kb < len(b):
        if a[ka] == b[kb]:
            return None
        if a[ka] < b[kb]:
            merged.append(a[ka])
            ka += 1
        else:
            # b[kb] jumps over the remaining entries of a
            if (len(a) - ka) % 2:
                sign = -sign
            merged.append(b[kb])
            kb += 1
    merged.extend(a[ka:])
    merged.extend(b[kb:])
    return tuple(merged), sign


class FrameBasis:
    """Differential data of the moving coframe dual to an adapted frame.

    fields      -- the four frame fields dual to the base labels, in label
                   order; coefficients of forms are differentiated along
                   these.
    brackets    -- {(v, w): frame components of [e_v, e_w]} for v < w,
                   components in the same label order.
    d_table     -- d of each basis 1-form, derived from the brackets by
                   d(theta^k)(e_v, e_w) = -<theta^k, [e_v, e_w]>.
    conj_table  -- conj of each basis 1-form (da included, it is real),
                   derived from the frame components of each conj(e_v) by
                   <conj(theta^k), e_v> = conj(<theta^k, conj(e_v)>).
    """

    __slots__ = ("ring", "fields", "brackets", "d_table", "conj_table")

    def __init__(self, ring, fields, brackets, d_table, conj_table) -> None:
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "fields", tuple(fields))
        object.__setattr__(self, "brackets", dict(brackets))
        object.__setattr__(self, "d_table", dict(d_table))
        object.__setattr__(self, "conj_table", dict(conj_table))

    def __setattr__(self, name, value):  # noqa: ANN001
        raise AttributeError("FrameBasis is immutable")

    @classmethod
    def build(cls, ring, fields, brackets, conjugates) -> "FrameBasis":
        """Derive both tables from the bracket components and the frame
        components of each field's conjugate (one source of truth each)."""
        d_comps: dict = {lab: {} for lab in BASE_LABELS}
        for (v, w), comps in brackets.items():
            for k, c in enumerate(comps):
                if not c.is_zero():
                    d_comps[DSIGMA + k][(DSIGMA + v, DSIGMA + w)] = \
                        BundleScalar.from_scalar(ring, -c)
        d_table = {lab: BundleForm(ring, 2, t) for lab, t in d_comps.items()}

        conj_table = {DA: BundleForm.basis_form(ring, DA)}
        for k in range(4):
            comps = {}
            for v in range(4):
                c = conjugates[v][k].conj()
                if not c.is_zero():
                    comps[(DSIGMA + v,)] = BundleScalar.from_scalar(ring, c)
            conj_table[DSIGMA + k] = BundleForm(ring, 1, comps)

        return cls(ring, fields, brackets, d_table, conj_table)


class BundleForm:
    __slots__ = ("ring", "degree", "comps")

    def __init__(self, ring, degree: int, comps: dict) -> None:
        clean = {}
        for labels, f in comps.items():
            if len(labels) != degree or list(labels) != sorted(labels):
                raise ValueError(f"bad label tuple {labels} for degree {degree}")
            if not f.is_zero():
                clean[labels] = f
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "comps", clean)

    def __setattr__(self, name, value):  # noqa: ANN001
        raise AttributeError("BundleForm is immutable")

    @classmethod
    def zero(cls, ring, degree: int) -> "BundleForm":
        return cls(ring, degree, {})

    @classmethod
    def function(cls, ring, f: BundleScalar) -> "BundleForm":
        return cls(ring, 0, {(): f})

    @classmethod
    def basis_form(cls, ring, label: int) -> "BundleForm":
        """The basis 1-form carrying the given label."""
        one = BundleScalar.from_scalar(ring, ring.one())
        return cls(ring, 1, {(label,): one})

    def component(self, labels: tuple[int, ...]) -> BundleScalar:
        return self.comps.get(labels, BundleScalar.zero(self.ring))

    def is_zero(self) -> bool:
        return not self.comps

    def __add__(self, other: "BundleForm") -> "BundleForm":
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degree")
        out = dict(self.comps)
        for labels, f in other.comps.items():
            cur = out.get(labels)
            out[labels] = f if cur is None else cur + f
        return BundleForm(self.ring, self.degree, out)

    def __sub__(self, other: "BundleForm") -> "BundleForm":
        return self + (-other)

    def __neg__(self) -> "BundleForm":
        return BundleForm(self.ring, self.degree, {k: -f for k, f in self.comps.items()})

    def scale(self, s: BundleScalar) -> "BundleForm":
        return BundleForm(self.ring, self.degree, {k: s * f for k, f in self.comps.items()})

    def scale_base(self, s) -> "BundleForm":
        return self.scale(BundleScalar.from_scalar(self.ring, s))

    def wedge(self, other: "BundleForm") -> "BundleForm":
        out: dict = {}
        for i, f in self.comps.items():
            for j, g in other.comps.items():
                merged = _merge_labels(i, j)
                if merged is None:
                    continue
                labels, sign = merged
                term = f * g
                if sign < 0:
                    term = -term
                cur = out.get(labels)
                out[labels] = term if cur is None else cur + term
        return BundleForm(self.ring, self.degree + other.degree, out)

    def ext_d(self, basis: FrameBasis | None = None) -> "BundleForm":
        """Exterior derivative, including the da-direction.

        With a basis, coefficients are differentiated along the dual frame
        fields and each basis 1-form in a wedge word contributes its
        d-table entry (Leibniz, with the position sign); without one,
        coordinate semantics apply and the basis forms are closed."""
        out: dict = {}

        def accumulate(labels: tuple[int, ...], term: BundleScalar) -> None:
            cur = out.get(labels)
            out[labels] = term if cur is None else cur + term

        def add_wedge(label: int, base: tuple[int, ...], df: BundleScalar) -> None:
            if df.is_zero():
                return
            merged = _merge_labels((label,), base)
            if merged is None:
                return
            labels, sign = merged
            accumulate(labels, -df if sign < 0 else df)

        for base_labels, f in self.comps.items():
            if basis is None:
                for v in range(4):
                    add_wedge(DSIGMA + v, base_labels, f.partial(v))
            else:
                for v in range(4):
                    add_wedge(DSIGMA + v, base_labels, f.apply_field(basis.fields[v]))
            add_wedge(DA, base_labels, f.a_derivative())
            if basis is None:
                continue
            for pos, lab in enumerate(base_labels):
                if lab == DA:
                    continue  # d(da) = 0
                dtheta = basis.d_table[lab]
                if dtheta.is_zero():
                    continue
                rest = base_labels[:pos] + base_labels[pos + 1:]
                outer_neg = bool(pos % 2)
                for pair_labels, g in dtheta.comps.items():
                    merged = _merge_labels(pair_labels, rest)
                    if merged is None:
                        continue
                    labels, sign = merged
                    term = f * g
                    if (sign < 0) != outer_neg:
                        term = -term
                    accumulate(labels, term)
        return BundleForm(self.ring, self.degree + 1, out)

    def conj(self, basis: FrameBasis | None = None) -> "BundleForm":
        """Conjugation.  With a basis, each basis 1-form conjugates through
        the conj-table; without one, all labels are treated as real."""
        if basis is None:
            return BundleForm(self.ring, self.degree,
                              {k: f.conj() for k, f in self.comps.items()})
        out = BundleForm.zero(self.ring, self.degree)
        for labels, f in self.comps.items():
            term = BundleForm.function(self.ring, f.conj())
            for lab in labels:
                term = term.wedge(basis.conj_table[lab])
            out = out + term
        return out

    def contract_vertical(self) -> "BundleForm":
        """Interior product with the vertical field a * d/da."""
        out: dict = {}
        for labels, f in self.comps.items():
            if labels and labels[0] == DA:
                out[labels[1:]] = f.shift(1)
        return BundleForm(self.ring, self.degree - 1, out)

    def pair_vector(self, field) -> BundleScalar:
        """Evaluate a 1-form with no da-component on a field given by its
        four components along the dual frame."""
        if self.degree != 1:
            raise ValueError("pairing is defined for 1-forms")
        out = BundleScalar.zero(self.ring)
        for labels, f in self.comps.items():
            if labels[0] == DA:
                raise ValueError("form has a da-component; pair with bundle fields instead")
            c = field.coeffs[labels[0] - 1]
            if not c.is_zero():
                out = out + f.scale(c)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BundleForm):
            return NotImplemented
        return self.degree == other.degree and self.comps == other.comps

    def __hash__(self):
        raise TypeError("BundleForm is not hashable")

    def __repr__(self) -> str:
        if not self.comps:
            return "0"
        parts = []
        for labels, f in sorted(self.comps.items()):
            basis = "^".join(LABEL_NAMES[v] for v in labels) or "1"
            parts.append(f"[{f!r}] {basis}")
        return " + ".join(parts)


def wedge(a: BundleForm, b: BundleForm) -> BundleForm:
    return a.wedge(b)


def ext_d(a: BundleForm, basis: FrameBasis | None = None) -> BundleForm:
    return a.ext_d(basis)


class Coframe:
    """n independent 1-forms over n basis labels, with explicit inverse.

    matrix[i][k] is the component of forms[i] on the basis form labels[k];
    inverse[k][i] expresses basis form labels[k] = sum_i inverse[k][i] *
    forms[i].  The inverse is supplied by the caller; check_inverse()
    verifies the product."""

    __slots__ = ("ring", "labels", "forms", "matrix", "inverse")

    def __init__(self, ring, labels, forms, matrix, inverse) -> None:
        labels = tuple(labels)
        n = len(labels)
        forms = tuple(forms)
        if len(forms) != n or len(matrix) != n or len(inverse) != n:
            raise ValueError("coframe needs matching counts of labels, forms, and matrix rows")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "forms", forms)
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in matrix))
        object.__setattr__(self, "inverse", tuple(tuple(row) for row in inverse))

    def __setattr__(self, name, value):  # noqa: ANN001
        raise AttributeError("Coframe is immutable")

    @classmethod
    def from_matrix(cls, ring, labels, matrix, inverse) -> "Coframe":
        forms = []
        for row in matrix:
            comps = {(lab,): f for lab, f in zip(labels, row)}
            forms.append(BundleForm(ring, 1, comps))
        return cls(ring, labels, forms, matrix, inverse)

    def size(self) -> int:
        return len(self.labels)

    def check_inverse(self) -> dict:
        """Nonzero entries of matrix*inverse - identity; empty means the
        supplied inverse is exact."""
        n = self.size()
        one = BundleScalar.from_scalar(self.ring, self.ring.one())
        bad: dict = {}
        for i in range(n):
            for j in range(n):
                acc = BundleScalar.zero(self.ring)
                for k in range(n):
                    acc = acc + self.matrix[i][k] * self.inverse[k][j]
                if i == j:
                    acc = acc - one
                if not acc.is_zero():
                    bad[(i, j)] = acc
        return bad

    def _label_pos(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"label {LABEL_NAMES[label]} not spanned by this coframe") from None

    def expand_one_form(self, form: BundleForm) -> list[BundleScalar]:
        """Components of a 1-form in this coframe."""
        out = [BundleScalar.zero(self.ring) for _ in range(self.size())]
        for labels, f in form.comps.items():
            k = self._label_pos(labels[0])
            for i in range(self.size()):
                c = self.inverse[k][i]
                if not c.is_zero():
                    out[i] = out[i] + f * c
        return out

    def expand_two_form(self, form: BundleForm) -> dict:
        """Components of a 2-form in the wedge basis forms[i] ^ forms[j], i < j."""
        n = self.size()
        out: dict = {}
        for labels, f in form.comps.items():
            j, k = labels
            rj = self.inverse[self._label_pos(j)]
            rk = self.inverse[self._label_pos(k)]
            for p in range(n):
                for q in range(p + 1, n):
                    c = rj[p] * rk[q] - rj[q] * rk[p]
                    if c.is_zero():
                        continue
                    term = f * c
                    cur = out.get((p, q))
                    out[(p, q)] = term if cur is None else cur + term
        return {pq: v for pq, v in out.items() if not v.is_zero()}


def expand_in_coframe(form: BundleForm, coframe: Coframe):
    if form.degree == 1:
        return coframe.expand_one_form(form)
    if form.degree == 2:
        return coframe.expand_two_form(form)
    raise ValueError("expansion implemented for degrees 1 and 2")
