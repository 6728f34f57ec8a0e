"""Vector fields on R^4 with scalar coefficients, Lie brackets, and frame
expansion by Cramer's rule.

A VectorField holds its components in the coordinate basis
(d/dx, d/dy, d/du1, d/du2).  FrameMatrix rows are the four frame fields
(L, Lbar, T, S) produced from a graph generator by iterated brackets; the
frame is nondegenerate exactly when its determinant is a nonzero function.
"""
from __future__ import annotations

NCOORDS = 4


class VectorField:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs) -> None:
        coeffs = tuple(coeffs)
        if len(coeffs) != NCOORDS:
            raise ValueError("a vector field has four coordinate components")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):  # noqa: ANN001
        raise AttributeError("VectorField is immutable")

    @classmethod
    def zero(cls, ring) -> "VectorField":
        z = ring.zero()
        return cls(ring, (z, z, z, z))

    def apply(self, scalar):
        """Directional derivative of a scalar along this field."""
        out = self.ring.zero()
        for v, c in enumerate(self.coeffs):
            if not c.is_zero():
                out = out + c * scalar.partial(v)
        return out

    def bracket(self, other: "VectorField") -> "VectorField":
        """Lie bracket [self, other]."""
        out = []
        for k in range(NCOORDS):
            acc = self.ring.zero()
            for v in range(NCOORDS):
                a = self.coeffs[v]
                if not a.is_zero():
                    acc = acc + a * other.coeffs[k].partial(v)
                b = other.coeffs[v]
                if not b.is_zero():
                    acc = acc - b * self.coeffs[k].partial(v)
            out.append(acc)
        return VectorField(self.ring, out)

    def conj(self) -> "VectorField":
        return VectorField(self.ring, tuple(c.conj() for c in self.coeffs))

    def scale(self, s) -> "VectorField":
        return VectorField(self.ring, tuple(s * c for c in self.coeffs))

    def __add__(self, other: "VectorField") -> "VectorField":
        return VectorField(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "VectorField") -> "VectorField":
        return VectorField(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "VectorField":
        return VectorField(self.ring, tuple(-a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __repr__(self) -> str:
        names = ("d/dx", "d/dy", "d/du1", "d/du2")
        parts = [f"({c})*{n}" for c, n in zip(self.coeffs, names) if not c.is_zero()]
        return " + ".join(parts) if parts else "0"


def _det2(a, b, c, d):
    return a * d - b * c


def det4(rows):
    """Determinant of a 4x4 matrix of scalars, by Laplace expansion on the
    first two rows against the last two (six 2x2 minors each)."""
    r0, r1, r2, r3 = rows
    top = {}
    bot = {}
    for j in range(4):
        for k in range(j + 1, 4):
            top[j, k] = _det2(r0[j], r0[k], r1[j], r1[k])
            bot[j, k] = _det2(r2[j], r2[k], r3[j], r3[k])
    return (
        top[0, 1] * bot[2, 3]
        - top[0, 2] * bot[1, 3]
        + top[0, 3] * bot[1, 2]
        + top[1, 2] * bot[0, 3]
        - top[1, 3] * bot[0, 2]
        + top[2, 3] * bot[0, 1]
    )


class FrameMatrix:
    """The four frame fields in row order (L, Lbar, T, S)."""

    __slots__ = ("ring", "L", "Lbar", "T", "S", "_det")

    def __init__(self, L: VectorField, Lbar: VectorField, T: VectorField, S: VectorField) -> None:
        object.__setattr__(self, "ring", L.ring)
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "Lbar", Lbar)
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "_det", None)

    def __setattr__(self, name, value):  # noqa: ANN001
        raise AttributeError("FrameMatrix is immutable")

    @classmethod
    def from_generator(cls, L: VectorField) -> "FrameMatrix":
        """Build the frame by iterated brackets: T = i*[L, Lbar], S = [L, T]."""
        Lbar = L.conj()
        T = L.bracket(Lbar).scale(L.ring.i())
        S = L.bracket(T)
        return cls(L, Lbar, T, S)

    @property
    def fields(self) -> tuple[VectorField, VectorField, VectorField, VectorField]:
        return (self.L, self.Lbar, self.T, self.S)

    def rows(self):
        return [f.coeffs for f in self.fields]

    def det(self):
        if self._det is None:
            object.__setattr__(self, "_det", det4(self.rows()))
        return self._det

    def expand(self, field: VectorField):
        """Coefficients (cL, cLbar, cT, cS) with field == cL*L + cLbar*Lbar + cT*T + cS*S.

        Cramer's rule on the transposed system: replace one frame row by the
        field and divide by the frame determinant (division happens once per
        coefficient, at the end)."""
        base = self.rows()
        d = self.det()
        out = []
        for r in range(4):
            rows = list(base)
            rows[r] = field.coeffs
            out.append(det4(rows) / d)
        return tuple(out)


def apply_field(field: VectorField, scalar):
    return field.apply(scalar)


def lie_bracket(a: VectorField, b: VectorField) -> VectorField:
    return a.bracket(b)


def expand_in_frame(field: VectorField, frame: FrameMatrix):
    return frame.expand(field)
