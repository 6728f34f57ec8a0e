"""The descending chain of coframes, computed in the frame-dual basis.

Stage 0 is the coframe (sigma0, rho0, zeta0, zetabar0) dual to the frame
(S, T, L, Lbar); every later form is expressed in that basis, so stage 0
is the identity matrix and each stage multiplies by one explicit factor:

    stage 1: sigma1 = sigma0/beta, zeta1 = zeta0/beta  (and conjugates)
    stage 2: rho2 = rho1 + C0*sigma1, zeta2 = zeta1 + B0*rho1
    stage 3: zeta3 = zeta2 + D0*sigma2

U1 is diagonal, U2 = I + N with N^3 = 0, U3 = I + M with M^2 = 0, and
the inverses chain the factor inverses the other way; check_inverse then
certifies each stage by multiplying the small products out in full.

The basis itself carries the differential structure: d of each basis form
comes from the frame bracket table (whose coefficients are the certified
structure functions), conjugation from the conjugate-span relations, and
zeta0 is pinned to the literal coordinate differential dz by pairing the
raw frame fields against z = x + iy."""
from __future__ import annotations

from ..algebra import Polynomial
from ..calculus import VectorField
from ..exterior import BASE_LABELS, BundleScalar, Coframe, FrameBasis
from .context import RunContext
from .normalization import Normalizations
from .structure import StructureFunctions

BASE = BASE_LABELS

# Coframe row order used throughout: (sigma, rho, zeta, zetabar).
SIGMA, RHO, ZETA, ZETABAR = 0, 1, 2, 3


def _mat_mul(a, b):
    n = len(a)
    return [[sum_products(a[i], [b[k][j] for k in range(n)]) for j in range(n)]
            for i in range(n)]


def sum_products(row, col):
    acc = None
    for x, y in zip(row, col):
        term = x * y
        acc = term if acc is None else acc + term
    return acc


def _identity(ring, n=4):
    one, zero = ring.one(), ring.zero()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def _row_sub(row_a, row_b):
    return [x - y for x, y in zip(row_a, row_b)]


def _wrap(ring, m):
    return [[BundleScalar.from_scalar(ring, s) for s in row] for row in m]


def _row_deviations(row):
    return {k: r for k, r in enumerate(row) if not r.is_zero()}


def build_frame_basis(sf: StructureFunctions, ring) -> FrameBasis:
    """Bracket table and conjugate-span table of the adapted frame, in the
    dual order (S, T, L, Lbar).  Every coefficient below is a certified
    structure function: the span checks in the structure stage verified
    that each bracket has no L or Lbar component, and the conjugation
    checks pinned the (A, B) relations."""
    frame = sf.frame
    i = ring.i()
    one, zero = ring.one(), ring.zero()
    brackets = {
        (0, 1): (-sf.H, -sf.G, zero, zero),   # [S, T]
        (0, 2): (-sf.Q, -sf.P, zero, zero),   # [S, L]
        (0, 3): (-sf.F, -sf.E, zero, zero),   # [S, Lbar]
        (1, 2): (-one, zero, zero, zero),     # [T, L]
        (1, 3): (-sf.B, -sf.A, zero, zero),   # [T, Lbar]
        (2, 3): (zero, -i, zero, zero),       # [L, Lbar]
    }
    conjugates = (
        (sf.B, sf.A, zero, zero),             # conj(S) = A*T + B*S
        (zero, one, zero, zero),              # conj(T) = T
        (zero, zero, zero, one),              # conj(L) = Lbar
        (zero, zero, one, zero),              # conj(Lbar) = L
    )
    return FrameBasis.build(ring, (frame.S, frame.T, frame.L, frame.Lbar),
                            brackets, conjugates)


class CoframeTower:
    __slots__ = ("ring", "frame", "sf", "norms", "basis",
                 "om2", "om3", "m2", "m2_inv", "m3", "m3_inv")

    def __init__(self, ring, frame, sf, norms, basis,
                 om2, om3, m2, m2_inv, m3, m3_inv) -> None:
        self.ring = ring
        self.frame = frame
        self.sf = sf
        self.norms = norms
        self.basis = basis
        self.om2 = om2
        self.om3 = om3
        self.m2 = m2
        self.m2_inv = m2_inv
        self.m3 = m3
        self.m3_inv = m3_inv

    def dual_fields(self) -> tuple[VectorField, ...]:
        """Vector fields dual to (sigma, rho, zeta, zetabar) at stage 3,
        as coordinate fields: column j of the inverse matrix combines the
        frame fields into the j-th dual."""
        fields = self.basis.fields
        out = []
        for j in range(4):
            acc = VectorField.zero(self.ring)
            for v in range(4):
                c = self.m3_inv[v][j]
                if not c.is_zero():
                    acc = acc + fields[v].scale(c)
            out.append(acc)
        return tuple(out)


def _conj_row(row, sf):
    """Components of the conjugate of sum_k row[k] * theta^k, using the
    basis conjugation rules conj(sigma0) = conj(B)*sigma0,
    conj(rho0) = rho0 + conj(A)*sigma0, conj(zeta0) = zetabar0."""
    cs, cr, cz, czb = (s.conj() for s in row)
    return [cs * sf.B.conj() + cr * sf.A.conj(), cr, czb, cz]


def build_coframe_tower(sf: StructureFunctions, norms: Normalizations,
                        ctx: RunContext) -> CoframeTower:
    ring = ctx.ring
    frame = sf.frame
    i = ring.i()
    one = ring.one()

    basis = build_frame_basis(sf, ring)

    # Pin the abstract basis to coordinates: zeta0, dual to L, is the
    # literal differential of z = x + iy (and zetabar0 of its conjugate)
    # exactly when the raw frame fields pair against z as L does.
    z = ring.graph_scalar(Polynomial.variable(0)) \
        + i * ring.graph_scalar(Polynomial.variable(1))
    zbar = z.conj()
    pairings_z = [frame.S.apply(z), frame.T.apply(z),
                  frame.L.apply(z) - one, frame.Lbar.apply(z)]
    pairings_zbar = [frame.S.apply(zbar), frame.T.apply(zbar),
                     frame.L.apply(zbar), frame.Lbar.apply(zbar) - one]
    ctx.check("tower.zeta0_is_dz", _row_deviations(pairings_z))
    ctx.check("tower.zetabar0_is_dzbar", _row_deviations(pairings_zbar))

    beta = norms.beta
    beta_inv = one / beta
    C0, B0, D0 = norms.C0, norms.B0, norms.D0
    B0bar, D0bar = B0.conj(), norms.D0bar

    # Stage factors.  The conjugate rows satisfy
    #   zetabar1 = beta * zetabar0,
    #   zetabar2 = zetabar1 + B0bar*rho1 + B0bar*conj(A)*beta*sigma1,
    #   zetabar3 = zetabar2 + D0bar*sigma2,
    # using conj(rho0) = rho0 + conj(A)*sigma0 and conj(sigma1) = sigma1.
    u1 = _identity(ring)
    u1[SIGMA][SIGMA] = beta_inv
    u1[ZETA][ZETA] = beta_inv
    u1[ZETABAR][ZETABAR] = beta

    u1_inv = _identity(ring)
    u1_inv[SIGMA][SIGMA] = beta
    u1_inv[ZETA][ZETA] = beta
    u1_inv[ZETABAR][ZETABAR] = beta_inv

    bab = B0bar * sf.A.conj() * beta
    u2 = _identity(ring)
    u2[RHO][SIGMA] = C0
    u2[ZETA][RHO] = B0
    u2[ZETABAR][RHO] = B0bar
    u2[ZETABAR][SIGMA] = bab

    u2_inv = _identity(ring)  # I - N + N^2
    u2_inv[RHO][SIGMA] = -C0
    u2_inv[ZETA][RHO] = -B0
    u2_inv[ZETA][SIGMA] = B0 * C0
    u2_inv[ZETABAR][RHO] = -B0bar
    u2_inv[ZETABAR][SIGMA] = -bab + B0bar * C0

    u3 = _identity(ring)
    u3[ZETA][SIGMA] = D0
    u3[ZETABAR][SIGMA] = D0bar

    u3_inv = _identity(ring)
    u3_inv[ZETA][SIGMA] = -D0
    u3_inv[ZETABAR][SIGMA] = -D0bar

    m2 = _mat_mul(u2, u1)
    m2_inv = _mat_mul(u1_inv, u2_inv)
    m3 = _mat_mul(u3, m2)
    m3_inv = _mat_mul(m2_inv, u3_inv)

    ctx.check("sigma1.real",
              _row_deviations(_row_sub(_conj_row(m2[SIGMA], sf), m2[SIGMA])))
    ctx.check("rho2.real",
              _row_deviations(_row_sub(_conj_row(m2[RHO], sf), m2[RHO])))
    ctx.check("tower.zetabar2_conjugate_row",
              _row_deviations(_row_sub(_conj_row(m2[ZETA], sf), m2[ZETABAR])))

    om2 = Coframe.from_matrix(ring, BASE, _wrap(ring, m2), _wrap(ring, m2_inv))
    om3 = Coframe.from_matrix(ring, BASE, _wrap(ring, m3), _wrap(ring, m3_inv))

    ctx.check("tower.om2_invertible", om2.check_inverse())
    ctx.check("tower.invertible", om3.check_inverse())

    # The D0 normalization seen back in the structure equation: in the
    # stage-2 basis, d(rho2) must carry i*D0 on sigma^zetabar, -i*conj(D0)
    # on sigma^zeta, and exactly i on zeta^zetabar.
    d_rho2 = om2.forms[RHO].ext_d(basis)
    slots = om2.expand_two_form(d_rho2)

    def slot(p, q):
        return slots.get((p, q), BundleScalar.zero(ring))

    ctx.check("norm.D0_slot",
              slot(SIGMA, ZETABAR) - BundleScalar.from_scalar(ring, i * D0))
    ctx.check("norm.D0_conj_coherent",
              slot(SIGMA, ZETA) + BundleScalar.from_scalar(ring, i * D0bar))
    ctx.check("norm.rho2_zeta_slot",
              slot(ZETA, ZETABAR) - BundleScalar.from_scalar(ring, i))

    return CoframeTower(ring, frame, sf, norms, basis,
                        om2, om3, m2, m2_inv, m3, m3_inv)
