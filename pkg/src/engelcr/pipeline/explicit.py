"""Closed-form expressions for the invariants, used as a cross-check.

The derived (structural) route is authoritative; these formulas are
evaluated independently from the structure functions and normalizations
and compared against it.  Discrepancies are reported, never raised:
the printed sources of closed forms of this kind are prone to
transcription slips, and indeed the fifth formula disagrees with the
derived route on known examples (see the extra "variant" diagnostic).

Subscript derivatives: X_zeta means the derivative of X along the vector
field dual to the final zeta coframe form; by the triangular shape of
the normalization shifts this dual field is beta * L, and its conjugate
partner is conj(L) / beta."""
from __future__ import annotations

from .bundle import InvariantSet
from .context import RunContext
from .normalization import Normalizations
from .structure import StructureFunctions
from .tower import ZETA, ZETABAR, CoframeTower


def invariants_explicit(sf: StructureFunctions, norms: Normalizations,
                        tower: CoframeTower, ctx: RunContext,
                        structural: InvariantSet | None = None) -> InvariantSet:
    ring = ctx.ring
    frame = sf.frame
    L, Lbar = frame.L, frame.Lbar
    A, B, P, Q = sf.A, sf.B, sf.P, sf.Q
    beta = norms.beta
    C0, B0, D0 = norms.C0, norms.B0, norms.D0
    i = ring.i()

    def r(p, q):
        return ring.from_rational(p, q)

    lb = L.apply(B)
    llb = L.apply(lb)
    lllb = L.apply(llb)
    la = L.apply(A)
    lp = L.apply(P)
    lq = L.apply(Q)
    llq = L.apply(lq)
    lbar_b = Lbar.apply(B)
    lbar_q = Lbar.apply(Q)
    b32 = B * beta  # B^(3/2)

    I2bar = (i * r(1, 8) * Q * lb * lb / beta
             - i * r(1, 8) * beta * lb * Q * Q
             - i * r(3, 4) * llb * lb / beta
             + i * r(1, 4) * beta * lb * lq
             - i * r(1, 2) * beta * P * lb
             - i * r(1, 4) * beta * Q * llb
             - i * r(1, 4) * beta * Q * llb
             - i * r(3, 4) * b32 * Q * lq
             + i * r(1, 2) * b32 * P * Q
             + i * r(3, 8) * lb * lb * lb / b32
             + i * r(1, 8) * b32 * Q * Q * Q
             + i * r(1, 2) * b32 * llq
             + i * r(1, 2) * beta * lllb
             - i * b32 * lp)
    I2 = I2bar.conj()

    I3 = (-D0 * C0
          + (lb / beta) * D0
          + beta * Q * D0
          + (A / beta) * D0
          - Lbar.apply(D0) / beta
          - i * B0 * D0
          + i * B0 * B0 * C0
          - (A / beta) * B0 * C0
          + B0 * la
          + B * P * B0
          + (Lbar.apply(B0) / beta) * C0
          + r(1, 2) * (lbar_b / (B * beta)) * B0 * C0)

    I4bar = (i * r(3, 4) * lb * lb / B
             + i * r(1, 6) * lb * Q
             + i * r(11, 36) * B * Q * Q
             - i * llb
             - i * r(2, 3) * B * lq
             + i * B * P)
    I4 = I4bar.conj()

    I5bar = (i * r(1, 3) * la
             + i * r(1, 3) * lbar_q
             - i * Lbar.apply(lb) / B
             + i * r(5, 12) * lb * lb / B
             - i * r(1, 3) * B * lq
             + i * r(11, 36) * B * Q * Q
             + i * B * P
             + i * r(2, 3) * L.apply(lbar_b) / B
             - i * r(1, 3) * llb
             + i * r(1, 3) * A * lb / B
             + i * r(7, 18) * lb * Q
             - i * r(1, 9) * lbar_b * Q / B
             + i * r(1, 9) * A * Q)
    I5 = I5bar.conj()

    duals = tower.dual_fields()
    L3, L3bar = duals[ZETA], duals[ZETABAR]
    two_thirds_i = i * r(2, 3)
    I1 = two_thirds_i * L3.apply(I3) - two_thirds_i * L3bar.apply(I2)
    I0 = -(r(1, 2) * (L3.apply(I1) + L3bar.apply(I1.conj())))

    flat = all(s.is_zero() for s in (I2, I3, I4, I5))
    result = InvariantSet(I0, I1, I2, I3, I4, I5, route="explicit",
                          declared_weights=(4, 4, 3, 3, 2, 2),
                          observed_weights=None, flat=flat)

    if structural is not None:
        for name in ("I0", "I1", "I2", "I3", "I4", "I5"):
            ctx.diagnostic(f"inv.explicit_match_{name}",
                           getattr(result, name) - getattr(structural, name))
        # The fifth formula with its L(Q) coefficient read as -i instead of
        # -i/3 matches the derived route on every example tried; recorded
        # to document where the transcribed version deviates.
        I5bar_variant = I5bar - i * r(2, 3) * B * lq
        ctx.diagnostic("inv.explicit_I5_variant_match",
                       I5bar_variant.conj() - structural.I5)
    return result
