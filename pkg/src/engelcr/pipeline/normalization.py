"""Group-parameter normalizations.

Scaling the coframe to put the structure equations in shape introduces a
square root beta with beta^2 = B (branch selectable); the three shifts
C0, B0, D0 below are the unique choices that kill the absorbable terms
at each stage of the reduction.  All three have closed forms in the
structure data; D0 is square-root free."""
from __future__ import annotations

from .context import RunContext
from .structure import StructureFunctions


class Normalizations:
    __slots__ = ("beta", "C0", "B0", "D0", "D0bar", "branch")

    def __init__(self, beta, C0, B0, D0, D0bar, branch: int) -> None:
        self.beta = beta
        self.C0 = C0
        self.B0 = B0
        self.D0 = D0
        self.D0bar = D0bar
        self.branch = branch


def compute_normalizations(sf: StructureFunctions, ctx: RunContext, branch: int = 1) -> Normalizations:
    ring = ctx.ring
    frame = sf.frame
    L, Lbar = frame.L, frame.Lbar
    A, B, P, Q = sf.A, sf.B, sf.P, sf.Q

    i = ring.i()
    half = ring.from_rational(1, 2)
    third = ring.from_rational(1, 3)
    sixth = ring.from_rational(1, 6)

    beta = ring.sqrt_branch(B, branch)
    lb = L.apply(B)
    lbar_b = Lbar.apply(B)

    C0 = half * lb / beta + half * Q * beta
    B0 = (i * third) * lbar_b / (B * beta) - (i * third) * A / beta \
        - (i * sixth) * beta * Q - (i * sixth) * lb / beta
    D0 = -(i * ring.from_rational(2, 3)) * lb * Q \
        - (i * sixth) * lb * A / B \
        - (i * sixth) * A * Q \
        + (i * sixth) * lbar_b * Q / B \
        - (i * third) * lb * lb / B \
        - (i * third) * B * Q * Q \
        - i * L.apply(A) \
        - (i * third) * lbar_b * lb / (B * B) \
        + (i * half) * Lbar.apply(lb) / B \
        + (i * half) * Lbar.apply(Q) \
        - i * B * P
    D0bar = D0.conj()

    ctx.diagnostic("normalization.D0bar_alternative_form",
                   D0bar - ((i * half) * lb * lb / B
                            + (i * third) * Q * lb
                            - (i * half) * L.apply(lb)
                            - (i * half) * B * L.apply(Q)
                            + (i * half) * A * lb / B
                            + (i * sixth) * A * Q
                            + i * B * P))

    for s in (C0, B0, D0):
        ctx.register(s)
    ctx.register(beta)
    return Normalizations(beta, C0, B0, D0, D0bar, branch)
