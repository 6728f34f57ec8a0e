"""The adapted frame (L, Lbar, T, S), the two structure functions of the
conjugate-span relation, the pair governing [L, S], and the four torsion
coefficients read off iterated brackets.

Frame conventions:  T = i[L, Lbar],  S = [L, T].  Nondegeneracy (the
"class II" condition) is det(S, T, L, Lbar) != 0.  All expansions below
are in the frame order (L, Lbar, T, S) used by FrameMatrix.expand, so
component 2 is the T-coefficient and component 3 the S-coefficient.
"""
from __future__ import annotations

from ..calculus import FrameMatrix, VectorField
from ..errors import NotClassII
from .context import RunContext


class StructureFunctions:
    """Scalar data attached to the frame:

    conj(S) = A*T + B*S          (A, B)
    [L, S]  = P*T + Q*S          (P, Q)
    [S, Lbar] = -E*T - F*S       (E, F)
    [S, T]    = -G*T - H*S       (G, H)
    """

    __slots__ = ("frame", "A", "B", "P", "Q", "E", "F", "G", "H")

    def __init__(self, frame: FrameMatrix, A, B, P, Q, E=None, F=None, G=None, H=None) -> None:
        self.frame = frame
        self.A = A
        self.B = B
        self.P = P
        self.Q = Q
        self.E = E
        self.F = F
        self.G = G
        self.H = H


def build_frame(L: VectorField, ctx: RunContext) -> FrameMatrix:
    frame = FrameMatrix.from_generator(L)
    det = frame.det()
    if det.is_zero():
        raise NotClassII(
            "the iterated brackets T = i[L, conj(L)] and S = [L, T] do not "
            "span: the frame determinant vanishes identically"
        )
    ctx.register(det, divisor=True)
    return frame


def solve_structure_functions(frame: FrameMatrix, ctx: RunContext) -> StructureFunctions:
    ring = ctx.ring
    L, Lbar = frame.L, frame.Lbar

    # conj(S) in the frame: no L or Lbar component, then A, B.
    c_sbar = frame.expand(frame.S.conj())
    ctx.check("frame.conjugate_span_L", c_sbar[0])
    ctx.check("frame.conjugate_span_Lbar", c_sbar[1])
    A, B = c_sbar[2], c_sbar[3]

    # [L, S] in the frame: again purely a (T, S) combination.
    c_ls = frame.expand(L.bracket(frame.S))
    ctx.check("frame.bracket_span_L", c_ls[0])
    ctx.check("frame.bracket_span_Lbar", c_ls[1])
    P, Q = c_ls[2], c_ls[3]

    lb = L.apply(B)
    lbar_b = Lbar.apply(B)

    # Conjugating the defining relations forces these four identities.
    ctx.check("structure.B_unit_modulus", B * B.conj() - ring.one())
    ctx.check("structure.A_antisymmetry", A.conj() + B.conj() * A)
    ctx.check("structure.Q_conjugation_rule",
              Q.conj() - (lb + B * Q + A + A + lbar_b / B))
    ctx.check("structure.P_conjugation_rule",
              P.conj() - (B * L.apply(A) - A * lb - B * A * Q - A * A
                          - A * lbar_b / B + Lbar.apply(A) + B * B * P))

    for s in (A, P, Q):
        ctx.register(s)
    ctx.register(B, divisor=True)
    return StructureFunctions(frame, A, B, P, Q)


def compute_EFGH(sf: StructureFunctions, ctx: RunContext) -> StructureFunctions:
    """Torsion coefficients, primarily from brackets; the closed-form
    expressions in (A, B, P, Q) and their derivatives are re-derived and
    compared as identity checks."""
    frame = sf.frame
    L, Lbar, T, S = frame.L, frame.Lbar, frame.T, frame.S
    A, B, P, Q = sf.A, sf.B, sf.P, sf.Q
    ring = ctx.ring
    i = ring.i()

    c_slbar = frame.expand(S.bracket(Lbar))
    ctx.check("torsion.SLbar_zeta_component", c_slbar[0])
    ctx.check("torsion.SLbar_zetabar_component", c_slbar[1])
    E, F = -c_slbar[2], -c_slbar[3]

    c_st = frame.expand(S.bracket(T))
    ctx.check("torsion.ST_zeta_component", c_st[0])
    ctx.check("torsion.ST_zetabar_component", c_st[1])
    G, H = -c_st[2], -c_st[3]

    # [T, Lbar] carries the same two functions that conj(S) does.
    c_tlbar = frame.expand(T.bracket(Lbar))
    ctx.check("duality.TLbar_zeta_component", c_tlbar[0])
    ctx.check("duality.TLbar_zetabar_component", c_tlbar[1])
    ctx.check("duality.TLbar_rho_slot", -c_tlbar[2] - A)
    ctx.check("duality.TLbar_sigma_slot", -c_tlbar[3] - B)

    la, lb = L.apply(A), L.apply(B)
    lp, lq = L.apply(P), L.apply(Q)

    ctx.check("torsion.E_formula_match", E - (la + B * P))
    ctx.check("torsion.F_formula_match", F - (lb + B * Q + A))

    g_closed = i * (L.apply(la) + (P + P) * lb + B * lp - Lbar.apply(P) - Q * la)
    h_closed = i * (la + la + L.apply(lb) + Q * lb + B * lq - Lbar.apply(Q))
    ctx.check("torsion.G_closed_form", G - g_closed, core=False)
    ctx.check("torsion.H_closed_form", H - h_closed, core=False)
    ctx.diagnostic("torsion.G_closed_form_unconjugated",
                   G - i * (L.apply(la) + (P + P) * lb + B * lp - lp - Q * la))
    ctx.diagnostic("torsion.H_closed_form_unconjugated",
                   H - i * (la + la + L.apply(lb) + Q * lb + B * lq - lq))

    for s in (E, F, G, H):
        ctx.register(s)
    return StructureFunctions(frame, A, B, P, Q, E, F, G, H)
