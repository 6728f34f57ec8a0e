"""From a pair of graphing polynomials to the tangent generator of the
holomorphic distribution.

The hypersurface-pair input is

    v1 = phi1(x, y, u1, u2),    v2 = phi2(x, y, u1, u2),

with z = x + i y and w_j = u_j + i v_j.  A generator L of the CR bundle
is determined by demanding that L annihilate both defining equations'
antiholomorphic parts; writing L = (1/2) d/dx - (i/2) d/dy + A1 d/du1
+ A2 d/du2 this is a 2x2 linear system with determinant

    D = (i + phi1_u1) (i + phi2_u2) - phi1_u2 phi2_u1.

D != 0 is required for the graph to define the structure at all.
"""
from __future__ import annotations

from ..algebra import Polynomial, parse_expression
from ..calculus import VectorField
from ..errors import DegenerateGraph
from .context import RunContext

_X, _Y, _U1, _U2 = 0, 1, 2, 3


class GraphData:
    """A validated pair of real graphing polynomials plus the branch sign
    used later when a square root is introduced."""

    __slots__ = ("phi1", "phi2", "branch")

    def __init__(self, phi1: Polynomial, phi2: Polynomial, branch: int = 1) -> None:
        if branch not in (1, -1):
            raise ValueError("branch must be +1 or -1")
        for name, phi in (("phi1", phi1), ("phi2", phi2)):
            if not phi.has_real_coefficients():
                raise ValueError(f"{name} must have real coefficients")
        self.phi1 = phi1
        self.phi2 = phi2
        self.branch = branch

    @classmethod
    def from_strings(cls, phi1_text: str, phi2_text: str, branch: int = 1) -> "GraphData":
        return cls(parse_expression(phi1_text), parse_expression(phi2_text), branch)

    def __repr__(self) -> str:
        return f"GraphData(phi1={self.phi1!s}, phi2={self.phi2!s}, branch={self.branch})"


def _holomorphic_derivative(ring, phi: Polynomial):
    """(d/dz) phi = (phi_x - i phi_y) / 2 as a ring scalar."""
    px = ring.graph_scalar(phi.derivative(_X))
    py = ring.graph_scalar(phi.derivative(_Y))
    return (px - ring.i() * py) * ring.from_rational(1, 2)


def build_generator(graph: GraphData, ctx: RunContext) -> VectorField:
    """Solve the tangency system for L; raises DegenerateGraph when the
    system's determinant vanishes identically."""
    ring = ctx.ring
    i = ring.i()

    p1_u1 = ring.graph_scalar(graph.phi1.derivative(_U1))
    p1_u2 = ring.graph_scalar(graph.phi1.derivative(_U2))
    p2_u1 = ring.graph_scalar(graph.phi2.derivative(_U1))
    p2_u2 = ring.graph_scalar(graph.phi2.derivative(_U2))
    p1_z = _holomorphic_derivative(ring, graph.phi1)
    p2_z = _holomorphic_derivative(ring, graph.phi2)

    det = (i + p1_u1) * (i + p2_u2) - p1_u2 * p2_u1
    if det.is_zero():
        raise DegenerateGraph(
            "degenerate graph: the tangency determinant "
            "(i + phi1_u1)*(i + phi2_u2) - phi1_u2*phi2_u1 vanishes identically"
        )
    ctx.register(det, divisor=True)

    a1 = (-p1_z * (i + p2_u2) + p1_u2 * p2_z) / det
    a2 = (-p2_z * (i + p1_u1) + p1_z * p2_u1) / det
    ctx.register(a1)
    ctx.register(a2)

    L = VectorField(ring, (ring.from_rational(1, 2), ring.from_rational(-1, 2) * i, a1, a2))

    # The defining property, re-checked directly against the graph data.
    ctx.check("frame.tangency_phi1", (i + p1_u1) * a1 + p1_u2 * a2 + p1_z)
    ctx.check("frame.tangency_phi2", p2_u1 * a1 + (i + p2_u2) * a2 + p2_z)
    return L
