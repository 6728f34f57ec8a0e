"""End-to-end drivers: run the full reduction on a graph pair and decide
whether the manifold is equivalent to the flat model."""
from __future__ import annotations

from ..errors import DegenerateGraph, NotClassII
from ..rings import ExactRing
from .bundle import invariants_structural, solve_lambda
from .connection import verify_cartan_connection
from .context import RunContext
from .explicit import invariants_explicit
from .generator import GraphData, build_generator
from .normalization import compute_normalizations
from .points import find_point, format_point
from .structure import build_frame, compute_EFGH, solve_structure_functions
from .tower import build_coframe_tower

FLAT = "FLAT"
NON_FLAT = "NON-FLAT"
NOT_CLASS_II = "NOT_CLASS_II"

_WITNESS_ORDER = ("I2", "I3", "I4", "I5")


class PipelineRun:
    """All artifacts of one full reduction, for reporting and oracles."""

    __slots__ = ("ctx", "graph", "generator", "frame", "sf", "norms",
                 "tower", "lambda_solution", "structural", "explicit")

    def __init__(self, ctx, graph, generator, frame, sf, norms, tower,
                 lambda_solution, structural, explicit) -> None:
        self.ctx = ctx
        self.graph = graph
        self.generator = generator
        self.frame = frame
        self.sf = sf
        self.norms = norms
        self.tower = tower
        self.lambda_solution = lambda_solution
        self.structural = structural
        self.explicit = explicit


def run_pipeline(graph: GraphData, ctx: RunContext, route: str = "structural",
                 connection: bool = True) -> PipelineRun:
    """The whole reduction; raises DegenerateGraph / NotClassII (and, in
    strict mode, ConsistencyError on any failed core identity)."""
    L = build_generator(graph, ctx)
    frame = build_frame(L, ctx)
    sf = solve_structure_functions(frame, ctx)
    sf = compute_EFGH(sf, ctx)
    norms = compute_normalizations(sf, ctx, graph.branch)
    tower = build_coframe_tower(sf, norms, ctx)
    sol = solve_lambda(tower, ctx)
    structural = invariants_structural(tower, sol, ctx)
    explicit = None
    if route in ("explicit", "both"):
        explicit = invariants_explicit(sf, norms, tower, ctx, structural)
    if connection:
        verify_cartan_connection(tower, sol, structural, ctx)
    return PipelineRun(ctx, graph, L, frame, sf, norms, tower, sol,
                       structural, explicit)


class Classification:
    __slots__ = ("verdict", "class_ii", "reason", "singular_locus",
                 "witness", "run", "ctx")

    def __init__(self, verdict, class_ii, reason, singular_locus,
                 witness, run, ctx) -> None:
        self.verdict = verdict
        self.class_ii = class_ii
        self.reason = reason
        self.singular_locus = singular_locus
        self.witness = witness
        self.run = run
        self.ctx = ctx

    @property
    def structural(self):
        return self.run.structural if self.run is not None else None

    @property
    def explicit(self):
        return self.run.explicit if self.run is not None else None


def _witness(run: PipelineRun, seed: int) -> dict | None:
    """Lowest-index nonzero invariant among I2..I5, with one rational
    point where it provably does not vanish (away from every recorded
    denominator; the nonvanishing test is branch-independent)."""
    for name in _WITNESS_ORDER:
        value = getattr(run.structural, name)
        if value.is_zero():
            continue
        avoid = run.ctx.registry.polynomials()

        def nonzero_here(point, value=value):
            parts = value.eval_parts(point)
            if parts is None:
                return False
            pv, qv = parts
            if value.ctx is None:
                return not pv.is_zero()
            radicand = value.ctx.radicand.eval_gaussian(point)
            if radicand is None:
                return False
            norm = pv * pv - qv * qv * radicand
            return not norm.is_zero()

        point = find_point(avoid, seed=seed, predicate=nonzero_here)
        if point is None:
            continue
        parts = value.eval_parts(point)
        pv, qv = parts
        if qv.is_zero():
            text = str(pv)
        else:
            radicand = value.ctx.radicand.eval_gaussian(point)
            sign = "" if run.graph.branch == 1 else "-"
            text = f"({pv}) + ({qv})*{sign}sqrt({radicand})"
        return {"invariant": name, "point": format_point(point), "value": text}
    return None


def classify(graph: GraphData, route: str = "structural", strict: bool = True,
             ring=None, seed: int = 0, connection: bool = True) -> Classification:
    ctx = RunContext(ring if ring is not None else ExactRing(), strict=strict)
    try:
        run = run_pipeline(graph, ctx, route=route, connection=connection)
    except DegenerateGraph as exc:
        return Classification(NOT_CLASS_II, False, f"degenerate_graph_denominator: {exc}",
                              ctx.registry.descriptions(), None, None, ctx)
    except NotClassII as exc:
        return Classification(NOT_CLASS_II, False, f"frame_rank_deficient: {exc}",
                              ctx.registry.descriptions(), None, None, ctx)

    locus = ctx.registry.descriptions()
    if run.structural.flat:
        return Classification(FLAT, True, None, locus, None, run, ctx)
    witness = _witness(run, seed)
    return Classification(NON_FLAT, True, None, locus, witness, run, ctx)
