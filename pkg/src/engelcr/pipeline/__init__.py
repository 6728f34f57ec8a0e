"""The geometric pipeline: generator, frame, structure functions,
normalizations, coframe tower, connection form, and invariants."""
from .bundle import (InvariantSet, LambdaSolution, build_bundle_coframe,
                     invariants_structural, solve_lambda)
from .classify import (FLAT, NON_FLAT, NOT_CLASS_II, Classification,
                       PipelineRun, classify, run_pipeline)
from .connection import verify_cartan_connection
from .context import CheckRecord, DenominatorRegistry, RunContext
from .corpus import random_class_ii, random_polynomial
from .explicit import invariants_explicit
from .generator import GraphData, build_generator
from .normalization import Normalizations, compute_normalizations
from .points import candidate_points, find_point
from .structure import (StructureFunctions, build_frame, compute_EFGH,
                        solve_structure_functions)
from .tower import CoframeTower, build_coframe_tower

__all__ = [
    "FLAT", "NON_FLAT", "NOT_CLASS_II",
    "CheckRecord", "Classification", "CoframeTower", "DenominatorRegistry",
    "GraphData", "InvariantSet", "LambdaSolution", "Normalizations",
    "PipelineRun", "RunContext", "StructureFunctions",
    "build_bundle_coframe", "build_coframe_tower", "build_frame",
    "build_generator", "candidate_points", "classify", "compute_EFGH",
    "compute_normalizations", "find_point", "invariants_explicit",
    "invariants_structural", "random_class_ii", "random_polynomial",
    "run_pipeline", "solve_lambda", "solve_structure_functions",
    "verify_cartan_connection",
]
