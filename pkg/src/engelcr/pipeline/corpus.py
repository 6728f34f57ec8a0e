"""Seeded random graph pairs satisfying the nondegeneracy conditions,
for the identity-suite tests: degree <= 3, small nonzero integer
coefficients, a handful of terms each."""
from __future__ import annotations

import random

from ..algebra import U1, U2, VARIABLES, X, Y, Polynomial
from ..errors import DegenerateGraph, NotClassII
from ..rings import ExactRing
from .context import RunContext
from .generator import GraphData, build_generator
from .structure import build_frame

_COEFFS = (-2, -1, 1, 2)

_MONOMIALS: list[tuple[int, int, int, int]] = [
    (e0, e1, e2, e3)
    for e0 in range(4) for e1 in range(4) for e2 in range(4) for e3 in range(4)
    if 1 <= e0 + e1 + e2 + e3 <= 3
]


def random_polynomial(rng: random.Random, max_terms: int = 4,
                      max_u_degree: int | None = None) -> Polynomial:
    pool = _MONOMIALS
    if max_u_degree is not None:
        pool = [m for m in pool if m[2] + m[3] <= max_u_degree]
    n_terms = rng.randint(1, max_terms)
    chosen = rng.sample(pool, n_terms)
    total = Polynomial.zero()
    for exps in chosen:
        term = Polynomial.integer(rng.choice(_COEFFS))
        for var, e in zip((X, Y, U1, U2), exps):
            if e:
                term = term * var ** e
        total = total + term
    return total


def random_class_ii(seed: int, count: int, max_terms: int = 4,
                    max_u_degree: int | None = None) -> list[GraphData]:
    """Draw until `count` pairs pass both nondegeneracy gates.

    `max_u_degree` caps the graph-variable degree of each monomial; the
    symbolic tower stays small for low caps, which keeps exhaustive exact
    identity suites affordable, while the identities themselves do not
    depend on the drawing distribution."""
    rng = random.Random(seed)
    out: list[GraphData] = []
    while len(out) < count:
        graph = GraphData(random_polynomial(rng, max_terms, max_u_degree),
                          random_polynomial(rng, max_terms, max_u_degree))
        probe = RunContext(ExactRing(), strict=True)
        try:
            build_frame(build_generator(graph, probe), probe)
        except (DegenerateGraph, NotClassII):
            continue
        out.append(graph)
    return out
