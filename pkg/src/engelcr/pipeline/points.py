"""Deterministic rational sample points that avoid the zero sets of a
finite family of polynomials (recorded denominators, divisors, and the
candidate witness's own numerator)."""
from __future__ import annotations

import random

from ..algebra._numbers import mpq

_DENOMINATORS = (1, 2, 3)


def candidate_points(seed: int):
    """The origin first, then an endless seeded stream of small rational
    4-tuples."""
    yield (mpq(0),) * 4
    rng = random.Random(seed)
    while True:
        yield tuple(
            mpq(rng.randint(-9, 9), rng.choice(_DENOMINATORS))
            for _ in range(4)
        )


def find_point(avoid, seed: int = 0, attempts: int = 400, predicate=None):
    """First candidate point where every polynomial in `avoid` is nonzero
    and the optional predicate holds; None when the budget runs out."""
    stream = candidate_points(seed)
    for _ in range(attempts):
        point = next(stream)
        if any(p.eval_gaussian(point).is_zero() for p in avoid):
            continue
        if predicate is not None and not predicate(point):
            continue
        return point
    return None


def format_point(point) -> list[str]:
    return [str(c) for c in point]
