"""Seeded random rational point sets."""

from __future__ import annotations

import random
from fractions import Fraction

from .kernel import AffinePoint, PointSet, orient


def random_rational_set(n: int, seed: int, span: int = 50, max_den: int = 4, general: bool = False) -> PointSet:
    """n distinct points with small denominators, not all on one line.

    With ``general`` set, no three of the points are collinear.
    """
    if n < 3:
        raise ValueError("need at least three points")
    rng = random.Random(seed)
    pts: list[AffinePoint] = []
    seen = set()
    while len(pts) < n:
        den = rng.randint(1, max_den)
        p = AffinePoint(Fraction(rng.randint(-span * den, span * den), den), Fraction(rng.randint(-span * den, span * den), den))
        if p in seen:
            continue
        if general and any(orient(a, b, p) == 0 for i, a in enumerate(pts) for b in pts[i + 1 :]):
            continue
        seen.add(p)
        pts.append(p)
    if all(orient(pts[0], pts[1], r) == 0 for r in pts[2:]):
        return random_rational_set(n, seed + 1, span, max_den, general)
    return PointSet(tuple(pts))


def random_rational_points(count: int, seed: int, span: int = 1000, max_den: int = 1000) -> list[AffinePoint]:
    rng = random.Random(seed)
    return [
        AffinePoint(Fraction(rng.randint(-span, span), rng.randint(1, max_den)), Fraction(rng.randint(-span, span), rng.randint(1, max_den)))
        for _ in range(count)
    ]
