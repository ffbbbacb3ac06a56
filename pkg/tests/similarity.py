"""Random exact similarities for invariance checks."""

import random
from fractions import Fraction

from edgetess.field import ONE, SQRT2, SQRT3, ZERO, ExtScalar
from edgetess.geometry import Point2

COS15 = (SQRT2 * SQRT3 + SQRT2) / 4
SIN15 = (SQRT2 * SQRT3 - SQRT2) / 4
SCALES = (ExtScalar(2), ExtScalar(Fraction(1, 3)), 1 + SQRT3, SQRT2, ExtScalar(Fraction(5, 2)))


def cos_sin(k: int):
    c, s = ONE, ZERO
    for _ in range(k % 24):
        c, s = c * COS15 - s * SIN15, s * COS15 + c * SIN15
    return c, s


def random_similarity(rng: random.Random):
    c, s = cos_sin(rng.randrange(24))
    k = rng.choice(SCALES)
    mirror = rng.random() < 0.5
    tx = ExtScalar(Fraction(rng.randint(-9, 9), rng.randint(1, 4)), 0, rng.randint(-2, 2))
    ty = ExtScalar(Fraction(rng.randint(-9, 9), rng.randint(1, 4)), rng.randint(-2, 2))

    def apply(p: Point2) -> Point2:
        y = -p.y if mirror else p.y
        return Point2(k * (c * p.x - s * y) + tx, k * (s * p.x + c * y) + ty)

    return apply


def shuffle_listing(points, rng: random.Random):
    """Rotate and maybe reverse a vertex list."""
    pts = list(points)
    r = rng.randrange(len(pts))
    pts = pts[r:] + pts[:r]
    return pts[::-1] if rng.random() < 0.5 else pts
