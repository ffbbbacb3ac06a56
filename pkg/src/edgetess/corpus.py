"""Exact polygons that must fail: the refutation corpus.

Each builder checks its own angle sequence with the classifier's angle
routine, so a typo in coordinates fails loudly instead of silently testing
a different shape.
"""

from __future__ import annotations

from .catalog import Polygon, interior_angles
from .field import SQRT3, ExtScalar


def _checked(p: Polygon, expected) -> Polygon:
    got = interior_angles(p)
    if got != list(expected):
        raise AssertionError(f"corpus polygon has angles {got}, expected {list(expected)}")
    return p


def triangle_45_60_75() -> Polygon:
    # 45 at the origin, 60 at (1+sqrt3, 0), 75 at the apex
    return _checked(Polygon.of((0, 0), (1 + SQRT3, 0), (SQRT3, SQRT3)), (45, 60, 75))


def scalene_right_triangle() -> Polygon:
    """Legs 2 and 1: the acute angles are arctan(1/2) and arctan(2)."""
    p = Polygon.of((0, 0), (2, 0), (0, 1))
    if interior_angles(p) is not None:
        raise AssertionError("expected a non-15-degree angle")
    return p


def lattice_triangle() -> Polygon:
    p = Polygon.of((0, 0), (4, 0), (1, 2))
    if interior_angles(p) is not None:
        raise AssertionError("expected a non-15-degree angle")
    return p


def house_pentagon() -> Polygon:
    """Unit-high walls, width 2, roof apex raised by sqrt3/3 so it is 120 degrees."""
    return _checked(
        Polygon.of((0, 0), (2, 0), (2, 1), (1, 1 + SQRT3 / 3), (0, 1)),
        (90, 90, 120, 120, 120),
    )


def rhombus_30_150() -> Polygon:
    half = ExtScalar(1) / 2
    return _checked(
        Polygon.of((0, 0), (1, 0), (1 + SQRT3 / 2, half), (SQRT3 / 2, half)),
        (30, 150, 30, 150),
    )


def lopsided_kite() -> Polygon:
    """Angles 60, 90, 120, 90 in order, but the legs at 120 differ.

    60 at the origin with sides 3 (along x) and 4 (along 60 degrees).
    """
    return _checked(
        Polygon.of((0, 0), (3, 0), (3, 5 * SQRT3 / 3), (2, 2 * SQRT3)),
        (60, 90, 120, 90),
    )


IMPOSTORS = {
    "triangle-45-60-75": triangle_45_60_75,
    "scalene-right": scalene_right_triangle,
    "house-pentagon": house_pentagon,
    "rhombus-30-150": rhombus_30_150,
    "lopsided-kite": lopsided_kite,
}
