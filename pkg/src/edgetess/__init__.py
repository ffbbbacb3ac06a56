"""Polygons whose reflections in their own edges tile the plane."""

from .angles import (
    AngleMultiset,
    AngleSolution,
    enumerate_multisets,
    max_edge_count,
    param_solution_quad,
    param_solution_triangle,
    solve_system,
)
from .catalog import (
    Family,
    FamilyTag,
    Polygon,
    Rejected,
    canonical_polygon,
    classify,
    has_bisector_symmetry,
    interior_angles,
)
from .field import ExtScalar
from .geometry import Isometry, Point2, Vec2, apply, classify_angle, compose, reflection_across
from .render import RenderStyle, render_svg
from .tiling import Patch, Tile, VerificationReport, expand, reflect_in_edge, verify

__version__ = "0.1.0"
