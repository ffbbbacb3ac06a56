"""The eight edge-tessellating shapes: exact representatives and a classifier."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .angles import ALLOWED_ANGLES
from .field import ONE, SQRT3, ZERO, ExtScalar, parse_scalar
from .geometry import (
    Point2,
    apply,
    cross,
    dist2,
    classify_angle,
    orient,
    reflection_across,
)


class InvalidPolygonError(ValueError):
    pass


class PolygonParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class FamilyTag(enum.Enum):
    Equilateral = "Equilateral"
    ThirtyRight = "ThirtyRight"
    IsoscelesRight = "IsoscelesRight"
    OneTwentyIsosceles = "OneTwentyIsosceles"
    Rectangle = "Rectangle"
    SixtyRhombus = "SixtyRhombus"
    Kite609012090 = "Kite609012090"
    RegularHexagon = "RegularHexagon"


TRIANGLE_TAGS = (
    FamilyTag.Equilateral,
    FamilyTag.ThirtyRight,
    FamilyTag.IsoscelesRight,
    FamilyTag.OneTwentyIsosceles,
)


def _segments_cross(p1, p2, q1, q2) -> bool:
    """Closed segments p1p2 and q1q2 share at least one point."""
    d1, d2 = orient(q1, q2, p1), orient(q1, q2, p2)
    d3, d4 = orient(p1, p2, q1), orient(p1, p2, q2)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True

    def on_segment(a, b, c):
        return min(a.x, b.x) <= c.x <= max(a.x, b.x) and min(a.y, b.y) <= c.y <= max(a.y, b.y)

    return (
        (d1 == 0 and on_segment(q1, q2, p1))
        or (d2 == 0 and on_segment(q1, q2, p2))
        or (d3 == 0 and on_segment(p1, p2, q1))
        or (d4 == 0 and on_segment(p1, p2, q2))
    )


def signed_area2(points) -> ExtScalar:
    total = ZERO
    n = len(points)
    for i in range(n):
        p, q = points[i], points[(i + 1) % n]
        total = total + (p.x * q.y - q.x * p.y)
    return total


@dataclass(frozen=True)
class Polygon:
    """Strictly convex, simple, counterclockwise polygon with exact vertices."""

    vertices: tuple[Point2, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        n = len(vs)
        if n < 3:
            raise InvalidPolygonError("a polygon needs at least 3 vertices")
        for i in range(n):
            if vs[i] == vs[(i + 1) % n]:
                raise InvalidPolygonError(f"vertices {i} and {(i + 1) % n} coincide")
        if signed_area2(vs).sign() <= 0:
            raise InvalidPolygonError("vertices are not in counterclockwise order")
        for i in range(n):
            if orient(vs[i - 1], vs[i], vs[(i + 1) % n]) <= 0:
                raise InvalidPolygonError(f"vertex {i} is reflex or straight")
        for i in range(n):
            for j in range(i + 2, n):
                if i == 0 and j == n - 1:
                    continue
                if _segments_cross(vs[i], vs[(i + 1) % n], vs[j], vs[(j + 1) % n]):
                    raise InvalidPolygonError(f"edges {i} and {j} intersect")

    @classmethod
    def of(cls, *coords) -> Polygon:
        return cls(tuple(Point2.of(x, y) for x, y in coords))

    @classmethod
    def oriented(cls, points) -> Polygon:
        """Accept either orientation; clockwise input is reversed."""
        pts = tuple(points)
        if len(pts) >= 3 and signed_area2(pts).sign() < 0:
            pts = pts[::-1]
        return cls(pts)

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def edge_lengths2(self) -> list[ExtScalar]:
        return [dist2(p, q) for p, q in self.edges()]

    def transformed(self, iso) -> Polygon:
        return Polygon.oriented(apply(iso, v) for v in self.vertices)


def _normalize_ratio(r) -> ExtScalar:
    r = ExtScalar.coerce(r)
    if r.sign() <= 0:
        raise ValueError("aspect ratio must be positive")
    return r.inv() if r > ONE else r


@dataclass(frozen=True)
class Family:
    """A similarity class from the catalog; rectangles carry an aspect ratio.

    The ratio is stored normalized to at most 1, so ratio r and 1/r compare equal.
    """

    tag: FamilyTag
    ratio: ExtScalar | None = field(default=None)

    def __post_init__(self):
        if self.tag is FamilyTag.Rectangle:
            if self.ratio is None:
                raise ValueError("Rectangle requires an aspect ratio")
            object.__setattr__(self, "ratio", _normalize_ratio(self.ratio))
        elif self.ratio is not None:
            raise ValueError(f"{self.tag.value} takes no parameters")

    def __str__(self):
        if self.tag is FamilyTag.Rectangle:
            return f"Rectangle ratio {self.ratio}"
        return self.tag.value


def all_families(rect_ratios=(ONE,)) -> list[Family]:
    out = []
    for tag in FamilyTag:
        if tag is FamilyTag.Rectangle:
            out.extend(Family(tag, r) for r in rect_ratios)
        else:
            out.append(Family(tag))
    return out


def canonical_polygon(f: Family | FamilyTag) -> Polygon:
    if isinstance(f, FamilyTag):
        f = Family(f)
    h = SQRT3 / 2
    s3 = SQRT3
    tag = f.tag
    if tag is FamilyTag.Equilateral:
        coords = [(0, 0), (2, 0), (1, s3)]
    elif tag is FamilyTag.ThirtyRight:
        coords = [(0, 0), (s3, 0), (0, 1)]
    elif tag is FamilyTag.IsoscelesRight:
        coords = [(0, 0), (1, 0), (0, 1)]
    elif tag is FamilyTag.OneTwentyIsosceles:
        coords = [(0, 0), (2 * s3, 0), (s3, 1)]
    elif tag is FamilyTag.Rectangle:
        w, r = ONE, f.ratio
        coords = [(0, 0), (w, 0), (w, w * r), (0, w * r)]
    elif tag is FamilyTag.SixtyRhombus:
        coords = [(0, 0), (1, 0), (ExtScalar(3, 0) / 2, h), (ExtScalar(1) / 2, h)]
    elif tag is FamilyTag.Kite609012090:
        coords = [(0, 0), (3, -s3), (4, 0), (3, s3)]
    elif tag is FamilyTag.RegularHexagon:
        coords = [(2, 0), (1, s3), (-1, s3), (-2, 0), (-1, -s3), (1, -s3)]
    else:  # pragma: no cover
        raise ValueError(f"unknown family {tag}")
    return Polygon.of(*coords)


def vertex_angle(vertices, i: int) -> int | None:
    """Interior angle at vertex i of a counterclockwise vertex list."""
    n = len(vertices)
    v = vertices[i]
    return classify_angle(vertices[(i + 1) % n] - v, vertices[i - 1] - v)


def interior_angles(p: Polygon) -> list[int] | None:
    """Per-vertex interior angles, or None if any is not a multiple of 15."""
    if not isinstance(p, Polygon):
        raise InvalidPolygonError("expected a Polygon")
    angles = [vertex_angle(p.vertices, i) for i in range(len(p))]
    if any(a is None for a in angles):
        return None
    return angles


def has_bisector_symmetry(p: Polygon, i: int) -> bool:
    """Does the mirror in the angle bisector at vertex i map the polygon to itself?

    That mirror swaps the two edge rays at vertex i, so it carries the next
    vertex onto the previous one only when the two incident edges have equal
    length; a strictly convex polygon has no other vertex on either ray.
    """
    n = len(p)
    if not -n <= i < n:
        raise IndexError(f"vertex index {i} out of range for {n}-gon")
    vs = p.vertices
    v, nxt, prv = vs[i], vs[(i + 1) % n], vs[i - 1]
    if dist2(v, nxt) != dist2(v, prv):
        return False
    # equal legs: nxt + prv - v lies on the bisector
    on_bisector = Point2(nxt.x + prv.x - v.x, nxt.y + prv.y - v.y)
    mirror = reflection_across(v, on_bisector)
    return {apply(mirror, w) for w in vs} == set(vs)


@dataclass(frozen=True)
class Rejected:
    reason: str
    detail: str = ""

    def __str__(self):
        return f"rejected: {self.reason}" + (f" ({self.detail})" if self.detail else "")


def _cyclic_matches(seq, pattern) -> bool:
    n = len(seq)
    if n != len(pattern):
        return False
    for cand in (list(seq), list(seq)[::-1]):
        for k in range(n):
            if cand[k:] + cand[:k] == list(pattern):
                return True
    return False


def _all_equal(xs) -> bool:
    return all(x == xs[0] for x in xs)


def classify(p: Polygon) -> Family | Rejected:
    if not isinstance(p, Polygon):
        raise InvalidPolygonError("expected a Polygon")
    angles = interior_angles(p)
    if angles is None:
        return Rejected("angle-set", "an interior angle is not a multiple of 15 degrees")
    bad = sorted(set(a for a in angles if a not in ALLOWED_ANGLES))
    if bad:
        return Rejected("angle-set", f"angles {bad} outside {list(ALLOWED_ANGLES)}")

    e = len(p)
    if e not in (3, 4, 6):
        return Rejected(
            "edge-count",
            f"{e} edges; at most 6 edges are possible and no pentagon qualifies",
        )

    for i, a in enumerate(angles):
        if a == 120 and not has_bisector_symmetry(p, i):
            return Rejected("kaleidoscope", f"120-degree vertex {i} is not bisector-symmetric")

    counts = Counter(angles)
    sides = p.edge_lengths2()
    if e == 3:
        key = tuple(sorted(angles))
        tag = {
            (60, 60, 60): FamilyTag.Equilateral,
            (30, 60, 90): FamilyTag.ThirtyRight,
            (45, 45, 90): FamilyTag.IsoscelesRight,
            (30, 30, 120): FamilyTag.OneTwentyIsosceles,
        }.get(key)
        if tag is not None:
            return Family(tag)
    elif e == 4:
        if counts[90] == 4:
            # adjacent sides u, w: w = ratio * rot90(u), so ratio = cross(u, w) / |u|^2
            v0, v1, v2 = p.vertices[0], p.vertices[1], p.vertices[2]
            u, w = v1 - v0, v2 - v1
            return Family(FamilyTag.Rectangle, cross(u, w) / dist2(v0, v1))
        if _cyclic_matches(angles, (60, 120, 60, 120)) and _all_equal(sides):
            return Family(FamilyTag.SixtyRhombus)
        if _cyclic_matches(angles, (60, 90, 120, 90)):
            k = angles.index(60)
            # sides leaving the 60 vertex, then the two meeting at 120
            if sides[k] == sides[k - 1] and sides[(k + 1) % 4] == sides[(k + 2) % 4]:
                return Family(FamilyTag.Kite609012090)
    elif e == 6:
        if counts[120] == 6 and _all_equal(sides):
            return Family(FamilyTag.RegularHexagon)
    return Rejected("no-family", f"angles {angles} match no catalog shape")


# -- polygon file format -------------------------------------------------


def parse_polygon(text: str) -> Polygon:
    """Parse the 8-tokens-per-vertex polygon format; either orientation accepted."""
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 8:
            raise PolygonParseError(f"expected 8 rational tokens, found {len(tokens)}", lineno)
        try:
            x = parse_scalar(tokens[:4])
            y = parse_scalar(tokens[4:])
        except (ValueError, ZeroDivisionError) as exc:
            raise PolygonParseError(str(exc), lineno) from None
        points.append(Point2(x, y))
    try:
        return Polygon.oriented(points)
    except InvalidPolygonError as exc:
        raise PolygonParseError(f"invalid polygon: {exc}") from None


def load_polygon(path) -> Polygon:
    return parse_polygon(Path(path).read_text(encoding="utf-8"))


def format_polygon(p: Polygon, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    for v in p.vertices:
        lines.append(f"{v.x.to_text()}  {v.y.to_text()}")
    return "\n".join(lines) + "\n"


TAG_ALIASES = {
    "equilateral": FamilyTag.Equilateral,
    "thirtyright": FamilyTag.ThirtyRight,
    "30-right": FamilyTag.ThirtyRight,
    "isoscelesright": FamilyTag.IsoscelesRight,
    "isosceles-right": FamilyTag.IsoscelesRight,
    "onetwentyisosceles": FamilyTag.OneTwentyIsosceles,
    "120-isosceles": FamilyTag.OneTwentyIsosceles,
    "rectangle": FamilyTag.Rectangle,
    "sixtyrhombus": FamilyTag.SixtyRhombus,
    "60-rhombus": FamilyTag.SixtyRhombus,
    "kite609012090": FamilyTag.Kite609012090,
    "kite": FamilyTag.Kite609012090,
    "60-90-120-kite": FamilyTag.Kite609012090,
    "regularhexagon": FamilyTag.RegularHexagon,
    "hexagon": FamilyTag.RegularHexagon,
}


def lookup_tag(name: str) -> FamilyTag | None:
    return TAG_ALIASES.get(name.strip().lower())



__all__ = [
    "Family",
    "FamilyTag",
    "InvalidPolygonError",
    "Polygon",
    "PolygonParseError",
    "Rejected",
    "all_families",
    "canonical_polygon",
    "classify",
    "format_polygon",
    "has_bisector_symmetry",
    "interior_angles",
    "load_polygon",
    "lookup_tag",
    "parse_polygon",
    "vertex_angle",
]
