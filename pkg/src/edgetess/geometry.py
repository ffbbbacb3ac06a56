"""Exact points, vectors, isometries and 15-degree angle recognition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .field import ONE, SQRT3, ZERO, ExtScalar


class DegenerateEdgeError(ValueError):
    pass


class ZeroVectorError(ValueError):
    pass


def _s(v) -> ExtScalar:
    return ExtScalar.coerce(v)


class Vec2(NamedTuple):
    dx: ExtScalar
    dy: ExtScalar

    @classmethod
    def of(cls, dx, dy) -> Vec2:
        return cls(_s(dx), _s(dy))

    def __add__(self, other):
        return Vec2(self.dx + other.dx, self.dy + other.dy)

    def __sub__(self, other):
        return Vec2(self.dx - other.dx, self.dy - other.dy)

    def __neg__(self):
        return Vec2(-self.dx, -self.dy)

    def scaled(self, k) -> Vec2:
        return Vec2(self.dx * k, self.dy * k)

    def is_zero(self) -> bool:
        return self.dx.is_zero() and self.dy.is_zero()


class Point2(NamedTuple):
    x: ExtScalar
    y: ExtScalar

    @classmethod
    def of(cls, x, y) -> Point2:
        return cls(_s(x), _s(y))

    def __sub__(self, other: Point2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __add__(self, v: Vec2) -> Point2:
        return Point2(self.x + v.dx, self.y + v.dy)

    @property
    def sort_key(self) -> tuple:
        return (self.x.sort_key, self.y.sort_key)

    def __str__(self):
        return f"({self.x}, {self.y})"


def dot(u: Vec2, v: Vec2) -> ExtScalar:
    return u.dx * v.dx + u.dy * v.dy


def cross(u: Vec2, v: Vec2) -> ExtScalar:
    return u.dx * v.dy - u.dy * v.dx


def dist2(p: Point2, q: Point2) -> ExtScalar:
    d = q - p
    return dot(d, d)


def orient(a: Point2, b: Point2, c: Point2) -> int:
    """+1 if a, b, c turn left, -1 if right, 0 if collinear."""
    return cross(b - a, c - a).sign()


@dataclass(frozen=True)
class Isometry:
    """x -> M x + t with M orthogonal; parity is det M."""

    m11: ExtScalar
    m12: ExtScalar
    m21: ExtScalar
    m22: ExtScalar
    tx: ExtScalar
    ty: ExtScalar
    parity: int

    def __post_init__(self):
        c1 = self.m11 * self.m11 + self.m21 * self.m21
        c2 = self.m12 * self.m12 + self.m22 * self.m22
        if c1 != ONE or c2 != ONE or (self.m11 * self.m12 + self.m21 * self.m22) != ZERO:
            raise ValueError("linear part is not orthogonal")
        if self.m11 * self.m22 - self.m12 * self.m21 != self.parity:
            raise ValueError("parity does not match determinant")

    @classmethod
    def identity(cls) -> Isometry:
        return cls(ONE, ZERO, ZERO, ONE, ZERO, ZERO, 1)

    @classmethod
    def rotation(cls, cos, sin, center: Point2 | None = None) -> Isometry:
        cos, sin = _s(cos), _s(sin)
        rot = cls(cos, -sin, sin, cos, ZERO, ZERO, 1)
        if center is None:
            return rot
        return compose(translation(center.x, center.y), compose(rot, translation(-center.x, -center.y)))

    def __call__(self, p: Point2) -> Point2:
        return apply(self, p)

    def linear(self, v: Vec2) -> Vec2:
        return Vec2(self.m11 * v.dx + self.m12 * v.dy, self.m21 * v.dx + self.m22 * v.dy)


def translation(tx, ty) -> Isometry:
    return Isometry(ONE, ZERO, ZERO, ONE, _s(tx), _s(ty), 1)


def apply(f: Isometry, p: Point2) -> Point2:
    return Point2(f.m11 * p.x + f.m12 * p.y + f.tx, f.m21 * p.x + f.m22 * p.y + f.ty)


def compose(f: Isometry, g: Isometry) -> Isometry:
    """f after g."""
    return Isometry(
        f.m11 * g.m11 + f.m12 * g.m21,
        f.m11 * g.m12 + f.m12 * g.m22,
        f.m21 * g.m11 + f.m22 * g.m21,
        f.m21 * g.m12 + f.m22 * g.m22,
        f.m11 * g.tx + f.m12 * g.ty + f.tx,
        f.m21 * g.tx + f.m22 * g.ty + f.ty,
        f.parity * g.parity,
    )


def reflection_across(a: Point2, b: Point2) -> Isometry:
    """Mirror in the line through a and b."""
    d = b - a
    n = dot(d, d)
    if n.is_zero():
        raise DegenerateEdgeError(f"edge endpoints coincide at {a}")
    k = n.inv()
    m11 = (d.dx * d.dx - d.dy * d.dy) * k
    m12 = (2 * d.dx * d.dy) * k
    m22 = -m11
    # a is fixed: t = a - M a
    tx = a.x - (m11 * a.x + m12 * a.y)
    ty = a.y - (m12 * a.x + m22 * a.y)
    return Isometry(m11, m12, m12, m22, tx, ty, -1)


# tan of 15, 30, 45, 60, 75 degrees
TAN_TABLE: tuple[tuple[int, ExtScalar], ...] = (
    (15, 2 - SQRT3),
    (30, SQRT3 / 3),
    (45, ONE),
    (60, SQRT3),
    (75, 2 + SQRT3),
)


def classify_angle(u: Vec2, v: Vec2) -> int | None:
    """Counterclockwise angle from u to v in degrees, if a multiple of 15.

    Returns None for anything else, including the zero angle.
    """
    if u.is_zero() or v.is_zero():
        raise ZeroVectorError("angle with a zero vector")
    d = dot(u, v)
    c = cross(u, v)
    sd, sc = d.sign(), c.sign()
    if sc == 0:
        return 180 if sd < 0 else None
    if sd == 0:
        return 90 if sc > 0 else 270
    ac, ad = (c if sc > 0 else -c), (d if sd > 0 else -d)
    base = None
    for deg, tan in TAN_TABLE:
        if ac == tan * ad:
            base = deg
            break
    if base is None:
        return None
    if sd > 0 and sc > 0:
        return base
    if sd < 0 and sc > 0:
        return 180 - base
    if sd < 0:
        return 180 + base
    return 360 - base
