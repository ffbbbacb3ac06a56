from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from edgetess.field import ONE, SQRT2, SQRT3, ZERO, ExtScalar
from edgetess.geometry import (
    TAN_TABLE,
    DegenerateEdgeError,
    Isometry,
    Point2,
    Vec2,
    ZeroVectorError,
    apply,
    classify_angle,
    compose,
    cross,
    dist2,
    dot,
    reflection_across,
)

from .conftest import points

P = Point2.of
V = Vec2.of
HALF = ExtScalar(Fraction(1, 2))

# cos/sin of multiples of 15 degrees, exact
COS15 = (SQRT2 * SQRT3 + SQRT2) / 4
SIN15 = (SQRT2 * SQRT3 - SQRT2) / 4


def rot15(k: int) -> Isometry:
    r = Isometry.identity()
    step = Isometry.rotation(COS15, SIN15)
    for _ in range(k % 24):
        r = compose(step, r)
    return r


def test_dot_cross_examples():
    assert dot(V(1, 0), V(0, 1)) == ZERO
    assert dot(V(SQRT2, 0), V(SQRT2, 0)) == 2
    assert dot(V(1, SQRT3), V(1, SQRT3)) == 4
    assert cross(V(1, 0), V(0, 1)) == 1
    u = V(3, SQRT2)
    assert cross(u, u) == ZERO
    assert cross(V(1, 0), V(SQRT3, 1)) == 1


def test_reflection_examples():
    assert apply(reflection_across(P(0, 0), P(0, 1)), P(1, 0)) == P(-1, 0)
    assert apply(reflection_across(P(0, 0), P(1, 1)), P(1, 0)) == P(0, 1)
    assert reflection_across(P(0, 0), P(1, 0)).parity == -1
    with pytest.raises(DegenerateEdgeError):
        reflection_across(P(1, SQRT3), P(1, SQRT3))


@given(points)
def test_mirror_in_x_axis(p):
    assert apply(reflection_across(P(0, 0), P(1, 0)), p) == Point2(p.x, -p.y)


def test_compose_examples():
    m = reflection_across(P(0, 0), P(1, 0))
    assert compose(m, m) == Isometry.identity()
    # mirrors at 0 and 60 degrees compose to a 120 degree rotation
    m60 = reflection_across(P(0, 0), P(HALF, SQRT3 / 2))
    r = compose(m60, m)
    assert r.parity == 1
    assert apply(r, P(1, 0)) == P(-HALF, SQRT3 / 2)
    assert compose(Isometry.identity(), m60) == m60


def test_apply_examples():
    rot120 = Isometry.rotation(-HALF, SQRT3 / 2)
    assert apply(rot120, P(1, 0)) == P(-HALF, SQRT3 / 2)
    assert apply(reflection_across(P(0, 0), P(1, 0)), P(SQRT3, 1)) == P(SQRT3, -1)
    q = P(SQRT2, Fraction(1, 3))
    assert apply(Isometry.identity(), q) == q


def test_rotation_by_15_has_order_24():
    assert rot15(24) == Isometry.identity()
    assert rot15(12) == Isometry(-ONE, ZERO, ZERO, -ONE, ZERO, ZERO, 1)


def test_isometry_rejects_non_orthogonal():
    with pytest.raises(ValueError):
        Isometry(ONE, ONE, ZERO, ONE, ZERO, ZERO, 1)
    with pytest.raises(ValueError):
        Isometry(ONE, ZERO, ZERO, ONE, ZERO, ZERO, -1)


@settings(max_examples=40)
@given(points, points, points, points, st.integers(0, 23))
def test_isometry_preserves_distance(a, b, p, q, k):
    assume(a != b)
    f = compose(rot15(k), reflection_across(a, b))
    assert dist2(apply(f, p), apply(f, q)) == dist2(p, q)


@settings(max_examples=40)
@given(points, points, points)
def test_reflection_is_involution(a, b, p):
    assume(a != b)
    m = reflection_across(a, b)
    assert apply(compose(m, m), p) == p
    assert apply(m, a) == a and apply(m, b) == b


@settings(max_examples=40)
@given(points, points, points, points, points, points, points)
def test_compose_associative(a, b, c, d, e, f, p):
    assume(a != b and c != d and e != f)
    x, y, z = reflection_across(a, b), reflection_across(c, d), reflection_across(e, f)
    assert apply(compose(compose(x, y), z), p) == apply(compose(x, compose(y, z)), p)


def test_classify_angle_examples():
    assert classify_angle(V(1, 0), V(0, 1)) == 90
    assert classify_angle(V(1, 0), V(SQRT3, 1)) == 30
    assert classify_angle(V(1, 0), V(2, 1)) is None
    assert classify_angle(V(1, 0), V(-1, 0)) == 180
    assert classify_angle(V(1, 0), V(3, 0)) is None
    with pytest.raises(ZeroVectorError):
        classify_angle(V(0, 0), V(1, 0))


def test_tan_half_matches_no_table_entry():
    # oracle: compare 1/2 with every tangent of a multiple of 15 in (0, 180) at 50 digits
    mpmath.mp.dps = 50
    for k in range(1, 12):
        if k == 6:
            continue
        assert abs(mpmath.tan(mpmath.radians(15 * k))) != mpmath.mpf(1) / 2
    for deg, tan in TAN_TABLE:
        ref = mpmath.tan(mpmath.radians(deg))
        c = tan.coeffs
        val = c[0] + c[1] * mpmath.sqrt(2) + c[2] * mpmath.sqrt(3) + c[3] * mpmath.sqrt(6)
        assert abs(val - ref) < mpmath.mpf("1e-40")


@pytest.mark.parametrize("k", range(1, 24))
@pytest.mark.parametrize("start", [0, 5, 13])
@pytest.mark.parametrize("scale", [ONE, ExtScalar(3), 1 + SQRT3])
def test_classify_angle_all_multiples(k, start, scale):
    base = rot15(start).linear(V(1, 0))
    other = rot15(start + k).linear(V(1, 0)).scaled(scale)
    assert classify_angle(base, other) == 15 * k


@given(points, points)
def test_classify_angle_antisymmetric(p, q):
    u, v = Vec2(p.x, p.y), Vec2(q.x, q.y)
    assume(not u.is_zero() and not v.is_zero())
    a, b = classify_angle(u, v), classify_angle(v, u)
    if a is not None and b is not None:
        assert a + b == 360
