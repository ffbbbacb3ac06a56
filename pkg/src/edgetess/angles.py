"""Integer enumeration of interior-angle counts for small polygons.

Counts (a, b, c, d) are the numbers of 30, 45, 60 and 90 degree angles of
an e-gon; :func:`solve_system` finds every nonnegative solution of

    30a + 45b + 60c + 90d = 180(e - 2),   a + b + c + d = e

by brute force, and the ``param_solution_*`` helpers evaluate the closed
two-parameter families so the two routes can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product

ALLOWED_ANGLES = (30, 45, 60, 90, 120)
SYSTEM_ANGLES = (30, 45, 60, 90)
MIN_EDGES = 3
MAX_ANGLE = 120

# tiles meeting at a vertex: 3 when an odd-order rotation center, else 2*order
VERTEX_ORDERS = (2, 3, 4, 6)
VERTEX_COPY_COUNTS = frozenset({3, 4, 6, 8, 12})


@dataclass(frozen=True, order=True)
class AngleSolution:
    a: int
    b: int
    c: int
    d: int
    e: int

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ValueError("angle counts must be nonnegative")
        if self.a + self.b + self.c + self.d != self.e:
            raise ValueError("angle counts must sum to the edge count")
        if 30 * self.a + 45 * self.b + 60 * self.c + 90 * self.d != 180 * (self.e - 2):
            raise ValueError("angle sum does not match 180(e-2)")

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def to_multiset(self) -> AngleMultiset:
        return AngleMultiset.from_degrees(
            [30] * self.a + [45] * self.b + [60] * self.c + [90] * self.d
        )

    def __str__(self):
        return f"{self.a} {self.b} {self.c} {self.d}"


@dataclass(frozen=True)
class AngleMultiset:
    """Sorted tuple of interior angles (degrees) of an e-gon."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        e = len(self.degrees)
        if not MIN_EDGES <= e <= max_edge_count():
            raise ValueError(f"edge count {e} outside [{MIN_EDGES}, {max_edge_count()}]")
        if any(d not in ALLOWED_ANGLES for d in self.degrees):
            raise ValueError(f"angles must lie in {ALLOWED_ANGLES}")
        if sum(self.degrees) != 180 * (e - 2):
            raise ValueError("angle sum does not match 180(e-2)")
        if list(self.degrees) != sorted(self.degrees):
            raise ValueError("degrees must be sorted")

    @classmethod
    def from_degrees(cls, degrees) -> AngleMultiset:
        return cls(tuple(sorted(degrees)))

    @property
    def e(self) -> int:
        return len(self.degrees)

    @property
    def counts(self) -> dict[int, int]:
        return {deg: self.degrees.count(deg) for deg in ALLOWED_ANGLES}

    def __str__(self):
        return " ".join(str(d) for d in self.degrees)


def _edge_inequality(e: int) -> bool:
    # interior angle sum cannot exceed e copies of the largest allowed angle
    return 180 * (e - 2) <= MAX_ANGLE * e


def max_edge_count() -> int:
    e = MIN_EDGES
    if not _edge_inequality(e):
        raise RuntimeError("no polygon satisfies the edge inequality")
    while _edge_inequality(e + 1):
        e += 1
    return e


def _check_e(e: int) -> None:
    if not isinstance(e, int) or not MIN_EDGES <= e <= max_edge_count():
        raise ValueError(f"edge count must be in [{MIN_EDGES}, {max_edge_count()}], got {e!r}")


def solve_system(e: int) -> list[AngleSolution]:
    _check_e(e)
    target = 180 * (e - 2)
    out = []
    for a, b, c, d in product(range(e + 1), repeat=4):
        if a + b + c + d == e and 30 * a + 45 * b + 60 * c + 90 * d == target:
            out.append(AngleSolution(a, b, c, d, e))
    return sorted(out)


def _affine(s: int, t: int, particular) -> tuple[int, int, int, int]:
    u = (1, -2, 1, 0)
    v = (3, -4, 0, 1)
    return tuple(s * ui + t * vi + pi for ui, vi, pi in zip(u, v, particular))


def param_solution_triangle(s: int, t: int) -> tuple[int, int, int, int]:
    return _affine(s, t, (-3, 6, 0, 0))


def param_solution_quad(s: int, t: int) -> tuple[int, int, int, int]:
    return _affine(s, t, (-12, 16, 0, 0))


def nonnegative_param_points(e: int) -> set[tuple[int, int, int, int]]:
    """Nonnegative points of the closed-form family for e = 3 or 4.

    t counts right angles (so 0 <= t <= e, and at most 1 for triangles);
    s is scanned over every value that keeps the entries in [0, e].
    """
    if e == 3:
        fn, t_max = param_solution_triangle, 1
    elif e == 4:
        fn, t_max = param_solution_quad, 4
    else:
        raise ValueError("closed forms exist only for e = 3 and e = 4")
    pts = set()
    for t in range(t_max + 1):
        # c = s, so 0 <= s <= e
        for s in range(e + 1):
            p = fn(s, t)
            if all(0 <= x <= e for x in p):
                pts.add(p)
    return pts


def enumerate_multisets(e: int) -> list[AngleMultiset]:
    _check_e(e)
    target = 180 * (e - 2)
    found = [
        AngleMultiset(combo)
        for combo in combinations_with_replacement(ALLOWED_ANGLES, e)
        if sum(combo) == target
    ]
    return sorted(found, key=lambda m: m.degrees)
