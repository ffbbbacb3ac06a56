"""Reflection-closure patches and their exact verification.

A patch is grown breadth-first from a seed polygon by mirroring every
frontier tile in each of its edges.  Tiles are deduplicated by a canonical
vertex signature, so different reflection words reaching the same tile
collapse to one entry.  :func:`verify` then checks the patch exactly:

* no two tiles have intersecting interiors (separating-axis test on signs);
* every edge of a settled tile is shared by exactly two tiles;
* at every settled vertex the tile fan closes with 360 degrees of equal
  angles and a copy count in {3, 4, 6, 8, 12}, with 3 only at 120 degrees.

A tile is settled when its generation is below the patch depth (it has
been mirrored in all of its edges).  A vertex is settled when every tile
touching it is settled: then the fan at that vertex is closed under the
mirrors through it, so an incomplete or overfull fan is a genuine defect
rather than a frontier artifact.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field

from .angles import VERTEX_COPY_COUNTS
from .catalog import Polygon, vertex_angle
from .field import ExtScalar
from .geometry import Isometry, Point2, apply, compose, orient, reflection_across

DEFAULT_GENERATIONS = 4
_BOX_BITS = 40


def _signature(verts) -> tuple:
    keys = [v.sort_key for v in verts]
    n = len(keys)
    cands = []
    for seq in (keys, keys[::-1]):
        for k in range(n):
            cands.append(tuple(seq[k:] + seq[:k]))
    return min(cands)


@dataclass(frozen=True)
class Tile:
    iso: Isometry
    verts: tuple[Point2, ...]
    generation: int
    key: tuple

    @classmethod
    def from_iso(cls, iso: Isometry, seed: Polygon, generation: int) -> Tile:
        verts = tuple(apply(iso, v) for v in seed.vertices)
        return cls(iso, verts, generation, _signature(verts))

    @property
    def ccw(self) -> tuple[Point2, ...]:
        """Vertices in counterclockwise order (mirror images run clockwise)."""
        return self.verts if self.iso.parity > 0 else self.verts[::-1]

    def edge(self, i: int) -> tuple[Point2, Point2]:
        n = len(self.verts)
        if not 0 <= i < n:
            raise IndexError(f"edge index {i} out of range for {n}-gon tile")
        return self.verts[i], self.verts[(i + 1) % n]


def edge_key(p: Point2, q: Point2) -> frozenset:
    return frozenset((p, q))


def reflect_in_edge(t: Tile, edge_index_in_tile: int, seed: Polygon) -> Tile:
    a, b = t.edge(edge_index_in_tile)
    iso = compose(reflection_across(a, b), t.iso)
    return Tile.from_iso(iso, seed, t.generation + 1)


@dataclass
class Patch:
    seed: Polygon
    tiles: dict
    edge_index: dict
    vertex_index: dict
    generations: int

    def sorted_tiles(self) -> list[Tile]:
        return [self.tiles[k] for k in sorted(self.tiles)]

    def __len__(self):
        return len(self.tiles)


def _vert_order(t: Tile) -> tuple:
    return tuple(v.sort_key for v in t.verts)


def expand(seed: Polygon, generations: int, rng: random.Random | None = None) -> Patch:
    """Breadth-first reflection closure to the given depth.

    `rng` shuffles the processing order; the result does not depend on it.
    """
    if not isinstance(seed, Polygon):
        raise TypeError("seed must be a Polygon")
    if not isinstance(generations, int) or isinstance(generations, bool) or generations < 0:
        raise ValueError("generations must be a nonnegative integer")

    root = Tile.from_iso(Isometry.identity(), seed, 0)
    tiles = {root.key: root}
    frontier = [root]
    for _ in range(generations):
        order = sorted(frontier, key=lambda t: t.key)
        if rng is not None:
            rng.shuffle(order)
        fresh: dict = {}
        for t in order:
            for i in range(len(t.verts)):
                child = reflect_in_edge(t, i, seed)
                if child.key in tiles:
                    continue
                # keep a schedule-independent representative of each new tile
                prev = fresh.get(child.key)
                if prev is None or _vert_order(child) < _vert_order(prev):
                    fresh[child.key] = child
        tiles.update(fresh)
        frontier = list(fresh.values())
        if not frontier:
            break

    edge_index = defaultdict(list)
    vertex_index = defaultdict(list)
    for key in sorted(tiles):
        t = tiles[key]
        n = len(t.verts)
        for i in range(n):
            edge_index[edge_key(t.verts[i], t.verts[(i + 1) % n])].append(key)
            vertex_index[t.verts[i]].append((key, i))
    return Patch(seed, tiles, dict(edge_index), dict(vertex_index), generations)


# -- overlap -------------------------------------------------------------


def interiors_intersect(a, b) -> bool:
    """Exact test for convex counterclockwise polygons a, b.

    Contact along edges or at vertices is not an intersection.
    """
    for poly, other in ((a, b), (b, a)):
        n = len(poly)
        for i in range(n):
            p, q = poly[i], poly[(i + 1) % n]
            if all(orient(p, q, r) <= 0 for r in other):
                return False
    return True


@dataclass
class _Box:
    key: tuple
    xmin: ExtScalar
    xmax: ExtScalar
    ymin: ExtScalar
    ymax: ExtScalar
    lo_x: object
    hi_x: object
    lo_y: object
    hi_y: object


def _extremes(values):
    lo = hi = values[0]
    for v in values[1:]:
        if v < lo:
            lo = v
        elif v > hi:
            hi = v
    return lo, hi


def _box(t: Tile) -> _Box:
    xmin, xmax = _extremes([v.x for v in t.verts])
    ymin, ymax = _extremes([v.y for v in t.verts])
    return _Box(
        t.key, xmin, xmax, ymin, ymax,
        xmin.enclosure(_BOX_BITS)[0], xmax.enclosure(_BOX_BITS)[1],
        ymin.enclosure(_BOX_BITS)[0], ymax.enclosure(_BOX_BITS)[1],
    )


def overlapping_pairs(patch: Patch) -> list[tuple[tuple, tuple]]:
    boxes = sorted((_box(t) for t in patch.tiles.values()), key=lambda b: (b.lo_x, b.key))
    found = []
    active: list[_Box] = []
    for box in boxes:
        # certified bounds can only prune pairs whose boxes are truly apart
        active = [a for a in active if a.hi_x > box.lo_x]
        for other in active:
            if other.hi_y <= box.lo_y or box.hi_y <= other.lo_y:
                continue
            if not (other.xmax > box.xmin and box.xmax > other.xmin):
                continue
            if not (other.ymax > box.ymin and box.ymax > other.ymin):
                continue
            ta, tb = patch.tiles[other.key], patch.tiles[box.key]
            if interiors_intersect(ta.ccw, tb.ccw):
                found.append(tuple(sorted((other.key, box.key))))
        active.append(box)
    return sorted(found)


# -- verification ----------------------------------------------------------


@dataclass
class VerificationReport:
    generations: int
    tile_count: int
    settled_tiles: int
    overlap_pairs: list = field(default_factory=list)
    bad_edges: list = field(default_factory=list)
    vertex_defects: list = field(default_factory=list)
    vertex_orders: dict = field(default_factory=dict)
    vertex_angles: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        ok = not (self.overlap_pairs or self.bad_edges or self.vertex_defects)
        return "pass" if ok else "fail"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def summary(self) -> str:
        orders = sorted(set(self.vertex_orders.values()))
        lines = [
            f"generations: {self.generations}",
            f"tiles: {self.tile_count}",
            f"settled tiles: {self.settled_tiles}",
            f"settled vertices: {len(self.vertex_orders)}",
            f"vertex orders: {' '.join(map(str, orders)) if orders else '-'}",
            f"overlapping pairs: {len(self.overlap_pairs)}",
            f"bad edges: {len(self.bad_edges)}",
            f"vertex defects: {len(self.vertex_defects)}",
            f"verdict: {self.verdict}",
        ]
        return "\n".join(lines)

    def defect_lines(self) -> list[str]:
        out = []
        for a, b in self.overlap_pairs:
            out.append(f"overlap\t{_key_text(a)}\t{_key_text(b)}")
        for (p, q), count in self.bad_edges:
            out.append(f"edge\t{_point_text(p)}\t{_point_text(q)}\t{count}")
        for v, reason in self.vertex_defects:
            out.append(f"vertex\t{_point_text(v)}\t{reason}")
        return out


def _point_text(p: Point2) -> str:
    return f"{p.x.approx(12)},{p.y.approx(12)}"


def _key_text(key: tuple) -> str:
    # the signature stores raw integer coefficients; print the points instead
    pts = [Point2(ExtScalar._raw(*x), ExtScalar._raw(*y)) for x, y in key]
    return ";".join(_point_text(p) for p in pts)


def verify(patch: Patch) -> VerificationReport:
    g = patch.generations
    settled = {k for k, t in patch.tiles.items() if t.generation <= g - 1}
    report = VerificationReport(g, len(patch.tiles), len(settled))
    report.overlap_pairs = overlapping_pairs(patch)

    for key in sorted(settled):
        t = patch.tiles[key]
        n = len(t.verts)
        for i in range(n):
            p, q = t.verts[i], t.verts[(i + 1) % n]
            count = len(patch.edge_index[edge_key(p, q)])
            if count != 2:
                ends = tuple(sorted((p, q), key=lambda v: v.sort_key))
                report.bad_edges.append((ends, count))
    report.bad_edges = sorted(set(report.bad_edges), key=lambda e: (e[0][0].sort_key, e[0][1].sort_key))

    for v in sorted(patch.vertex_index, key=lambda p: p.sort_key):
        incident = patch.vertex_index[v]
        if any(k not in settled for k, _ in incident):
            continue
        angles = []
        for k, pos in incident:
            t = patch.tiles[k]
            ccw = t.ccw
            idx = pos if t.iso.parity > 0 else len(ccw) - 1 - pos
            angles.append(vertex_angle(ccw, idx))
        order = len(incident)
        report.vertex_orders[v] = order
        if any(a is None for a in angles):
            report.vertex_defects.append((v, "unrecognized angle"))
            continue
        report.vertex_angles[v] = angles[0] if len(set(angles)) == 1 else None
        total = sum(angles)
        if total != 360:
            report.vertex_defects.append((v, f"angle sum {total}"))
        elif len(set(angles)) != 1:
            report.vertex_defects.append((v, f"unequal angles {sorted(set(angles))}"))
        elif order not in VERTEX_COPY_COUNTS:
            report.vertex_defects.append((v, f"order {order}"))
        elif order == 3 and angles[0] != 120:
            report.vertex_defects.append((v, f"order 3 at {angles[0]} degrees"))
    return report
