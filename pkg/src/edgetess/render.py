"""Deterministic SVG output for patches."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import quoteattr

from .catalog import vertex_angle
from .field import ExtScalar
from .tiling import Patch

COORD_DIGITS = 12


@dataclass(frozen=True)
class RenderStyle:
    stroke_width: float = 1.0
    scale: float = 40.0
    seed_fill: str = "#f4a261"
    tile_fill: str = "#e9eef4"
    stroke: str = "#1d3557"
    label_vertices: bool = False

    def __post_init__(self):
        if not self.scale > 0:
            raise ValueError("scale must be positive")
        if not self.stroke_width > 0:
            raise ValueError("stroke_width must be positive")


def _num(v: ExtScalar) -> str:
    text = v.approx(COORD_DIGITS)
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def render_svg(p: Patch, style: RenderStyle = RenderStyle()) -> str:
    if not p.tiles:
        raise ValueError("cannot render an empty patch")
    scale = ExtScalar(Fraction(str(style.scale)))
    tiles = p.sorted_tiles()
    seed_key = min(p.tiles, key=lambda k: p.tiles[k].generation)

    xs = [v.x for t in tiles for v in t.verts]
    ys = [v.y for t in tiles for v in t.verts]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    margin = max(xmax - xmin, ymax - ymin) * ExtScalar(Fraction(1, 20))
    # svg y grows downward, so the top edge is -ymax
    left = (xmin - margin) * scale
    top = -(ymax + margin) * scale
    width = (xmax - xmin + 2 * margin) * scale
    height = (ymax - ymin + 2 * margin) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="{_num(left)} {_num(top)} {_num(width)} {_num(height)}">',
        f'<g stroke={quoteattr(style.stroke)} stroke-width="{style.stroke_width:g}" '
        f'stroke-linejoin="round">',
    ]
    for t in tiles:
        pts = [f"{_num(v.x * scale)},{_num(-v.y * scale)}" for v in t.verts]
        d = "M " + " L ".join(pts) + " Z"
        if t.key == seed_key:
            attrs = f'class="seed" fill={quoteattr(style.seed_fill)}'
        else:
            attrs = f'class="tile" fill={quoteattr(style.tile_fill)}'
        out.append(f'<path {attrs} data-generation="{t.generation}" d="{d}"/>')
    out.append("</g>")

    if style.label_vertices:
        seed = p.tiles[seed_key]
        size = style.stroke_width * 10
        out.append(f'<g font-family="sans-serif" font-size="{size:g}" fill="#000000">')
        for i, v in enumerate(seed.verts):
            angle = vertex_angle(seed.ccw, i)
            label = "?" if angle is None else f"{angle}°"
            out.append(f'<text x="{_num(v.x * scale)}" y="{_num(-v.y * scale)}">{label}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
