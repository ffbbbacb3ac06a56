"""Write the catalog SVGs: 120-degree families (first figure) and the rest (second).

    python scripts/reproduce_figures.py --out-dir figures --generations 4
"""

import argparse
from pathlib import Path

from edgetess.catalog import all_families, canonical_polygon, interior_angles
from edgetess.cli import CATALOG_RECT_RATIO
from edgetess.field import ExtScalar
from edgetess.render import RenderStyle, render_svg
from edgetess.tiling import expand, verify


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out-dir", default="figures")
    ap.add_argument("--generations", type=int, default=4)
    ap.add_argument("--labels", action="store_true")
    args = ap.parse_args()

    for group in ("with-120", "at-most-90"):
        (Path(args.out_dir) / group).mkdir(parents=True, exist_ok=True)
    style = RenderStyle(label_vertices=args.labels)
    for fam in all_families([ExtScalar(CATALOG_RECT_RATIO)]):
        p = canonical_polygon(fam)
        group = "with-120" if 120 in interior_angles(p) else "at-most-90"
        patch = expand(p, args.generations)
        report = verify(patch)
        path = Path(args.out_dir) / group / f"{fam.tag.value}.svg"
        path.write_text(render_svg(patch, style), encoding="utf-8")
        print(f"{group:<11} {str(fam):<22} tiles={len(patch):<4} verdict={report.verdict}  {path}")


if __name__ == "__main__":
    main()
