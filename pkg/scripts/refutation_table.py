"""Classifier verdict vs. tiling verdict for the catalog and the impostor corpus.

Also reports, for each catalog shape, the first depth at which each vertex
copy count shows up at a settled vertex.

    python scripts/refutation_table.py --max-depth 7
"""

import argparse

from edgetess import corpus
from edgetess.catalog import all_families, canonical_polygon, classify
from edgetess.field import ExtScalar
from edgetess.tiling import expand, verify


def first_failure(p, max_depth):
    for g in range(max_depth + 1):
        if not verify(expand(p, g)).passed:
            return g
    return None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--depth", type=int, default=4)
    ap.add_argument("--max-depth", type=int, default=7)
    args = ap.parse_args()

    print(f"{'shape':<24} {'classify':<34} verify@{args.depth}  first-fail")
    shapes = [(str(f), canonical_polygon(f)) for f in all_families([ExtScalar(1), ExtScalar(1) / 2])]
    shapes += [(name, build()) for name, build in corpus.IMPOSTORS.items()]
    shapes.append(("lattice-triangle", corpus.lattice_triangle()))
    for name, p in shapes:
        verdict = verify(expand(p, args.depth)).verdict
        fail = first_failure(p, args.depth)
        print(f"{name:<24} {str(classify(p)):<34.34} {verdict:<9} {'-' if fail is None else fail}")

    print()
    print("first depth at which each copy count is seen at a settled vertex")
    for fam in all_families():
        seen = {}
        for g in range(args.max_depth + 1):
            for order in verify(expand(canonical_polygon(fam), g)).vertex_orders.values():
                seen.setdefault(order, g)
        print(f"{str(fam):<24} " + "  ".join(f"{k}@{v}" for k, v in sorted(seen.items())))


if __name__ == "__main__":
    main()
