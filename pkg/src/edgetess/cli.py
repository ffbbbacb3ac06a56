"""Command-line front end.

Exit codes: 0 success / accepted / verified, 2 rejected by ``classify``,
3 failed ``verify``, 64 usage error, 65 malformed polygon file,
66 missing input file.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import angles
from .catalog import (
    Family,
    FamilyTag,
    PolygonParseError,
    Rejected,
    all_families,
    canonical_polygon,
    classify,
    load_polygon,
    lookup_tag,
)
from .field import ExtScalar
from .render import RenderStyle, render_svg
from .tiling import DEFAULT_GENERATIONS, expand, verify

EXIT_OK = 0
EXIT_REJECTED = 2
EXIT_VERIFY_FAILED = 3
EXIT_USAGE = 64
EXIT_DATAERR = 65
EXIT_NOINPUT = 66

CATALOG_RECT_RATIO = Fraction(1, 2)


class UsageError(Exception):
    pass


class InputError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ratio(text: str) -> Fraction:
    try:
        r = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if r <= 0:
        raise argparse.ArgumentTypeError("ratio must be positive")
    return r


def _generations(text: str) -> int:
    try:
        g = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if g < 0:
        raise argparse.ArgumentTypeError("generations must be >= 0")
    return g


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="edgetess", description="Polygons that tile the plane by edge reflections.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="nonnegative solutions (a b c d) of the angle-count system")
    p.add_argument("e", type=int)

    p = sub.add_parser("enumerate", help="angle multisets over {30,45,60,90,120}")
    p.add_argument("e", type=int)

    p = sub.add_parser("classify", help="classify a polygon file")
    p.add_argument("file")

    for name in ("tile", "verify"):
        p = sub.add_parser(name, help=f"{name} a family name or polygon file")
        p.add_argument("target", help="family name (e.g. Equilateral, rectangle) or polygon file")
        p.add_argument("--generations", "-g", type=_generations, default=DEFAULT_GENERATIONS)
        p.add_argument("--ratio", type=_ratio, default=Fraction(1), help="rectangle aspect ratio")
        if name == "tile":
            p.add_argument("--out", "-o", required=True)
            p.add_argument("--scale", type=float, default=RenderStyle.scale)
            p.add_argument("--labels", action="store_true")
        else:
            p.add_argument("--defects", action="store_true", help="list one defect per line")

    p = sub.add_parser("catalog", help="write one SVG per family")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--generations", "-g", type=_generations, default=DEFAULT_GENERATIONS)
    return parser


def _load(path: str):
    try:
        return load_polygon(path)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}", EXIT_NOINPUT) from None
    except PolygonParseError as exc:
        raise InputError(f"{path}: {exc}", EXIT_DATAERR) from None


def _resolve(target: str, ratio: Fraction):
    if Path(target).exists():
        return _load(target)
    tag = lookup_tag(target)
    if tag is None:
        raise InputError(f"not a file or family name: {target}", EXIT_NOINPUT)
    fam = Family(tag, ExtScalar(ratio)) if tag is FamilyTag.Rectangle else Family(tag)
    return canonical_polygon(fam)


def _check_e(e: int) -> None:
    top = angles.max_edge_count()
    if not angles.MIN_EDGES <= e <= top:
        raise UsageError(f"edge count must be between {angles.MIN_EDGES} and {top}, got {e}")


def _run(args, out) -> int:
    if args.command == "solve":
        _check_e(args.e)
        for sol in angles.solve_system(args.e):
            print(sol, file=out)
        return EXIT_OK

    if args.command == "enumerate":
        _check_e(args.e)
        for ms in angles.enumerate_multisets(args.e):
            print(ms, file=out)
        return EXIT_OK

    if args.command == "classify":
        result = classify(_load(args.file))
        print(result, file=out)
        return EXIT_REJECTED if isinstance(result, Rejected) else EXIT_OK

    if args.command == "tile":
        patch = expand(_resolve(args.target, args.ratio), args.generations)
        style = RenderStyle(scale=args.scale, label_vertices=args.labels)
        Path(args.out).write_text(render_svg(patch, style), encoding="utf-8")
        print(f"{len(patch)} tiles -> {args.out}", file=out)
        return EXIT_OK

    if args.command == "verify":
        report = verify(expand(_resolve(args.target, args.ratio), args.generations))
        print(report.summary(), file=out)
        if args.defects:
            for line in report.defect_lines():
                print(line, file=out)
        return EXIT_OK if report.passed else EXIT_VERIFY_FAILED

    if args.command == "catalog":
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        for fam in all_families([ExtScalar(CATALOG_RECT_RATIO)]):
            patch = expand(canonical_polygon(fam), args.generations)
            path = out_dir / f"{fam.tag.value}.svg"
            path.write_text(render_svg(patch), encoding="utf-8")
            print(f"{fam.tag.value}\t{len(patch)}\t{path}", file=out)
        return EXIT_OK

    raise UsageError(f"unknown command {args.command}")  # pragma: no cover


def run_cli(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    old_err, sys.stderr = sys.stderr, err
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    finally:
        sys.stderr = old_err
    try:
        return _run(args, out)
    except UsageError as exc:
        parser.print_usage(err)
        print(f"edgetess: error: {exc}", file=err)
        return EXIT_USAGE
    except InputError as exc:
        print(f"edgetess: error: {exc}", file=err)
        return exc.code


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
