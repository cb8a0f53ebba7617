"""Command-line interface.

Text output is tab-delimited ``key<TAB>value`` lines unless ``--json`` is
given.  Exit codes: 0 success (``decide``: equivalent), 1 negative answer,
2 usage error, 3 invalid GDF input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .diagram import ChordDiagram, DiagramError, GDFError, read_gdf, serialize_gdf, serialize_long_template
from .equivalence import MoveClass, decide_equivalent, distance_lower_bound, lower_bounds
from .families import FAMILY_IDS, FamilySpec, expected_spectrum, family_diagram, load_template, move_class, unknotting_script
from .invariants import invariant_report, writhe_spectrum
from .moves import apply_move, enumerate_sites, greedy_simplify, parse_moves
from .search import SearchBudget, search, verify_script

EXIT_INVALID = 3


class _InvalidInput(Exception):
    pass


def _read(path: str) -> ChordDiagram:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise _InvalidInput(f"{path}: {exc.strerror}") from None
    try:
        return read_gdf(text)
    except (GDFError, DiagramError) as exc:
        raise _InvalidInput(f"{path}: {exc}") from None


def _moves(text: str):
    try:
        return parse_moves(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _move_class(text: str) -> MoveClass:
    try:
        return MoveClass(text)
    except ValueError:
        choices = ", ".join(m.value for m in MoveClass)
        raise argparse.ArgumentTypeError(f"unknown move class {text!r} (choose from {choices})") from None


def _fmt_spectrum(values: dict) -> str:
    return "{" + ", ".join(f"{n}: {v}" for n, v in values.items()) + "}"


def _cmd_invariants(args) -> int:
    report = invariant_report(_read(args.file))
    if args.json:
        print(json.dumps(report))
        return 0
    for key, value in report.items():
        if key == "spectrum" and value is not None:
            value = _fmt_spectrum(value)
        elif isinstance(value, list):
            value = json.dumps(value)
        print(f"{key}\t{'-' if value is None else value}")
    return 0


def _cmd_decide(args) -> int:
    result = decide_equivalent(args.move, _read(args.first), _read(args.second))
    print(f"equivalent\t{str(result.equivalent).lower()}")
    print(f"reason\t{result.reason}")
    return 0 if result else 1


def _cmd_bound(args) -> int:
    knot = _read(args.knot)
    target = _read(args.target) if args.target else ChordDiagram.empty()
    try:
        bounds = lower_bounds(args.move, knot, target)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    value = distance_lower_bound(args.move, knot, target)
    if args.json:
        print(json.dumps({"bound": value, **{k: str(v) for k, v in bounds.items()}}))
    else:
        print(f"bound\t{value}")
        for k, v in bounds.items():
            print(f"{k}\t{v}")
    return 0


def _cmd_simplify(args) -> int:
    d, trace = greedy_simplify(_read(args.file))
    if args.trace:
        for site in trace:
            print(f"# {site}")
    print(serialize_gdf(d))
    return 0


def _cmd_moves(args) -> int:
    d = _read(args.file)
    sites = [s for m in args.kind for s in enumerate_sites(d, m, args.max_gaps)]
    if args.action == "list":
        for i, site in enumerate(sites):
            print(f"{i}\t{site}")
        return 0
    if not 0 <= args.index < len(sites):
        print(f"error: index {args.index} out of range (0..{len(sites) - 1})", file=sys.stderr)
        return 2
    print(serialize_gdf(apply_move(d, sites[args.index])))
    return 0


def _family_spec(args) -> FamilySpec:
    try:
        return FamilySpec(args.id, args.s, args.m)
    except ValueError as exc:
        raise SystemExit(_usage_error(str(exc)))


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _cmd_family(args) -> int:
    f = _family_spec(args)
    if args.template:
        sys.stdout.write(serialize_long_template(load_template(f.id, f.s)))
        return 0
    d = family_diagram(f)
    want, got = expected_spectrum(f), writhe_spectrum(d)
    if args.report:
        _write_report(Path(args.report), f, d)
    if args.expect:
        print(f"expected\t{want}")
        print(f"computed\t{got}")
        print(f"match\t{str(want == got).lower()}")
        return 0 if want == got else 1
    if not args.report:
        print(serialize_gdf(d))
    return 0


def _write_report(directory: Path, f: FamilySpec, d: ChordDiagram) -> None:
    from .render import render_diagram, render_spectra

    directory.mkdir(parents=True, exist_ok=True)
    stem = f"{f.id.lower()}_s{f.s}_m{f.m}"
    want, got = expected_spectrum(f), writhe_spectrum(d)
    keys = sorted(set(want.values) | set(got.values))
    rows = ["n\texpected\tcomputed"] + [f"{n}\t{want[n]}\t{got[n]}" for n in keys]
    (directory / f"{stem}_spectrum.tsv").write_text("\n".join(rows) + "\n")
    cls = move_class(f.id)
    bounds = lower_bounds(cls, d)
    summary = [
        ("family", f.id), ("s", f.s), ("m", f.m), ("chords", len(d.chords)),
        ("move_class", cls.value), ("odd_writhe", got.odd_writhe),
        *((f"bound_{k}", v) for k, v in bounds.items()),
        ("lower_bound", distance_lower_bound(cls, d)),
        ("script_verified", str(verify_script(d, unknotting_script(f))).lower()),
        ("spectrum_match", str(want == got).lower()),
    ]
    (directory / f"{stem}_summary.tsv").write_text("".join(f"{k}\t{v}\n" for k, v in summary))
    render_spectra({"expected": want, "computed": got}, str(directory / f"{stem}_spectrum.svg"),
                   title=f"{f.id} s={f.s} m={f.m}")
    render_diagram(d, str(directory / f"{stem}_diagram.svg"))
    for suffix in ("spectrum.tsv", "summary.tsv", "spectrum.svg", "diagram.svg"):
        print(f"wrote\t{directory / f'{stem}_{suffix}'}")


def _cmd_search(args) -> int:
    budget = SearchBudget(
        costed=frozenset(args.costed),
        free=frozenset(args.free),
        max_depth=args.depth,
        max_states=args.max_states,
        max_gaps=args.max_gaps,
        normalize=not args.no_normalize,
    )
    result = search(_read(args.first), _read(args.second), budget)
    found = result.distance is not None
    if args.json:
        print(json.dumps({"distance": result.distance, "states": result.states,
                          "exhausted": result.exhausted, "path": [str(m) for m in result.path]}))
    else:
        print(f"distance\t{result.distance if found else 'none'}")
        print(f"states\t{result.states}")
        print(f"exhausted\t{str(result.exhausted).lower()}")
        print(f"path\t{' '.join(str(m) for m in result.path) or '-'}")
    return 0 if found else 1


def _cmd_render(args) -> int:
    from .render import render_diagram

    d = _read(args.file)
    if args.output == "-":
        import io

        buf = io.StringIO()
        render_diagram(d, buf, title=args.title)
        sys.stdout.write(buf.getvalue())
    else:
        render_diagram(d, args.output, title=args.title)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vgauss", description="Gauss-diagram calculus for virtual knots and links.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="linking matrix, lambda, parity, writhe spectrum")
    p.add_argument("file", help="GDF file or '-'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("decide", help="decide equivalence of two links under a move class")
    p.add_argument("--move", type=_move_class, required=True)
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("bound", help="lower bound on the distance between two knots")
    p.add_argument("--move", type=_move_class, required=True)
    p.add_argument("knot")
    p.add_argument("target", nargs="?", help="defaults to the trivial knot")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("simplify", help="greedy r1/r2 reduction")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true", help="print applied sites as comments")
    p.set_defaults(func=_cmd_simplify)

    p = sub.add_parser("moves", help="list or apply move sites")
    p.add_argument("action", choices=("list", "apply"))
    p.add_argument("file")
    p.add_argument("--kind", type=_moves, required=True, help="e.g. r1:del, vdc:ins, fd")
    p.add_argument("--index", type=int, default=0, help="site number for apply")
    p.add_argument("--max-gaps", type=int, default=None)
    p.set_defaults(func=_cmd_moves)

    p = sub.add_parser("family", help="knot families with known unknotting numbers")
    p.add_argument("--id", required=True, type=str.upper, choices=FAMILY_IDS)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--expect", action="store_true", help="compare expected and computed spectra")
    g.add_argument("--template", action="store_true", help="print the long template")
    p.add_argument("--report", metavar="DIR", help="write TSV tables and SVG figures to DIR")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("search", help="bounded search for a shortest move sequence")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--costed", type=_moves, required=True)
    p.add_argument("--free", type=_moves, default=parse_moves("r1:del,r2:del"))
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--max-states", type=int, default=200_000)
    p.add_argument("--max-gaps", type=int, default=None)
    p.add_argument("--no-normalize", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("render", help="draw a diagram as SVG")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True, help="SVG path or '-'")
    p.add_argument("--title")
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
