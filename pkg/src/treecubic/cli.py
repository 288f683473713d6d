"""Command-line interface: ``treecubic {count,enumerate,bijection,verify,export}``.

Exit codes: 0 success, 1 failed check or round trip, 2 bad flags,
3 size beyond the enumeration bound, 4 input validation failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import counting, harness
from .bijection import PolygonDatum, forward, reverse
from .comb_map import (
    MAX_ROOTED_CUBIC_N,
    MapValidationError,
    TreeRootedCubicMap,
    code_to_structure,
    enumerate_rooted_cubic_maps,
    from_json,
    tmap_from_json,
    tmap_to_json,
    to_dot,
    to_json,
)
from .polygon import (
    PolygonError,
    enumerate_noncrossing_pairings,
    enumerate_triangulations,
    pairing_to_text,
    polygon_from_text,
    polygon_to_text,
)

EXIT_FAILED, EXIT_USAGE, EXIT_BOUND, EXIT_INVALID = 1, 2, 3, 4
POLYGON_BOUND = 12

FORMATS = {
    "tmaps": ("json", "dot", "text"),
    "rooted-cubic": ("json", "dot"),
    "triangulations": ("text",),
    "pairings": ("text",),
}


def _emit(records: list[str], out: Optional[str]) -> None:
    body = "".join(r if r.endswith("\n") else r + "\n" for r in records)
    if out:
        Path(out).write_text(body)
    else:
        sys.stdout.write(body)
    print(len(records))


def cmd_count(args, parser) -> int:
    func, minimum = counting.FORMULAS[args.formula]
    if args.table is not None:
        if args.n is not None:
            parser.error("--table and --n are mutually exclusive")
        start = max(1, minimum)
        if args.table < start:
            parser.error(f"--table must be >= {start}")
        print("n,value")
        for n in range(start, args.table + 1):
            print(f"{n},{counting.format_exact(func(n))}")
        return 0
    if args.n is None:
        parser.error("one of --n or --table is required")
    if args.n < minimum:
        parser.error(f"--formula {args.formula} needs --n >= {minimum}")
    print(counting.format_exact(func(args.n)))
    return 0


def cmd_enumerate(args, parser) -> int:
    fmt = args.format or FORMATS[args.what][0]
    if fmt not in FORMATS[args.what]:
        parser.error(f"--what {args.what} supports formats {', '.join(FORMATS[args.what])}")
    n = args.n
    if n < 1:
        parser.error("--n must be >= 1")
    records = []
    if args.what == "tmaps":
        bound = harness.LARGE_BOUND if args.allow_large else harness.DESK_BOUND
        if n > bound:
            return _bound_error(f"tmaps enumeration is limited to n <= {bound}")
        tmaps = harness.tmaps_via_bijection(n, args.allow_large)
        for code in sorted(tmaps):
            t = tmaps[code].canonical_form()
            if fmt == "json":
                records.append(tmap_to_json(t))
            elif fmt == "dot":
                records.append(to_dot(t.map, t.tree_darts, t.root_dart, name=f"tmap{len(records)}"))
            else:
                d = forward(t)
                records.append(polygon_to_text(d.triangulation, d.pairing))
    elif args.what == "rooted-cubic":
        if n > MAX_ROOTED_CUBIC_N:
            return _bound_error(f"rooted-cubic enumeration is limited to n <= {MAX_ROOTED_CUBIC_N}")
        for code in enumerate_rooted_cubic_maps(n):
            m, _, root = code_to_structure(code)
            if fmt == "json":
                records.append(to_json(m, (), root))
            else:
                records.append(to_dot(m, (), root, name=f"rooted{len(records)}"))
    else:
        if n > POLYGON_BOUND:
            return _bound_error(f"{args.what} enumeration is limited to n <= {POLYGON_BOUND}")
        if args.what == "triangulations":
            k = args.k or n + 2
            tris = sorted(enumerate_triangulations(k), key=lambda t: sorted(t.diagonals))
            records = [polygon_to_text(t) for t in tris]
        else:
            k = args.k or 2 * n
            if k % 2:
                parser.error("pairings need an even number of sides")
            pairings = sorted(enumerate_noncrossing_pairings(k), key=lambda p: p.pairs())
            records = [pairing_to_text(p) for p in pairings]
    _emit(records, args.out)
    return 0


def _bound_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_BOUND


def _is_polygon_text(text: str) -> bool:
    return text.lstrip().startswith("k=")


def _read_datum(text: str) -> PolygonDatum:
    tri, pairing = polygon_from_text(text)
    return PolygonDatum(tri, pairing).validate()


def cmd_bijection(args, parser) -> int:
    text = Path(args.input).read_text()
    try:
        if args.direction == "forward":
            d = forward(tmap_from_json(text))
            result = polygon_to_text(d.triangulation, d.pairing)
        elif args.direction == "reverse":
            result = tmap_to_json(reverse(_read_datum(text))) + "\n"
        elif _is_polygon_text(text):
            datum = _read_datum(text)
            again = forward(reverse(datum))
            if again == datum:
                print("OK")
                return 0
            print("polygon round trip differs:")
            print("- " + polygon_to_text(datum.triangulation, datum.pairing).replace("\n", "\n- "))
            print("+ " + polygon_to_text(again.triangulation, again.pairing).replace("\n", "\n+ "))
            return EXIT_FAILED
        else:
            t = tmap_from_json(text)
            back = reverse(forward(t))
            if back.code() == t.code():
                print("OK")
                return 0
            print("canonical codes differ:")
            print(f"- {t.code()}")
            print(f"+ {back.code()}")
            return EXIT_FAILED
    except (MapValidationError, PolygonError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.out:
        Path(args.out).write_text(result)
    else:
        sys.stdout.write(result)
    return 0


def cmd_verify(args, parser) -> int:
    if args.max_n < 1:
        parser.error("--max-n must be >= 1")
    if args.max_n > harness.DESK_BOUND and not args.allow_large:
        print(f"note: bijection count capped at n={harness.DESK_BOUND}; "
              "pass --allow-large for n=5", file=sys.stderr)
    reports = harness.run_all(
        args.max_n,
        allow_large=args.allow_large,
        inject_crossing=args.inject_crossing_pairing,
        random_trials=args.random_trials,
    )
    if args.machine:
        print("name,expected,observed,passed,ms")
        for r in reports:
            print(r.machine_line())
    else:
        print(harness.format_table(reports))
    return 0 if all(r.passed for r in reports) else EXIT_FAILED


def cmd_export(args, parser) -> int:
    text = Path(args.input).read_text()
    try:
        if _is_polygon_text(text):
            t = reverse(_read_datum(text))
            m, tree, root = t.map, t.tree_darts, t.root_dart
        else:
            m, tree, root = from_json(text)
    except (MapValidationError, PolygonError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.format == "dot":
        result = to_dot(m, tree, root)
    else:
        if root is not None and tree:
            t = TreeRootedCubicMap(m, tree, root).canonical_form()
            m, tree, root = t.map, t.tree_darts, t.root_dart
        result = to_json(m, tree, root) + "\n"
    if args.out:
        Path(args.out).write_text(result)
    else:
        sys.stdout.write(result)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treecubic",
        description="Tree-rooted planar cubic maps: counts, enumeration, bijection, checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="evaluate a counting formula exactly")
    p.add_argument("--formula", required=True, choices=sorted(counting.FORMULAS))
    p.add_argument("--n", type=int)
    p.add_argument("--table", type=int, metavar="UP_TO", help="CSV rows n,value for n=1..UP_TO")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="write every object of a family")
    p.add_argument("--what", required=True, choices=sorted(FORMATS))
    p.add_argument("--n", type=int, required=True,
                   help="tmaps/rooted-cubic: 2n vertices; triangulations: (n+2)-gon; "
                        "pairings: 2n sides")
    p.add_argument("--k", type=int, help="override the polygon size for triangulations/pairings")
    p.add_argument("--out", help="output file (default: standard output)")
    p.add_argument("--format", choices=("json", "dot", "text"))
    p.add_argument("--allow-large", action="store_true", help="permit tmaps with n=5")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bijection", help="apply the map/polygon bijection")
    p.add_argument("--direction", required=True, choices=("forward", "reverse", "roundtrip"))
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", help="run every cross-check")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--machine", action="store_true", help="CSV lines name,expected,observed,passed,ms")
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--random-trials", type=int, default=10_000)
    p.add_argument("--inject-crossing-pairing", action="store_true",
                   help="negative control: feed a crossing pairing to the bijection count")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="convert a map record (or polygon text) to DOT or JSON")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
