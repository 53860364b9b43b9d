"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 verification mismatch,
3 interrupted census with a resumable manifest.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from pathlib import Path

from . import census as census_mod
from .construct import ConstructionParams, construct
from .errors import ConstructionError, GraphError, VerificationError
from .good import analyze, good_vertices, lemma_cycle_delta, lemma_small_cycle_delta
from .graph import Graph, attach_pendant, is_connected
from .graph6 import decode_graph6, encode_graph6, to_dot
from .metrics import transmission, wiener_cycle_closed, wiener_complete_closed, wiener_index, wiener_path_closed

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_PARTIAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def cmd_analyze(args) -> int:
    try:
        g = decode_graph6(args.graph6)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not is_connected(g):
        print("error: graph is disconnected (Wiener index is infinite)", file=sys.stderr)
        return EXIT_USAGE
    print(analyze(g).summary())
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        params = ConstructionParams(args.cycle_length, args.cycles, args.pendants, args.variant)
        report = construct(params)
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    if args.emit == "graph6":
        print(encode_graph6(report.graph))
    elif args.emit == "dot":
        print(to_dot(report.graph, highlight=report.verified_good), end="")
    if args.report or args.emit is None:
        print(report.to_record())
    if not report.exact:
        print(
            f"finding: {len(report.verified_good)} good vertices, expected {report.expected_good}",
            file=sys.stderr,
        )
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_census(args) -> int:
    if args.max >= 15:
        for n in range(max(args.min, 15), args.max + 1):
            graphs, seconds = census_mod.estimate_cost(n)
            print(f"estimate n={n}: ~{graphs} graphs, ~{seconds / 60:.0f} worker-minutes", file=sys.stderr)
    manifest = args.resume
    if manifest is None and args.out is not None:
        manifest = Path(str(args.out) + ".manifest")
    try:
        rows = census_mod.run_census(args.min, args.max, args.jobs, manifest=manifest, witness_dir=args.witness_dir)
    except census_mod.CensusInterrupted as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARTIAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out is not None:
        out = Path(args.out)
        census_mod.write_csv(rows, out)
        census_mod.write_wide_csv(rows, out.with_name(out.stem + ".wide" + (out.suffix or ".csv")))
    print(census_mod.format_table(rows))
    problems = [p for row in rows for p in census_mod.compare_with_reported(row)]
    for p in problems:
        print(f"mismatch: {p}", file=sys.stderr)
    return EXIT_MISMATCH if problems else EXIT_OK


def cmd_find_g12(args) -> int:
    try:
        g = census_mod.find_g12()
    except AssertionError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_MISMATCH
    good = good_vertices(g)
    print(encode_graph6(g))
    print(f"good vertices: {sorted(good)} ({len(good)}/{g.n})")
    print(to_dot(g, name="G12", highlight=good), end="")
    return EXIT_OK


def _selfcheck_items():
    def closed_forms():
        return all(
            wiener_index(Graph.cycle(n)) == wiener_cycle_closed(n) and wiener_index(Graph.path(n)) == wiener_path_closed(n)
            for n in range(3, 201)
        ) and all(wiener_index(Graph.complete(n)) == wiener_complete_closed(n) for n in range(1, 51))

    def soltes():
        r = analyze(Graph.cycle(11))
        return r.wiener == 165 and len(r.good_vertices) == 11

    def pendant_identity():
        rng = random.Random(1)
        for _ in range(200):
            n = rng.randint(2, 15)
            edges = [(v, rng.randrange(v)) for v in range(1, n)]
            g = Graph.from_edges(n, edges)
            u = rng.randrange(n)
            if wiener_index(attach_pendant(g, u)) != wiener_index(g) + transmission(g, u) + n:
                return False
        return True

    def lemmas():
        return (
            all(lemma_cycle_delta(c) <= -2 for c in range(7, 101))
            and lemma_small_cycle_delta(5) == -2
            and lemma_small_cycle_delta(6) == -5
        )

    def constructions():
        for c in range(5, 10):
            for variant in ("standard", "path-attached") if c >= 7 else ("standard",):
                if not construct(ConstructionParams(c, 2, 1, variant)).exact:
                    return False
        return True

    def census_small():
        rows = census_mod.run_census(9, 11)
        return not any(census_mod.compare_with_reported(r) for r in rows)

    def graph6_codec():
        return encode_graph6(Graph.complete(3)) == "Bw" and decode_graph6("Bw") == Graph.complete(3)

    return [
        ("closed forms vs BFS Wiener index", closed_forms),
        ("C11 is a Soltes graph", soltes),
        ("pendant attachment identity", pendant_identity),
        ("transmission-change lemmas", lemmas),
        ("construction good-vertex counts", constructions),
        ("census n=9..11 vs published table", census_small),
        ("graph6 K3 <-> Bw", graph6_codec),
    ]


def cmd_selfcheck(args) -> int:
    failed = 0
    for name, check in _selfcheck_items():
        try:
            ok = bool(check())
        except (GraphError, VerificationError, AssertionError) as exc:
            ok = False
            name = f"{name} ({exc})"
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wienerlab", description="Wiener index vertex-deletion laboratory")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="Wiener index and good vertices of a graph6 graph")
    p.add_argument("graph6")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="build a cactus with a prescribed number of good vertices")
    p.add_argument("--cycle-length", type=int, required=True)
    p.add_argument("--cycles", type=int, required=True)
    p.add_argument("--pendants", type=int, default=0)
    p.add_argument("--variant", choices=("standard", "path-attached"), default="standard")
    p.add_argument("--emit", choices=("graph6", "dot"))
    p.add_argument("--report", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("census", help="good-vertex census over unicyclic graphs")
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", type=Path)
    p.add_argument("--witness-dir", type=Path)
    p.add_argument("--resume", type=Path, help="checkpoint manifest to resume from and append to")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("find-g12", help="search for the order-12 graph with 6 good vertices")
    p.set_defaults(func=cmd_find_g12)

    p = sub.add_parser("selfcheck", help="closed forms and constructions against brute force")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
