"""Command-line interface.

Subcommands: check, invariants, decompose, gen, corpus.  Verdict data goes
to stdout as JSON (one object per input line when reading "-"); usage and
runtime errors go to stderr with exit 1.  check exits 2 on exclusion and
corpus exits 3 on any violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator

from .constructions import (cycle, extremal_even, extremal_odd,
                            extremal_omega5, wheel6)
from .corpus import (exhaustive_population, run_verification,
                     sample_population)
from .graphs import (Graph, GraphFormatError, is_connected, parse_dimacs,
                     parse_graph6, serialize_graph6)
from .invariants import compute_invariants
from .patterns import check_membership
from .structure import (DecompositionError, NotInClassError, check_lemma1,
                        choose_partitioning_pair, decompose)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_EXCLUDED = 2
EXIT_VIOLATION = 3


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _read_graphs(source: str, fmt: str) -> Iterator[Graph]:
    if fmt == "dimacs":
        text = sys.stdin.read() if source == "-" else source
        yield parse_dimacs(text)
        return
    if source == "-":
        for line in sys.stdin:
            line = line.strip()
            if line:
                yield parse_graph6(line)
    else:
        yield parse_graph6(source)


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


def cmd_check(args) -> int:
    status = EXIT_OK
    for g in _read_graphs(args.graph, args.format):
        witness = check_membership(g)
        out = {
            "graph6": serialize_graph6(g),
            "member": witness is None,
            "connected": is_connected(g),
        }
        if witness is not None:
            out["witness"] = witness.to_json_dict()
            status = EXIT_EXCLUDED
        _emit(out)
    return status


def cmd_invariants(args) -> int:
    engine = "auto"
    if args.exact:
        engine = "exact"
    elif args.matching:
        engine = "matching"
    for g in _read_graphs(args.graph, args.format):
        report = compute_invariants(g, engine=engine)
        _emit(report.to_json_dict())
    return EXIT_OK


def cmd_decompose(args) -> int:
    for g in _read_graphs(args.graph, args.format):
        if args.pair:
            v, w = args.pair
        else:
            pair = choose_partitioning_pair(g)
            if pair is None:
                raise CliError("no partitioning pair: every maximum-degree "
                               "vertex is adjacent to all others")
            v, w = pair
        dec = decompose(g, v, w)
        report = check_lemma1(g, dec)
        _emit({**dec.to_json_dict(), **report.to_json_dict()})
    return EXIT_OK


_GENERATORS = {
    "c5": lambda args: cycle(5),
    "w6": lambda args: wheel6(),
    "even": lambda args: extremal_even(args.param),
    "odd": lambda args: extremal_odd(args.param),
    "omega5": lambda args: extremal_omega5(),
}


def cmd_gen(args) -> int:
    if args.family in ("even", "odd") and args.param is None:
        raise CliError(f"gen {args.family} requires a parameter")
    g = _GENERATORS[args.family](args)
    line = serialize_graph6(g)
    if args.verify:
        report = compute_invariants(g)
        _emit({"graph6": line, "report": report.to_json_dict()})
    else:
        print(line)
    return EXIT_OK


def cmd_corpus(args) -> int:
    if args.mode == "exhaustive":
        if len(args.params) != 1:
            raise CliError("corpus exhaustive takes exactly one parameter: n")
        population = exhaustive_population(args.params[0])
    else:
        if len(args.params) != 3:
            raise CliError("corpus sample takes: n count seed")
        population = sample_population(*args.params)
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    report = run_verification(population, checks, jobs=args.jobs)
    print(report.to_json())
    if args.dump_violations:
        with open(args.dump_violations, "w") as fh:
            for cert in report.violations:
                fh.write(cert["graph6"] + "\n")
    return EXIT_VIOLATION if report.has_violations else EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="chibound",
                     description="Toolkit for a hereditary graph class: "
                                 "membership, invariants, decomposition, "
                                 "extremal families, verification corpora.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("graph", help="graph6 string, or '-' for stdin lines")
        p.add_argument("--format", choices=("graph6", "dimacs"),
                       default="graph6")

    p = sub.add_parser("check", help="class membership verdict")
    add_input(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("invariants", help="omega, chi, degree, bound report")
    add_input(p)
    p.add_argument("--exact", action="store_true",
                   help="force the branch-and-bound chi engine")
    p.add_argument("--matching", action="store_true",
                   help="force the matching-identity chi engine")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("decompose", help="partitioning-pair decomposition "
                                         "and structural property report")
    add_input(p)
    p.add_argument("--pair", nargs=2, type=int, metavar=("V", "W"))
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("gen", help="emit a generator's graph6 line")
    p.add_argument("family", choices=sorted(_GENERATORS))
    p.add_argument("param", nargs="?", type=int, default=None)
    p.add_argument("--verify", action="store_true",
                   help="attach a full invariant report")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("corpus", help="run a verification campaign")
    p.add_argument("mode", choices=("exhaustive", "sample"))
    p.add_argument("params", nargs="+", type=int,
                   help="exhaustive: n; sample: n count seed")
    p.add_argument("--checks", default="bound",
                   help="comma list from bound,lemma1,lemma2,oracle")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--dump-violations", metavar="PATH",
                   help="write violating graph6 lines to a file")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, GraphFormatError, DecompositionError, NotInClassError,
            ValueError, RuntimeError) as exc:
        print(f"chibound: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
