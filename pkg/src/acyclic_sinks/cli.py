"""Command-line front end.

    acyclic-sinks chromatic FILE
    acyclic-sinks orient FILE [--sink V]
    acyclic-sinks nbc FILE [--size K]
    acyclic-sinks bijection FILE --sink V [--invert] [--normal-seed S]
    acyclic-sinks ncsf FILE [--basis m|e] [--commutative] [--spec-ones N]
    acyclic-sinks verify FILE [--all-sinks]

``FILE`` may be ``-`` for standard input.  Exit status: 0 success, 1 a
falsified identity under ``verify``, 2 bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from .chromatic import chromatic_delcon
from .graph import GraphError, MixedDigraph, Multigraph, orientation, parse_graph
from .nbc import format_edge_set, nbc_sets, parse_edge_set
from .ncsf import PartitionError, Y_delcon, commutativize, specialize_ones, to_e_basis
from .orientations import all_acyclic, unique_sink
from .sink_bijection import forward, inverse
from .verify import random_normal, verify_graph


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="acyclic-sinks", description="Sinks in acyclic orientations of multigraphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("chromatic", help="chromatic polynomial coefficients, low to high")
    p.add_argument("file")

    p = sub.add_parser("orient", help="acyclic orientations (optionally with a unique sink)")
    p.add_argument("file")
    p.add_argument("--sink", type=int)

    p = sub.add_parser("nbc", help="sets containing no broken circuit")
    p.add_argument("file")
    p.add_argument("--size", type=int)

    p = sub.add_parser("bijection", help="unique-sink orientations <-> NBC spanning trees")
    p.add_argument("file")
    p.add_argument("--sink", type=int, required=True)
    p.add_argument("--invert", action="store_true", help="read edge sets like {1,3} from stdin")
    p.add_argument("--normal-seed", type=int, help="random normal orientation (default: file order)")

    p = sub.add_parser("ncsf", help="chromatic symmetric function in noncommuting variables")
    p.add_argument("file")
    p.add_argument("--basis", choices=("m", "e"), default="m")
    p.add_argument("--commutative", action="store_true")
    p.add_argument("--spec-ones", type=int, metavar="N")

    p = sub.add_parser("verify", help="run every cross-identity on one graph")
    p.add_argument("file")
    p.add_argument("--all-sinks", action="store_true")
    return parser


def _read_graph(path: str, stdin: TextIO) -> Multigraph:
    try:
        if path == "-":
            return parse_graph(stdin.read())
        with open(path, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _normal(G: Multigraph, seed: int | None) -> MixedDigraph:
    return MixedDigraph.all_forward(G) if seed is None else random_normal(G, seed)


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    out: list[str] = []
    try:
        args = build_parser().parse_args(argv)
        G = _read_graph(args.file, stdin)
        status = _dispatch(args, G, stdin, out)
    except (UsageError, GraphError, PartitionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    stdout.write("".join(line + "\n" for line in out))
    return status


def _dispatch(args, G: Multigraph, stdin: TextIO, out: list[str]) -> int:
    if args.command == "chromatic":
        out.append(str(chromatic_delcon(G)))
    elif args.command == "orient":
        found = all_acyclic(G) if args.sink is None else unique_sink(G, args.sink)
        out.append(str(len(found)))
        out.extend(D.word for D in found)
    elif args.command == "nbc":
        out.extend(format_edge_set(S) for S in nbc_sets(G, args.size))
    elif args.command == "bijection":
        normal = _normal(G, args.normal_seed)
        if args.invert:
            for line in stdin:
                if line.strip():
                    out.append(inverse(G, args.sink, normal, parse_edge_set(line)).word)
        else:
            for D in unique_sink(G, args.sink):
                S, trace = forward(G, args.sink, normal, D)
                out.append(f"{D.word} {','.join(trace)} {format_edge_set(S)}")
    elif args.command == "ncsf":
        Y = Y_delcon(G)
        if args.spec_ones is not None:
            out.append(str(specialize_ones(Y, args.spec_ones)))
        elif args.commutative:
            out.append(str(commutativize(Y)))
        else:
            out.append(str(to_e_basis(Y) if args.basis == "e" else Y))
    elif args.command == "verify":
        checks = verify_graph(G, all_sinks=args.all_sinks)
        for c in checks:
            out.append(c.line())
        if not all(c.ok for c in checks):
            out.append(f"graph: {args.file}")
            return 1
    return 0


def main() -> None:
    sys.exit(run())
