"""Command-line surface.

Decision subcommands print yes/no and exit 0 for yes, 1 for no; usage and
data errors exit 2 with a one-line diagnostic on stderr.  File writers are
byte-deterministic.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import backend
from .circuit import levelize, normalize, parse_netlist
from .errors import LckitError
from .gadgets import gadget_by_name, is_circle_graph, run_gadget
from .graph import (
    Graph,
    StarCompleteState,
    StarKind,
    apply_sequence,
    format_dot,
    format_graph_text,
    orbit,
    parse_graph_text,
    star_complete_track,
)
from .gss import compile_circuit, format_gss_text, parse_gss_text, simulate_gss
from .lep import solve_lep


def _read_graph(path: str) -> Graph:
    return parse_graph_text(Path(path).read_text())


def _parse_seq(arg: str) -> list[int]:
    """Comma-separated indices, or @file with whitespace-separated indices."""
    if arg.startswith("@"):
        tokens = Path(arg[1:]).read_text().split()
    else:
        tokens = [t for t in arg.split(",") if t != ""]
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise LckitError(f"bad sequence element: {exc}") from None


def _parse_edge(arg: str) -> tuple[int, int]:
    parts = arg.split(",")
    if len(parts) != 2:
        raise LckitError(f"--edge wants 'u,v', got {arg!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise LckitError(f"--edge wants integers, got {arg!r}") from None


def _decide(value: bool) -> int:
    print("yes" if value else "no")
    return 0 if value else 1


def _cmd_apply(args) -> int:
    g = _read_graph(args.graph)
    result = apply_sequence(g, _parse_seq(args.seq))
    if args.out:
        Path(args.out).write_text(format_graph_text(result))
    if args.dot:
        Path(args.dot).write_text(format_dot(result))
    if args.edge:
        u, v = _parse_edge(args.edge)
        return _decide(result.has_edge(u, v))
    if not args.out and not args.dot:
        sys.stdout.write(format_graph_text(result))
    return 0


def _cmd_lep(args) -> int:
    g1, g2 = _read_graph(args.graph1), _read_graph(args.graph2)
    verdict = solve_lep(g1, g2, threads=args.threads)
    if verdict.equivalent and args.witness:
        print("yes")
        print("".join(str(b) for b in verdict.witness))
        return 0
    return _decide(verdict.equivalent)


def _cmd_compile(args) -> int:
    circuit = parse_netlist(Path(args.netlist).read_text())
    inputs = circuit.input_order
    bits = args.inputs
    if len(bits) != len(inputs) or any(c not in "01" for c in bits):
        raise LckitError(
            f"--inputs wants a {len(inputs)}-char bitstring for inputs {', '.join(inputs)}"
        )
    assignment = {name: bit == "1" for name, bit in zip(inputs, bits)}
    gss = compile_circuit(levelize(normalize(circuit)), assignment)
    Path(args.out).write_text(format_gss_text(gss))
    return 0


def _cmd_sim(args) -> int:
    return _decide(simulate_gss(parse_gss_text(Path(args.gss).read_text())))


def _cmd_orbit(args) -> int:
    graphs = orbit(_read_graph(args.graph), node_limit=args.limit)
    if args.list:
        for g in sorted(graphs, key=lambda h: h.rows):
            edges = g.edges()
            print(" ".join(f"{u}-{v}" for u, v in edges) if edges else "-")
    else:
        print(len(graphs))
    return 0


def _cmd_gadget(args) -> int:
    g = gadget_by_name(args.name)
    print(f"gadget {g.name}")
    print(f"n {g.graph.n}")
    for u, v in g.graph.edges():
        print(f"e {u} {v}")
    print("s" + "".join(f" {v}" for v in g.sequence))
    for u, v in g.inputs:
        print(f"in {u} {v}")
    for u, v in g.outputs:
        print(f"out {u} {v}")
    if args.dot:
        Path(args.dot).write_text(format_dot(g.graph))
    if args.input is not None:
        if any(c not in "01" for c in args.input):
            raise LckitError(f"--input wants a bitstring, got {args.input!r}")
        bits = run_gadget(g, [c == "1" for c in args.input])
        print("result " + " ".join("1" if b else "0" for b in bits))
    return 0


def _cmd_circle(args) -> int:
    word = is_circle_graph(_read_graph(args.graph))
    if word is None:
        print("no")
        return 1
    print(" ".join(str(v) for v in word))
    return 0


def _cmd_star_track(args) -> int:
    kind = StarKind.COMPLETE if args.kind == "complete" else StarKind.STAR
    if kind is StarKind.STAR and args.center is None:
        raise LckitError("--center is required for --kind star")
    state = StarCompleteState(kind, args.center if kind is StarKind.STAR else None, args.n)
    final = star_complete_track(state, _parse_seq(args.seq))
    if final.kind is StarKind.COMPLETE:
        print("complete")
    else:
        print(f"star {final.center}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lckit",
        description="Local complementation toolkit"
        f" (kernel backend: {backend.backend_name()})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apply", help="apply a complementation sequence to a graph")
    p.add_argument("graph")
    p.add_argument("--seq", required=True, help="comma-separated vertices, or @file")
    p.add_argument("--edge", help="report presence of edge u,v after applying")
    p.add_argument("--dot", help="write DOT of the result")
    p.add_argument("-o", "--out", help="write the resulting graph file")
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("lep", help="decide local equivalence of two graphs")
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.add_argument("--witness", action="store_true", help="print witness bits when equivalent")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_lep)

    p = sub.add_parser("compile", help="compile a netlist plus inputs into a GSS")
    p.add_argument("netlist")
    p.add_argument("--inputs", required=True, help="bitstring in input declaration order")
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=_cmd_compile)

    p = sub.add_parser("sim", help="simulate a GSS file")
    p.add_argument("gss")
    p.set_defaults(func=_cmd_sim)

    p = sub.add_parser("orbit", help="enumerate the local-complementation orbit")
    p.add_argument("graph")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true", help="print orbit size (default)")
    group.add_argument("--list", action="store_true", help="print one graph per line")
    p.add_argument("--limit", type=int, default=100_000)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("gadget", help="print, simulate or export a gadget")
    p.add_argument("name", choices=["copy", "not", "and", "dup"])
    p.add_argument("--input", help="simulate on this bitstring")
    p.add_argument("--dot", help="write DOT of the gadget graph")
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("circle", help="find a chord-diagram word for a graph")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_circle)

    p = sub.add_parser("star-track", help="track a complete/star graph through a sequence")
    p.add_argument("--kind", choices=["complete", "star"], required=True)
    p.add_argument("--center", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seq", required=True)
    p.set_defaults(func=_cmd_star_track)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except LckitError as exc:
        print(f"lckit: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"lckit: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
