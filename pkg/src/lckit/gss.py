"""Graph-sequence structures: gadget gluing and the circuit lowering.

A GSS is (graph, vertex sequence, output pair); running the sequence and
checking the output pair's edge evaluates the compiled circuit.  Gluing
identifies a gadget's input vertices with existing vertex pairs (keeping
the union of incident edges) and renumbers the rest onto fresh indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .circuit import LayeredCircuit, LayerKind, LayerNode
from .errors import LckitError
from .gadgets import Gadget, and_gadget, copy_gadget, dup_gadget, not_gadget
from .graph import Graph, QueryMode, apply_sequence, build_graph, query


@dataclass(frozen=True)
class GSS:
    graph: Graph
    sequence: tuple[int, ...]
    output_pair: tuple[int, int]

    def __post_init__(self) -> None:
        u, v = self.output_pair
        for x in self.sequence + (u, v):
            if not 0 <= x < self.graph.n:
                raise LckitError(f"GSS vertex {x} out of range for n={self.graph.n}")
        if u in self.sequence or v in self.sequence:
            raise LckitError("GSS sequence must not touch the output pair")


class GssBuilder:
    """Growing graph-sequence structure used while compiling."""

    def __init__(self) -> None:
        self.count = 0
        self.edges: list[tuple[int, int]] = []
        self.sequence: list[int] = []
        self._consumed: set[int] = set()

    def add_pair(self, connected: bool) -> tuple[int, int]:
        """Fresh vertex pair encoding one Boolean value (edge iff TRUE)."""
        u, v = self.count, self.count + 1
        self.count += 2
        if connected:
            self.edges.append((u, v))
        return (u, v)

    def glue(
        self, gadget: Gadget, input_wiring: Sequence[tuple[int, int]]
    ) -> list[tuple[int, int]]:
        """Attach a gadget, wiring its input ports onto existing pairs.

        Gadget vertices are renumbered onto fresh indices except the input
        vertices, which collapse onto the wired base vertices and keep the
        union of all incident edges.  The renumbered gadget sequence is
        appended.  Returns the renumbered output pairs.  An empty wiring
        embeds the gadget whole, inputs included, on fresh vertices.
        """
        if input_wiring and len(input_wiring) != len(gadget.inputs):
            raise LckitError(
                f"gadget {gadget.name} has {len(gadget.inputs)} input port(s),"
                f" got {len(input_wiring)} wired pair(s)"
            )
        rename: dict[int, int] = {}
        wired: set[int] = set()
        for port, pair in zip(gadget.inputs, input_wiring):
            for pv, bv in zip(port, pair):
                if not 0 <= bv < self.count:
                    raise LckitError(f"wired vertex {bv} does not exist in the base")
                if bv in self._consumed or bv in wired:
                    raise LckitError(f"wired vertex {bv} is an already-consumed port")
                wired.add(bv)
                rename[pv] = bv
        self._consumed.update(wired)
        nxt = self.count
        for v in range(gadget.graph.n):
            if v not in rename:
                rename[v] = nxt
                nxt += 1
        self.count = nxt
        for u, v in gadget.graph.edges():
            self.edges.append((rename[u], rename[v]))
        self.sequence.extend(rename[v] for v in gadget.sequence)
        return [(rename[u], rename[v]) for u, v in gadget.outputs]

    def to_gss(self, output_pair: tuple[int, int]) -> GSS:
        return GSS(
            build_graph(self.count, self.edges),
            tuple(self.sequence),
            output_pair,
        )


def compile_circuit(lc: LayeredCircuit, assignment: Mapping[str, bool]) -> GSS:
    """Lower a levelized circuit plus input assignment into a GSS.

    The input layer bakes the assignment in as edges; duplication layers
    (DUP for twice-used values, COPY for once-used) alternate with logic
    layers (AND/NOT gadgets, PASS lowered to COPY).  Gadget order within a
    layer follows the layer's node order; sequences are concatenated in
    that order.
    """
    return compile_circuit_trace(lc, assignment)[0]


def compile_circuit_trace(
    lc: LayeredCircuit, assignment: Mapping[str, bool]
) -> tuple[GSS, list[tuple[int, list[tuple[tuple[int, int], str]]]]]:
    """compile_circuit plus instrumentation for layer-isolation checks.

    The trace holds one entry per layer: (sequence prefix length once the
    layer's gadgets have run, [(vertex pair, wire id), ...]) where each
    pair is expected to carry exactly that wire's Boolean value after the
    prefix has been applied.  Duplication layers report the duplicated
    source wires, logic layers the gate outputs.
    """
    for name in lc.input_order:
        if name not in assignment:
            raise LckitError(f"assignment missing input {name!r}")
    builder = GssBuilder()
    trace: list[tuple[int, list[tuple[tuple[int, int], str]]]] = []
    ports: dict[str, tuple[int, int]] = {}
    for node in lc.layers[0]:
        ports[node.id] = builder.add_pair(bool(assignment[node.id]))
    trace.append((0, [(ports[node.id], node.id) for node in lc.layers[0]]))

    for depth in range(1, len(lc.layers)):
        prev, cur = lc.layers[depth - 1], lc.layers[depth]
        uses: dict[str, list[tuple[int, int]]] = {node.id: [] for node in prev}
        for pos, node in enumerate(cur):
            for slot, op in enumerate(node.operands):
                uses[op].append((pos, slot))
        # duplication layer
        supply: dict[str, list[tuple[int, int]]] = {}
        dup_entry = []
        for node in prev:
            k = len(uses[node.id])
            if k == 0:
                raise LckitError(f"wire {node.id!r} has no users before the output layer")
            if k == 1:
                supply[node.id] = builder.glue(copy_gadget(), [ports[node.id]])
            elif k == 2:
                supply[node.id] = builder.glue(dup_gadget(), [ports[node.id]])
            else:
                raise LckitError(f"wire {node.id!r} has fan-out {k} > 2; normalize first")
            dup_entry.extend((pair, node.id) for pair in supply[node.id])
        trace.append((len(builder.sequence), dup_entry))
        # logic layer
        new_ports: dict[str, tuple[int, int]] = {}
        taken: dict[str, int] = {}
        for node in cur:
            wired = []
            for op in node.operands:
                idx = taken.get(op, 0)
                taken[op] = idx + 1
                wired.append(supply[op][idx])
            gadget = _logic_gadget(node)
            new_ports[node.id] = builder.glue(gadget, wired)[0]
        ports = new_ports
        trace.append((len(builder.sequence), [(ports[n.id], n.id) for n in cur]))

    out_wire = lc.output_id
    if len(lc.layers) == 1:
        # output is an input wire: emit one pass-through copy so the
        # structure still ends in a gadget-backed output pair
        ports[out_wire] = builder.glue(copy_gadget(), [ports[out_wire]])[0]
        trace.append((len(builder.sequence), [(ports[out_wire], out_wire)]))
    if out_wire not in ports:
        raise LckitError(f"output wire {out_wire!r} is not produced by the last layer")
    return builder.to_gss(ports[out_wire]), trace


def _logic_gadget(node: LayerNode) -> Gadget:
    if node.kind is LayerKind.AND:
        return and_gadget()
    if node.kind is LayerKind.NOT:
        return not_gadget()
    if node.kind is LayerKind.PASS:
        return copy_gadget()
    raise LckitError(f"unexpected node kind {node.kind!r} in a logic layer")


def simulate_gss(g: GSS) -> bool:
    """Apply the sequence and read the output pair's edge."""
    final = apply_sequence(g.graph, g.sequence)
    u, v = g.output_pair
    return final.has_edge(u, v)


def lcp_decide(g: Graph, seq: Sequence[int], u: int, v: int) -> bool:
    """Does edge (u, v) belong to the graph after applying seq?"""
    if u == v:
        raise LckitError("edge query needs two distinct vertices")
    return query(apply_sequence(g, seq), u, v, QueryMode.ADJACENT)


# --- text format -----------------------------------------------------------


def parse_gss_text(text: str) -> GSS:
    """Parse the GSS text format (header `gss 1`, then n/e/s/out lines)."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seq: tuple[int, ...] | None = None
    out: tuple[int, int] | None = None
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if not saw_header:
            if parts != ["gss", "1"]:
                raise LckitError(f"line {lineno}: expected header 'gss 1'")
            saw_header = True
            continue
        try:
            if parts[0] == "n" and len(parts) == 2:
                n = int(parts[1])
            elif parts[0] == "e" and len(parts) == 3:
                edges.append((int(parts[1]), int(parts[2])))
            elif parts[0] == "s":
                seq = tuple(int(x) for x in parts[1:])
            elif parts[0] == "out" and len(parts) == 3:
                out = (int(parts[1]), int(parts[2]))
            else:
                raise LckitError(f"line {lineno}: malformed statement {line!r}")
        except ValueError:
            raise LckitError(f"line {lineno}: non-integer field in {line!r}") from None
    if not saw_header:
        raise LckitError("GSS text has no 'gss 1' header")
    if n is None or seq is None or out is None:
        raise LckitError("GSS text must contain n, s and out lines")
    return GSS(build_graph(n, edges), seq, out)


def format_gss_text(g: GSS) -> str:
    """Serialize a GSS; deterministic (edges sorted lexicographically)."""
    lines = ["gss 1", f"n {g.graph.n}"]
    lines.extend(f"e {u} {v}" for u, v in g.graph.edges())
    lines.append("s" + "".join(f" {v}" for v in g.sequence))
    lines.append(f"out {g.output_pair[0]} {g.output_pair[1]}")
    return "\n".join(lines) + "\n"
