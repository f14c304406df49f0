"""Boolean circuit model: netlist parsing, evaluation, normalization, layering.

Netlist statements, one per line, already in topological order:

    input <name>
    and <name> <a> <b>
    or <name> <a> <b>       # eliminated by normalize()
    not <name> <a>
    output <name>            # exactly once

Identifiers match [A-Za-z_][A-Za-z0-9_]*; '#' starts a comment.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Mapping

from .errors import LckitError

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class GateKind(enum.Enum):
    INPUT = "input"
    AND = "and"
    OR = "or"
    NOT = "not"


_ARITY = {GateKind.INPUT: 0, GateKind.AND: 2, GateKind.OR: 2, GateKind.NOT: 1}


@dataclass(frozen=True)
class Gate:
    id: str
    kind: GateKind
    operands: tuple[str, ...]


@dataclass(frozen=True)
class Circuit:
    """Gate list in topological (declaration) order plus the designated output."""

    gates: tuple[Gate, ...]
    output_id: str

    @property
    def input_order(self) -> tuple[str, ...]:
        return tuple(g.id for g in self.gates if g.kind is GateKind.INPUT)

    def gate_map(self) -> dict[str, Gate]:
        return {g.id: g for g in self.gates}

    def use_counts(self) -> dict[str, int]:
        """How many operand slots reference each wire."""
        uses = {g.id: 0 for g in self.gates}
        for g in self.gates:
            for op in g.operands:
                uses[op] += 1
        return uses

    def is_normalized(self) -> bool:
        if any(g.kind is GateKind.OR for g in self.gates):
            return False
        return all(c <= 2 for c in self.use_counts().values())


def parse_netlist(text: str) -> Circuit:
    """Parse netlist text into a Circuit; enforces the declared order."""
    gates: list[Gate] = []
    defined: set[str] = set()
    output: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        verb, args = parts[0].lower(), parts[1:]
        if verb == "output":
            if len(args) != 1:
                raise LckitError(f"line {lineno}: output takes exactly one name")
            if output is not None:
                raise LckitError(f"line {lineno}: multiple output directives")
            if args[0] not in defined:
                raise LckitError(f"line {lineno}: output names undefined gate {args[0]!r}")
            output = args[0]
            continue
        try:
            kind = GateKind(verb)
        except ValueError:
            raise LckitError(f"line {lineno}: unknown statement {verb!r}") from None
        if len(args) != _ARITY[kind] + 1:
            raise LckitError(
                f"line {lineno}: {verb} takes a name and {_ARITY[kind]} operand(s)"
            )
        name, operands = args[0], tuple(args[1:])
        if not _IDENT.match(name):
            raise LckitError(f"line {lineno}: invalid identifier {name!r}")
        if name in defined:
            raise LckitError(f"line {lineno}: duplicate definition of {name!r}")
        for op in operands:
            if op not in defined:
                raise LckitError(
                    f"line {lineno}: reference to undefined gate {op!r}"
                    " (statements must be topologically ordered)"
                )
        gates.append(Gate(name, kind, operands))
        defined.add(name)
    if output is None:
        raise LckitError("netlist has no output directive")
    return Circuit(tuple(gates), output)


def emit_netlist(c: Circuit) -> str:
    """Serialize back to netlist text; parse(emit(c)) is structurally c."""
    lines = []
    for g in c.gates:
        lines.append(" ".join((g.kind.value, g.id) + g.operands))
    lines.append(f"output {c.output_id}")
    return "\n".join(lines) + "\n"


def evaluate(c: Circuit, assignment: Mapping[str, bool]) -> bool:
    """Value of the designated output; one forward pass in gate order."""
    values: dict[str, bool] = {}
    for g in c.gates:
        if g.kind is GateKind.INPUT:
            if g.id not in assignment:
                raise LckitError(f"assignment missing input {g.id!r}")
            values[g.id] = bool(assignment[g.id])
        elif g.kind is GateKind.AND:
            values[g.id] = values[g.operands[0]] and values[g.operands[1]]
        elif g.kind is GateKind.OR:
            values[g.id] = values[g.operands[0]] or values[g.operands[1]]
        else:
            values[g.id] = not values[g.operands[0]]
    return values[c.output_id]


class _Names:
    """Fresh identifier allocator that avoids existing names."""

    def __init__(self, taken):
        self.taken = set(taken)
        self.counter = 0

    def fresh(self, stem: str) -> str:
        while True:
            name = f"_{stem}{self.counter}"
            self.counter += 1
            if name not in self.taken:
                self.taken.add(name)
                return name


def normalize(c: Circuit) -> Circuit:
    """Rewrite to AND/NOT gates only with every wire used at most twice.

    OR(a,b) becomes NOT(AND(NOT a, NOT b)).  A wire with more than two uses
    is fanned out through a balanced tree of double-NOT forwarding buffers.
    Idempotent; evaluation is preserved on every assignment.
    """
    if c.is_normalized():
        return c
    c = _expand_or(c)
    return _split_fanout(c)


def _expand_or(c: Circuit) -> Circuit:
    if not any(g.kind is GateKind.OR for g in c.gates):
        return c
    names = _Names(g.id for g in c.gates)
    out: list[Gate] = []
    for g in c.gates:
        if g.kind is not GateKind.OR:
            out.append(g)
            continue
        a, b = g.operands
        na, nb, ab = names.fresh("n"), names.fresh("n"), names.fresh("a")
        out.append(Gate(na, GateKind.NOT, (a,)))
        out.append(Gate(nb, GateKind.NOT, (b,)))
        out.append(Gate(ab, GateKind.AND, (na, nb)))
        out.append(Gate(g.id, GateKind.NOT, (ab,)))
    return Circuit(tuple(out), c.output_id)


def _split_fanout(c: Circuit) -> Circuit:
    uses: dict[str, list[tuple[int, int]]] = {g.id: [] for g in c.gates}
    for pos, g in enumerate(c.gates):
        for slot, op in enumerate(g.operands):
            uses[op].append((pos, slot))
    rewrite: dict[tuple[int, int], str] = {}
    names = _Names(g.id for g in c.gates)
    out: list[Gate] = []

    def distribute(source: str, sites: list[tuple[int, int]]) -> None:
        if len(sites) <= 2:
            for site in sites:
                rewrite[site] = source
            return
        half = (len(sites) + 1) // 2
        for part in (sites[:half], sites[half:]):
            if len(part) == 1:
                rewrite[part[0]] = source
            else:
                a = names.fresh("b")
                b = names.fresh("b")
                out.append(Gate(a, GateKind.NOT, (source,)))
                out.append(Gate(b, GateKind.NOT, (a,)))
                distribute(b, part)

    for pos, g in enumerate(c.gates):
        ops = tuple(rewrite.get((pos, slot), op) for slot, op in enumerate(g.operands))
        out.append(Gate(g.id, g.kind, ops))
        if len(uses[g.id]) > 2:
            distribute(g.id, uses[g.id])
    return Circuit(tuple(out), c.output_id)


class LayerKind(enum.Enum):
    INPUT = "input"
    AND = "and"
    NOT = "not"
    PASS = "pass"


@dataclass(frozen=True)
class LayerNode:
    id: str
    kind: LayerKind
    operands: tuple[str, ...]


@dataclass(frozen=True)
class LayeredCircuit:
    """layers[0] holds the inputs; every node reads only the previous layer."""

    layers: tuple[tuple[LayerNode, ...], ...]
    output_id: str
    input_order: tuple[str, ...]

    def logic_depth(self) -> int:
        return len(self.layers) - 1

    def node_count(self) -> int:
        return sum(len(layer) for layer in self.layers)


def levelize(c: Circuit) -> LayeredCircuit:
    """Assign each gate to its longest-path layer and materialize PASS nodes.

    Every wire that would span more than one layer boundary is cut by a
    chain of PASS nodes (one chain per use), so layer k consumes only
    outputs of layer k-1.
    """
    if not c.is_normalized():
        raise LckitError("levelize requires a normalized circuit (AND/NOT, fan-out <= 2)")
    level: dict[str, int] = {}
    for g in c.gates:
        if g.kind is GateKind.INPUT:
            level[g.id] = 0
        else:
            level[g.id] = 1 + max(level[op] for op in g.operands)
    depth = max((level[g.id] for g in c.gates), default=0)
    layers: list[list[LayerNode]] = [[] for _ in range(depth + 1)]
    names = _Names(g.id for g in c.gates)

    def feed(wire: str, from_layer: int, to_layer: int) -> str:
        """Chain of PASS nodes carrying wire up to (to_layer - 1)."""
        cur = wire
        for k in range(from_layer + 1, to_layer):
            p = names.fresh("p")
            layers[k].append(LayerNode(p, LayerKind.PASS, (cur,)))
            cur = p
        return cur

    for g in c.gates:
        if g.kind is GateKind.INPUT:
            layers[0].append(LayerNode(g.id, LayerKind.INPUT, ()))
            continue
        lv = level[g.id]
        ops = tuple(feed(op, level[op], lv) for op in g.operands)
        kind = LayerKind.AND if g.kind is GateKind.AND else LayerKind.NOT
        layers[lv].append(LayerNode(g.id, kind, ops))
    return LayeredCircuit(
        tuple(tuple(layer) for layer in layers), c.output_id, c.input_order
    )


def evaluate_layered(lc: LayeredCircuit, assignment: Mapping[str, bool]) -> bool:
    """Layer-by-layer evaluation (PASS is identity); oracle for levelize."""
    values: dict[str, bool] = {}
    for node in lc.layers[0]:
        if node.id not in assignment:
            raise LckitError(f"assignment missing input {node.id!r}")
        values[node.id] = bool(assignment[node.id])
    for layer in lc.layers[1:]:
        for node in layer:
            if node.kind is LayerKind.AND:
                values[node.id] = values[node.operands[0]] and values[node.operands[1]]
            elif node.kind is LayerKind.NOT:
                values[node.id] = not values[node.operands[0]]
            else:
                values[node.id] = values[node.operands[0]]
    return values[lc.output_id]
