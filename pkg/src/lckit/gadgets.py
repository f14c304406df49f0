"""The four circuit gadgets and a brute-force circle-graph checker.

Each gadget is a fixed (graph, sequence, input ports, output ports) tuple:
adding an input pair's edge encodes TRUE, applying the sequence computes
the gate, and the output pair's edge encodes the result.  The sequences are
constant: the same sequence works for every input combination.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import LckitError
from .graph import Graph, apply_sequence, build_graph, with_edges


@dataclass(frozen=True)
class Gadget:
    name: str
    graph: Graph
    sequence: tuple[int, ...]
    inputs: tuple[tuple[int, int], ...]
    outputs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        out_verts = {v for pair in self.outputs for v in pair}
        if any(v in out_verts for v in self.sequence):
            raise LckitError(f"gadget {self.name}: sequence touches an output vertex")
        port_verts = [v for pair in self.inputs + self.outputs for v in pair]
        if len(port_verts) != len(set(port_verts)):
            raise LckitError(f"gadget {self.name}: port pairs overlap")
        for v in port_verts + list(self.sequence):
            if not 0 <= v < self.graph.n:
                raise LckitError(f"gadget {self.name}: vertex {v} out of range")


@lru_cache(maxsize=None)
def copy_gadget() -> Gadget:
    """Transfers one bit from the input pair to the output pair."""
    return Gadget(
        "copy",
        build_graph(4, [(0, 2), (1, 3)]),
        (0, 1, 0),
        ((0, 1),),
        ((2, 3),),
    )


@lru_cache(maxsize=None)
def not_gadget() -> Gadget:
    """A copy gadget with an extra vertex whose complementation negates."""
    return Gadget(
        "not",
        build_graph(5, [(0, 2), (1, 3), (2, 4), (3, 4)]),
        (0, 1, 0, 4),
        ((0, 1),),
        ((2, 3),),
    )


@lru_cache(maxsize=None)
def and_gadget() -> Gadget:
    """Two input pairs, one output pair computing their conjunction."""
    return Gadget(
        "and",
        build_graph(7, [(0, 4), (1, 5), (2, 6), (3, 4)]),
        (1, 2, 0, 3, 4),
        ((0, 1), (2, 3)),
        ((5, 6),),
    )


@lru_cache(maxsize=None)
def dup_gadget() -> Gadget:
    """One input pair duplicated onto two mutually disconnected output pairs."""
    return Gadget(
        "dup",
        build_graph(8, [(0, 2), (0, 4), (1, 3), (1, 5), (2, 5), (2, 6), (3, 4), (3, 7)]),
        (0, 1, 0, 2, 3, 2, 0, 3, 0),
        ((0, 1),),
        ((4, 5), (6, 7)),
    )


_GADGETS = {
    "copy": copy_gadget,
    "not": not_gadget,
    "and": and_gadget,
    "dup": dup_gadget,
}


def gadget_by_name(name: str) -> Gadget:
    try:
        return _GADGETS[name.lower()]()
    except KeyError:
        raise LckitError(f"unknown gadget {name!r} (expected copy/not/and/dup)") from None


def run_gadget(g: Gadget, input_bits: Sequence[bool]) -> list[bool]:
    """Simulate the gadget on the given input bits.

    The stored gadget graph is never mutated: simulation adds each TRUE
    input pair's edge to a copy, applies the sequence, and reads the
    output pairs.
    """
    if len(input_bits) != len(g.inputs):
        raise LckitError(
            f"gadget {g.name} takes {len(g.inputs)} input(s), got {len(input_bits)}"
        )
    start = with_edges(g.graph, [pair for pair, bit in zip(g.inputs, input_bits) if bit])
    final = apply_sequence(start, g.sequence)
    return [final.has_edge(u, v) for u, v in g.outputs]


def run_gadget_graph(g: Gadget, input_bits: Sequence[bool]) -> Graph:
    """Final graph after running the gadget (for structural assertions)."""
    if len(input_bits) != len(g.inputs):
        raise LckitError(
            f"gadget {g.name} takes {len(g.inputs)} input(s), got {len(input_bits)}"
        )
    start = with_edges(g.graph, [pair for pair, bit in zip(g.inputs, input_bits) if bit])
    return apply_sequence(start, g.sequence)


def is_circle_graph(g: Graph) -> Optional[tuple[int, ...]]:
    """Search for a chord-diagram realization of g.

    Returns a double occurrence word (each present vertex appearing exactly
    twice) whose interleaving relation equals the edge set, or None when the
    exhaustive search finds none.  Rotations are quotiented by pinning the
    first symbol; reflections are left to the search.
    """
    if g.n > 10:
        raise LckitError(f"circle-graph search supports n <= 10, got n={g.n}")
    verts = g.present_vertices()
    if not verts:
        return ()
    length = 2 * len(verts)
    word: list[int] = []
    first_pos: dict[int, int] = {}
    state: dict[int, int] = {v: 0 for v in verts}  # occurrences placed

    def close_consistent(v: int) -> bool:
        # closing v at the current position fixes its interleaving relation
        # with every other vertex: u interleaves v iff exactly one placed
        # occurrence of u lies strictly between v's two occurrences
        lo = first_pos[v]
        inside = word[lo + 1 :]
        row = g.rows[v]
        for u in verts:
            if u == v:
                continue
            crossed = inside.count(u) == 1
            if crossed != bool((row >> u) & 1):
                return False
        return True

    def search() -> bool:
        pos = len(word)
        if pos == length:
            return True
        for v in verts:
            if state[v] == 1 and close_consistent(v):
                state[v] = 2
                word.append(v)
                if search():
                    return True
                word.pop()
                state[v] = 1
        if pos == 0:
            opens = [verts[0]]  # pin the rotation
        else:
            opens = [v for v in verts if state[v] == 0]
        for v in opens:
            state[v] = 1
            first_pos[v] = pos
            word.append(v)
            if search():
                return True
            word.pop()
            state[v] = 0
        return False

    return tuple(word) if search() else None


def word_interleaving_graph(word: Sequence[int], n: int) -> Graph:
    """Graph whose edges are the interleaving pairs of a double occurrence word."""
    positions: dict[int, list[int]] = {}
    for pos, v in enumerate(word):
        positions.setdefault(v, []).append(pos)
    for v, ps in positions.items():
        if len(ps) != 2:
            raise LckitError(f"vertex {v} occurs {len(ps)} time(s), expected 2")
    edges = []
    labels = sorted(positions)
    for i, u in enumerate(labels):
        a1, a2 = positions[u]
        for v in labels[i + 1 :]:
            inside = sum(1 for p in positions[v] if a1 < p < a2)
            if inside == 1:
                edges.append((u, v))
    return build_graph(n, edges)
