"""Simple undirected graphs and their local-transformation operations.

Graphs are immutable values over vertices 0..n-1 with bit-packed adjacency
rows (bit u of rows[v] set means edge (v, u)).  Deleting a vertex keeps the
labels of the survivors stable: the vertex is marked absent and its row and
column are cleared, n does not change.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import backend
from ._bitops import iter_bits
from .errors import LckitError


@dataclass(frozen=True)
class Graph:
    """Labeled simple undirected graph; symmetric adjacency, zero diagonal."""

    n: int
    rows: tuple[int, ...]
    present: int

    def is_present(self, v: int) -> bool:
        return 0 <= v < self.n and bool((self.present >> v) & 1)

    def present_vertices(self) -> list[int]:
        return list(iter_bits(self.present))

    def present_count(self) -> int:
        return self.present.bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        _check_vertex(self, u)
        _check_vertex(self, v)
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        _check_vertex(self, v)
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        _check_vertex(self, v)
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, sorted lexicographically."""
        out = []
        for u in range(self.n):
            r = self.rows[u] >> (u + 1)
            for d in iter_bits(r):
                out.append((u, u + 1 + d))
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        extra = "" if self.present == (1 << self.n) - 1 else f", absent={[v for v in range(self.n) if not self.is_present(v)]}"
        return f"Graph(n={self.n}, edges={self.edges()}{extra})"


class MixedOp(enum.Enum):
    COMPLEMENT = "complement"
    DELETE = "delete"


class QueryMode(enum.Enum):
    ADJACENT = "adjacent"
    PATH_CONNECTED = "path-connected"


class StarKind(enum.Enum):
    COMPLETE = "complete"
    STAR = "star"


@dataclass(frozen=True)
class StarCompleteState:
    """Constant-space tracker state for graphs in the complete/star family."""

    kind: StarKind
    center: int | None
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise LckitError("star/complete tracker needs n >= 1")
        if self.kind is StarKind.STAR:
            if self.center is None or not 0 <= self.center < self.n:
                raise LckitError(f"star center {self.center} out of range for n={self.n}")


def _make(n: int, rows: Iterable[int], present: int) -> Graph:
    return Graph(n, tuple(rows), present)


def _full_mask(n: int) -> int:
    return (1 << n) - 1


def _check_vertex(g: Graph, v: int, what: str = "vertex") -> None:
    if not 0 <= v < g.n:
        raise LckitError(f"{what} {v} out of range for n={g.n}")
    if not (g.present >> v) & 1:
        raise LckitError(f"{what} {v} has been deleted")


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; rejects self-loops and bad endpoints."""
    if n < 0:
        raise LckitError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise LckitError(f"edge ({u},{v}) has an endpoint out of range for n={n}")
        if u == v:
            raise LckitError(f"self-loop ({u},{v}) not allowed in a simple graph")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return _make(n, rows, _full_mask(n))


def with_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """Copy of g with the given edges added (endpoints must be present)."""
    rows = list(g.rows)
    for u, v in edges:
        _check_vertex(g, u)
        _check_vertex(g, v)
        if u == v:
            raise LckitError(f"self-loop ({u},{v}) not allowed in a simple graph")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return _make(g.n, rows, g.present)


def local_complement(g: Graph, v: int) -> Graph:
    """Complement the subgraph induced on the neighborhood of v."""
    _check_vertex(g, v)
    rows = backend.apply_sequence_rows(g.rows, g.n, (v,))
    return _make(g.n, rows, g.present)


def apply_sequence(g: Graph, seq: Sequence[int]) -> Graph:
    """Left fold of local_complement over seq; the empty sequence is identity."""
    for pos, v in enumerate(seq):
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise LckitError(f"sequence element {pos}: vertex {v} out of range for n={g.n}")
        if not (g.present >> v) & 1:
            raise LckitError(f"sequence element {pos}: vertex {v} has been deleted")
    rows = backend.apply_sequence_rows(g.rows, g.n, seq)
    return _make(g.n, rows, g.present)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove v and its incident edges; surviving labels are unchanged."""
    _check_vertex(g, v)
    clear = ~(1 << v)
    rows = [r & clear for r in g.rows]
    rows[v] = 0
    return _make(g.n, rows, g.present & clear)


def subgraph_complement(g: Graph, vertices: Iterable[int]) -> Graph:
    """Complement the induced subgraph on the given vertex set."""
    mask = 0
    for v in vertices:
        _check_vertex(g, v, what="subset member")
        mask |= 1 << v
    rows = list(g.rows)
    for u in iter_bits(mask):
        rows[u] ^= mask ^ (1 << u)
    return _make(g.n, rows, g.present)


def apply_mixed_sequence(g: Graph, seq: Sequence[tuple[int, MixedOp]]) -> Graph:
    """Fold local complementations and vertex deletions over seq."""
    rows = list(g.rows)
    present = g.present
    run: list[int] = []

    def flush() -> None:
        nonlocal rows
        if run:
            rows = backend.apply_sequence_rows(rows, g.n, run)
            run.clear()

    for pos, (v, op) in enumerate(seq):
        if not 0 <= v < g.n:
            raise LckitError(f"mixed sequence element {pos}: vertex {v} out of range for n={g.n}")
        if not (present >> v) & 1:
            raise LckitError(f"mixed sequence element {pos}: vertex {v} has been deleted")
        if op is MixedOp.COMPLEMENT:
            run.append(v)
        elif op is MixedOp.DELETE:
            flush()
            clear = ~(1 << v)
            rows = [r & clear for r in rows]
            rows[v] = 0
            present &= clear
        else:
            raise LckitError(f"mixed sequence element {pos}: unknown operation {op!r}")
    flush()
    return _make(g.n, rows, present)


def query(g: Graph, u: int, v: int, mode: QueryMode) -> bool:
    """Edge membership (ADJACENT) or path existence (PATH_CONNECTED) between u and v."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if mode is QueryMode.ADJACENT:
        return bool((g.rows[u] >> v) & 1)
    if mode is QueryMode.PATH_CONNECTED:
        if u == v:
            return True
        reach = 1 << u
        frontier = reach
        target = 1 << v
        while frontier:
            nxt = 0
            for x in iter_bits(frontier):
                nxt |= g.rows[x]
            frontier = nxt & ~reach
            reach |= frontier
            if reach & target:
                return True
        return False
    raise LckitError(f"unknown query mode {mode!r}")


def orbit(g: Graph, node_limit: int = 100_000) -> set[Graph]:
    """Closure of g under local complementation at every present vertex.

    Breadth-first, deduplicated by exact labeled adjacency.  Raises when the
    closure exceeds node_limit, signalling the caller to shrink the instance.
    """
    seen = {g}
    frontier = [g]
    verts = g.present_vertices()
    while frontier:
        nxt = []
        for h in frontier:
            for v in verts:
                # degree <= 1 neighborhoods are fixed points, skip the copy
                if h.rows[v].bit_count() < 2:
                    continue
                h2 = _make(h.n, backend.apply_sequence_rows(h.rows, h.n, (v,)), h.present)
                if h2 not in seen:
                    seen.add(h2)
                    nxt.append(h2)
                    if len(seen) > node_limit:
                        raise LckitError(f"orbit exceeds node limit {node_limit}")
        frontier = nxt
    return seen


def star_complete_track(state: StarCompleteState, seq: Sequence[int]) -> StarCompleteState:
    """Track a complete/star graph through a complementation sequence in O(1) space."""
    kind, center = state.kind, state.center
    for pos, v in enumerate(seq):
        if not 0 <= v < state.n:
            raise LckitError(f"sequence element {pos}: vertex {v} out of range for n={state.n}")
        if state.n == 1:
            continue
        if kind is StarKind.COMPLETE:
            kind, center = StarKind.STAR, v
        elif v == center:
            kind, center = StarKind.COMPLETE, None
    return StarCompleteState(kind, center, state.n)


def star_complete_graph(state: StarCompleteState) -> Graph:
    """Explicit graph described by a tracker state."""
    n = state.n
    if n == 1:
        return build_graph(1, [])
    if state.kind is StarKind.COMPLETE:
        full = _full_mask(n)
        return _make(n, (full ^ (1 << v) for v in range(n)), full)
    c = state.center
    assert c is not None
    rows = [1 << c] * n
    rows[c] = _full_mask(n) ^ (1 << c)
    return _make(n, rows, _full_mask(n))


# --- text formats ---------------------------------------------------------


def parse_graph_text(text: str) -> Graph:
    """Parse the graph text format: `n <count>` then `e <u> <v>` lines."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise LckitError(f"line {lineno}: duplicate n line")
            n = _parse_int(parts, 1, lineno, expect=2)
        elif parts[0] == "e":
            if n is None:
                raise LckitError(f"line {lineno}: edge before n line")
            u = _parse_int(parts, 1, lineno, expect=3)
            v = _parse_int(parts, 2, lineno, expect=3)
            edges.append((u, v))
        else:
            raise LckitError(f"line {lineno}: unknown directive {parts[0]!r}")
    if n is None:
        raise LckitError("graph text has no n line")
    return build_graph(n, edges)


def _parse_int(parts: list[str], idx: int, lineno: int, expect: int) -> int:
    if len(parts) != expect:
        raise LckitError(f"line {lineno}: expected {expect - 1} field(s) after {parts[0]!r}")
    try:
        return int(parts[idx])
    except ValueError:
        raise LckitError(f"line {lineno}: {parts[idx]!r} is not an integer") from None


def format_graph_text(g: Graph) -> str:
    """Serialize to the graph text format; edges sorted lexicographically."""
    if g.present != _full_mask(g.n):
        raise LckitError("graph text format cannot represent deleted vertices")
    lines = [f"n {g.n}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def format_dot(g: Graph) -> str:
    """DOT export (undirected); vertex labels are the indices."""
    lines = ["graph G {"]
    for v in g.present_vertices():
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
