"""Shared strategies and independent reference implementations.

The naive oracles here deliberately avoid the package's bit-packed
representations: graphs are edge sets, vectors are 0/1 lists.  They exist
so the fast paths are checked against something that cannot share a bug
with them.
"""

from __future__ import annotations

import random

from hypothesis import strategies as st

from lckit import Graph, build_graph


# --- naive graph oracle -----------------------------------------------------


def naive_local_complement(n: int, edges: set[frozenset[int]], v: int) -> set[frozenset[int]]:
    nb = {u for u in range(n) if frozenset((u, v)) in edges}
    out = set(edges)
    nb_list = sorted(nb)
    for i, a in enumerate(nb_list):
        for b in nb_list[i + 1 :]:
            out ^= {frozenset((a, b))}
    return out


def naive_apply_sequence(n: int, edges: set[frozenset[int]], seq) -> set[frozenset[int]]:
    for v in seq:
        edges = naive_local_complement(n, edges, v)
    return edges


def edge_set(g: Graph) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges()}


def graph_from_edge_set(n: int, edges: set[frozenset[int]]) -> Graph:
    return build_graph(n, [tuple(sorted(e)) for e in edges])


# --- naive GF(2) oracle -------------------------------------------------------


def naive_rank(rows: list[list[int]]) -> int:
    mat = [r[:] for r in rows]
    ncols = len(mat[0]) if mat else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for j in range(len(mat)):
            if j != r and mat[j][c]:
                mat[j] = [(a + b) % 2 for a, b in zip(mat[j], mat[r])]
        r += 1
    return r


def naive_matvec(rows: list[list[int]], vec: list[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, vec)) % 2 for row in rows]


def naive_kernel(rows: list[list[int]], ncols: int) -> list[tuple[int, ...]]:
    """All vectors of F2^ncols sent to zero; exponential, keep ncols small."""
    out = []
    for mask in range(1 << ncols):
        vec = [(mask >> i) & 1 for i in range(ncols)]
        if not any(naive_matvec(rows, vec)):
            out.append(tuple(vec))
    return out


# --- random instances --------------------------------------------------------


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return build_graph(n, [])
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return build_graph(n, [p for i, p in enumerate(pairs) if (mask >> i) & 1])


@st.composite
def graphs_with_vertex(draw, min_n: int = 1, max_n: int = 8):
    g = draw(graphs(min_n=min_n, max_n=max_n))
    v = draw(st.integers(0, g.n - 1))
    return g, v


@st.composite
def graphs_with_sequence(draw, min_n: int = 1, max_n: int = 8, max_len: int = 12):
    g = draw(graphs(min_n=min_n, max_n=max_n))
    seq = draw(st.lists(st.integers(0, g.n - 1), max_size=max_len))
    return g, seq
