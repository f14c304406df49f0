"""Local equivalence of labeled graphs via an F2 linear/quadratic system.

For graphs G1, G2 on vertices 0..n-1 the system has four unknowns per
vertex i, laid out as blocks (X_i, Y_i, Z_i, T_i) at bit positions
4i..4i+3.  One linear constraint per ordered vertex pair (v, w), including
v = w:

    sum_i  A1[i][v] A2[i][w] X_i  +  A1[w][v] Y_w  +  A2[v][w] Z_v
         + [v == w] T_v  = 0

G1 and G2 are locally equivalent exactly when some solution additionally
satisfies X_i T_i + Y_i Z_i = 1 at every vertex.  If the solution space has
dimension at most 4 the solver scans every combination; otherwise scanning
single basis vectors and pairwise sums is complete for connected graphs.

Local complementation never creates or removes edges between components,
so the component partition is invariant and the decision decomposes: the
solver requires identical partitions and runs the search per component.
(The per-component step is essential: for the edgeless graph against
itself the solution space is spanned by unit vectors while every witness
needs two set bits per vertex, so a flat two-vector search over the whole
graph would miss it.)  Cross-component rows of the linear system are
identically zero, which is why the per-component witnesses concatenate
into a witness for the full system.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from ._bitops import compress4, iter_bits, parity, spread4
from .errors import LckitError
from .gf2 import BitMatrix, BitVector, nullspace_basis
from .graph import Graph


@dataclass(frozen=True)
class BouchetSystem:
    """The linear side: n^2 rows (pair (v,w) at index v*n + w), 4n columns."""

    n: int
    coeffs: BitMatrix


@dataclass(frozen=True)
class LepVerdict:
    equivalent: bool
    witness: BitVector | None


def build_system(g1: Graph, g2: Graph) -> BouchetSystem:
    """Assemble the linear constraints for the ordered pair of graphs.

    Vertices deleted from either graph participate as isolated vertices;
    the system always ranges over the full label set 0..n-1.
    """
    if g1.n != g2.n:
        raise LckitError(f"vertex count mismatch: {g1.n} vs {g2.n}")
    n = g1.n
    r1, r2 = g1.rows, g2.rows
    data = []
    for v in range(n):
        a1v = r1[v]
        g2v = r2[v]
        for w in range(n):
            bits = spread4(a1v & r2[w])          # X_i coefficients
            if (a1v >> w) & 1:
                bits |= 1 << (4 * w + 1)         # Y_w
            if (g2v >> w) & 1:
                bits |= 1 << (4 * v + 2)         # Z_v
            if v == w:
                bits |= 1 << (4 * v + 3)         # T_v
            data.append(bits)
    return BouchetSystem(n, BitMatrix(n * n, 4 * n, data))


def _planes(bits: int) -> tuple[int, int, int, int]:
    """Split an interleaved 4n-bit solution vector into X, Y, Z, T planes."""
    return (
        compress4(bits),
        compress4(bits >> 1),
        compress4(bits >> 2),
        compress4(bits >> 3),
    )


def _interleave(x: int, y: int, z: int, t: int) -> int:
    return spread4(x) | (spread4(y) << 1) | (spread4(z) << 2) | (spread4(t) << 3)


def satisfies_nonlinear(b: BitVector, n: int) -> bool:
    """Check X_i T_i + Y_i Z_i = 1 for every vertex block of b."""
    if len(b) % 4 != 0 or len(b) != 4 * n:
        raise LckitError(f"vector length {len(b)} is not 4*n for n={n}")
    x, y, z, t = _planes(b.bits)
    return ((x & t) ^ (y & z)) == (1 << n) - 1


def _candidate_indices(dim: int) -> Iterable[tuple[int, ...]]:
    # singles, then pairs, in lexicographic index order; small solution
    # spaces get the full scan since the two-vector bound needs dim > 4
    sizes = range(1, dim + 1) if dim <= 4 else (1, 2)
    for size in sizes:
        yield from combinations(range(dim), size)


def _components(g: Graph) -> list[list[int]]:
    """Connected components over all labels 0..n-1, ordered by least vertex.

    Deleted vertices have empty rows and come out as singletons, matching
    their role in the system (isolated vertices).
    """
    seen = 0
    comps = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        reach = 1 << v
        frontier = reach
        while frontier:
            nxt = 0
            for x in iter_bits(frontier):
                nxt |= g.rows[x]
            frontier = nxt & ~reach
            reach |= frontier
        seen |= reach
        comps.append(list(iter_bits(reach)))
    return comps


def _induce(g: Graph, verts: list[int]) -> Graph:
    """Induced subgraph on verts, relabeled to 0..len(verts)-1."""
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        bits = 0
        r = g.rows[v]
        for u in iter_bits(r):
            if u in index:
                bits |= 1 << index[u]
        rows.append(bits)
    return Graph(len(verts), tuple(rows), (1 << len(verts)) - 1)


def _solve_connected(g1: Graph, g2: Graph, threads: int) -> tuple[int, int, int, int] | None:
    """Run the basis search on one component pair; returns solution planes."""
    n = g1.n
    system = build_system(g1, g2)
    basis = nullspace_basis(system.coeffs)
    planes = [_planes(b.bits) for b in basis]
    full = (1 << n) - 1
    candidates = list(_candidate_indices(len(basis)))

    def combine(combo: tuple[int, ...]) -> tuple[int, int, int, int]:
        x = y = z = t = 0
        for i in combo:
            px, py, pz, pt = planes[i]
            x ^= px
            y ^= py
            z ^= pz
            t ^= pt
        return x, y, z, t

    def check(combo: tuple[int, ...]) -> bool:
        x, y, z, t = combine(combo)
        return ((x & t) ^ (y & z)) == full

    hit = _first_match(candidates, check, threads)
    return combine(hit) if hit is not None else None


def solve_lep(g1: Graph, g2: Graph, threads: int = 1) -> LepVerdict:
    """Decide local equivalence; on success the verdict carries a witness.

    The witness is the first satisfying candidate in deterministic order
    (fixed nullspace basis, singles before pairs, per component in least-
    vertex order), independent of threads.
    """
    if g1.n != g2.n:
        raise LckitError(f"vertex count mismatch: {g1.n} vs {g2.n}")
    if g1.n < 1:
        raise LckitError("local equivalence needs at least one vertex")
    n = g1.n
    comps = _components(g1)
    if comps != _components(g2):
        return LepVerdict(False, None)
    bits = 0
    for comp in comps:
        sol = _solve_connected(_induce(g1, comp), _induce(g2, comp), threads)
        if sol is None:
            return LepVerdict(False, None)
        x, y, z, t = sol
        for i, v in enumerate(comp):
            block = ((x >> i) & 1) | (((y >> i) & 1) << 1) | (((z >> i) & 1) << 2) | (((t >> i) & 1) << 3)
            bits |= block << (4 * v)
    return LepVerdict(True, BitVector(4 * n, bits))


def _first_match(candidates, check, threads: int):
    """First candidate (in list order) passing check; parallel-safe."""
    if threads <= 1 or len(candidates) < 64:
        for combo in candidates:
            if check(combo):
                return combo
        return None
    chunk = max(64, len(candidates) // (threads * 8))
    spans = [(s, min(s + chunk, len(candidates))) for s in range(0, len(candidates), chunk)]

    def scan(span):
        lo, hi = span
        for k in range(lo, hi):
            if check(candidates[k]):
                return k
        return None

    best = None
    with ThreadPoolExecutor(max_workers=threads) as pool:
        # spans are ordered, so the first hit is the global first
        for k in pool.map(scan, spans):
            if k is not None:
                best = k
                break
    return candidates[best] if best is not None else None


def verify_witness(b: BitVector, g1: Graph, g2: Graph) -> bool:
    """Zero residual on the linear system and per-block nonlinear identity."""
    if g1.n != g2.n:
        raise LckitError(f"vertex count mismatch: {g1.n} vs {g2.n}")
    n = g1.n
    if len(b) != 4 * n:
        raise LckitError(f"witness length {len(b)} does not match 4*n for n={n}")
    system = build_system(g1, g2)
    if any(parity(r & b.bits) for r in system.coeffs.row_bits()):
        return False
    return satisfies_nonlinear(b, n)
