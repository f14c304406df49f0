"""Pure-Python kernels: the fallback backend.

Same contract as the compiled ``lckit._core`` extension; rows are Python
ints used as bit sets (bit u of rows[v] means edge (v, u)).  Kept free of
third-party imports so the package runs anywhere.
"""

from __future__ import annotations

from typing import Sequence

BACKEND_NAME = "python"


def apply_sequence_rows(rows: Sequence[int], n: int, seq: Sequence[int]) -> list[int]:
    """Apply local complementation at each vertex of seq, in order.

    Callers validate seq elements; here they must already be in [0, n).
    """
    work = list(rows)
    for v in seq:
        m = work[v]
        x = m
        while x:
            lsb = x & -x
            x ^= lsb
            # toggle u's adjacency with every other neighbor of v; the
            # m ^ lsb term keeps the diagonal bit of row u clear
            work[lsb.bit_length() - 1] ^= m ^ lsb
    return work


def gf2_rref_rows(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form over GF(2).

    Returns (nonzero rows of the RREF in pivot order, pivot column list).
    Pivot rule: columns scanned left to right, first available row wins;
    this exact rule is mirrored by the compiled backend so results are
    backend-independent.
    """
    work = list(rows)
    nrows = len(work)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        mask = 1 << c
        piv = -1
        for i in range(r, nrows):
            if work[i] & mask:
                piv = i
                break
        if piv < 0:
            continue
        work[r], work[piv] = work[piv], work[r]
        pr = work[r]
        for j in range(nrows):
            if work[j] & mask and j != r:
                work[j] ^= pr
        pivots.append(c)
        r += 1
    return work[:r], pivots
