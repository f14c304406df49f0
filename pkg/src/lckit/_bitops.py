"""Bit-twiddling helpers for int-encoded bit vectors.

Bit i of an int is coordinate i.  Tables work one byte at a time so the
helpers stay fast on arbitrarily long Python ints.
"""

from __future__ import annotations

from typing import Iterator


def _spread_byte(b: int) -> int:
    out = 0
    for i in range(8):
        if (b >> i) & 1:
            out |= 1 << (4 * i)
    return out


def _compress_byte(b: int) -> int:
    # keeps bits at positions 0 and 4 of the byte
    return ((b >> 0) & 1) | (((b >> 4) & 1) << 1)


_SPREAD4 = tuple(_spread_byte(b) for b in range(256))
_COMPRESS4 = tuple(_compress_byte(b) for b in range(256))


def spread4(x: int) -> int:
    """Map bit i of x to bit 4*i of the result."""
    out = 0
    k = 0
    while x:
        out |= _SPREAD4[x & 0xFF] << (k << 5)
        x >>= 8
        k += 1
    return out


def compress4(x: int) -> int:
    """Inverse of spread4: collect bits at positions 0, 4, 8, ... of x."""
    out = 0
    k = 0
    while x:
        out |= _COMPRESS4[x & 0xFF] << (k << 1)
        x >>= 8
        k += 1
    return out


def iter_bits(x: int) -> Iterator[int]:
    """Yield set bit positions of x in ascending order."""
    while x:
        lsb = x & -x
        yield lsb.bit_length() - 1
        x ^= lsb


def parity(x: int) -> int:
    return x.bit_count() & 1
