"""Dense linear algebra over the two-element field.

BitVector and BitMatrix pack coordinates into Python ints (bit i is
coordinate i).  Elimination runs on the selected kernel backend; results
are deterministic regardless of backend.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from . import backend
from ._bitops import parity
from .errors import LckitError


class BitVector:
    """Immutable vector over GF(2)."""

    __slots__ = ("length", "bits")

    def __init__(self, length: int, bits: int = 0):
        if length < 0:
            raise LckitError(f"vector length must be non-negative, got {length}")
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "bits", bits & ((1 << length) - 1))

    def __setattr__(self, name, value):
        raise AttributeError("BitVector is immutable")

    @classmethod
    def from_bits(cls, coords: Iterable[int]) -> BitVector:
        bits = 0
        length = 0
        for length, c in enumerate(coords, start=1):
            if c:
                bits |= 1 << (length - 1)
        return cls(length, bits)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return ((self.bits >> i) & 1 for i in range(self.length))

    def __xor__(self, other: BitVector) -> BitVector:
        if self.length != other.length:
            raise LckitError(f"length mismatch: {self.length} vs {other.length}")
        return BitVector(self.length, self.bits ^ other.bits)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitVector)
            and self.length == other.length
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.length, self.bits))

    def is_zero(self) -> bool:
        return self.bits == 0

    def to_tuple(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"BitVector({''.join(str(b) for b in self)})"


class BitMatrix:
    """Matrix over GF(2); rows and cols are counts, row data lives in ints."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Sequence[int] | None = None):
        if rows < 0 or cols < 0:
            raise LckitError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        mask = (1 << cols) - 1
        if data is None:
            self._data = [0] * rows
        else:
            if len(data) != rows:
                raise LckitError(f"expected {rows} rows of data, got {len(data)}")
            self._data = [r & mask for r in data]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | BitVector], cols: int | None = None) -> BitMatrix:
        if not rows:
            return cls(0, cols or 0)
        vecs = [r if isinstance(r, BitVector) else BitVector.from_bits(r) for r in rows]
        width = cols if cols is not None else vecs[0].length
        for v in vecs:
            if v.length != width:
                raise LckitError(f"row length {v.length} does not match cols={width}")
        return cls(len(vecs), width, [v.bits for v in vecs])

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, [1 << i for i in range(n)])

    def row(self, i: int) -> BitVector:
        if not 0 <= i < self.rows:
            raise IndexError(i)
        return BitVector(self.cols, self._data[i])

    def row_bits(self) -> list[int]:
        return list(self._data)

    def transpose(self) -> BitMatrix:
        out = [0] * self.cols
        for i, r in enumerate(self._data):
            while r:
                lsb = r & -r
                out[lsb.bit_length() - 1] |= 1 << i
                r ^= lsb
        return BitMatrix(self.cols, self.rows, out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"BitMatrix({self.rows}x{self.cols})"


def rref(m: BitMatrix) -> tuple[BitMatrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns (zero rows dropped)."""
    reduced, pivots = backend.gf2_rref_rows(m.row_bits(), m.cols)
    return BitMatrix(len(reduced), m.cols, reduced), tuple(pivots)


def rank(m: BitMatrix) -> int:
    """Rank over GF(2)."""
    _, pivots = backend.gf2_rref_rows(m.row_bits(), m.cols)
    return len(pivots)


def nullspace_basis(m: BitMatrix) -> list[BitVector]:
    """Deterministic nullspace basis: one vector per free column, ascending.

    Each vector sets its free column to 1 and back-fills the pivot
    coordinates from the reduced echelon form, so the result is independent,
    spans the solution set of M x = 0, and has cols - rank elements.
    """
    reduced, pivots = backend.gf2_rref_rows(m.row_bits(), m.cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        fbit = 1 << f
        bits = fbit
        for r, p in enumerate(pivots):
            if reduced[r] & fbit:
                bits |= 1 << p
        basis.append(BitVector(m.cols, bits))
    return basis


def matvec(m: BitMatrix, x: BitVector) -> BitVector:
    """Matrix-vector product over GF(2)."""
    if x.length != m.cols:
        raise LckitError(f"dimension mismatch: matrix has {m.cols} cols, vector {x.length}")
    bits = 0
    for i, r in enumerate(m.row_bits()):
        if parity(r & x.bits):
            bits |= 1 << i
    return BitVector(m.rows, bits)


def vec_add(a: BitVector, b: BitVector) -> BitVector:
    """Vector sum over GF(2) (XOR)."""
    return a ^ b
