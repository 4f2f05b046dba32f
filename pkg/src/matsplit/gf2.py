"""Dense GF(2) matrices stored as row bitsets.

A :class:`BitMatrix` keeps each row as a Python int with bit ``j``
holding the entry in column ``j``.  Values are immutable; every
operation returns a new matrix.  Column order is significant and is
never changed here — callers own all label/position bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ._kernels import rank_rows, rref_rows, pure

# Compiled kernels cap rows at 64 bits; wider matrices take the pure path.
_WORD_BITS = 64


@dataclass(frozen=True)
class BitMatrix:
    """Immutable GF(2) matrix; ``rows[i]`` has bit ``j`` set iff entry (i,j) is 1."""

    rows: tuple[int, ...]
    col_count: int

    def __post_init__(self) -> None:
        if self.col_count < 0:
            raise ValueError("negative column count")
        limit = 1 << self.col_count
        for i, row in enumerate(self.rows):
            if row < 0 or row >= limit:
                raise ValueError(f"row {i} has bits outside {self.col_count} columns")

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def entry(self, r: int, c: int) -> int:
        if not (0 <= r < self.row_count and 0 <= c < self.col_count):
            raise IndexError(f"entry ({r},{c}) out of range")
        return (self.rows[r] >> c) & 1

    def column(self, c: int) -> int:
        """Column ``c`` as an int over row bits (bit i = entry (i,c))."""
        if not (0 <= c < self.col_count):
            raise IndexError(f"column {c} out of range")
        out = 0
        for i, row in enumerate(self.rows):
            out |= ((row >> c) & 1) << i
        return out

    def columns(self) -> tuple[int, ...]:
        return tuple(self.column(c) for c in range(self.col_count))

    def row_strings(self) -> list[str]:
        """Rows as 0/1 strings, column 0 leftmost."""
        return [
            "".join("1" if (row >> c) & 1 else "0" for c in range(self.col_count))
            for row in self.rows
        ]

    @classmethod
    def from_row_ints(cls, rows: Iterable[int], col_count: int) -> "BitMatrix":
        return cls(tuple(rows), col_count)

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        """Build from lists of 0/1 entries (row-major)."""
        if not rows:
            return cls((), 0)
        width = len(rows[0])
        ints = []
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged rows")
            ints.append(sum((1 << j) for j, e in enumerate(r) if e & 1))
        return cls(tuple(ints), width)


def _kernel_rank(rows: Sequence[int], col_count: int) -> int:
    if col_count > _WORD_BITS:
        return pure.rank_rows(rows)
    return rank_rows(rows)


def _kernel_rref(rows: Sequence[int], col_count: int) -> tuple[list[int], list[int]]:
    if col_count > _WORD_BITS:
        return pure.rref_rows(rows)
    return rref_rows(rows)


def rank(m: BitMatrix) -> int:
    """GF(2) row rank."""
    return _kernel_rank(m.rows, m.col_count)


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form with zero rows removed, plus pivot columns.

    Row space is preserved; the result is the unique RREF of it, rows
    ordered by pivot column.
    """
    rows, pivots = _kernel_rref(m.rows, m.col_count)
    return BitMatrix(tuple(rows), m.col_count), pivots


def pivot_eliminate(m: BitMatrix, r: int, c: int) -> BitMatrix:
    """Pivot on entry (r,c), then drop row r and column c.

    Adds row r (mod 2) to every other row with a 1 in column c.  Requires
    entry (r,c) = 1.  Columns after c shift left by one position.
    """
    if m.entry(r, c) != 1:
        raise ValueError(f"cannot pivot on zero entry ({r},{c})")
    pivot_row = m.rows[r]
    low = (1 << c) - 1
    out = []
    for i, row in enumerate(m.rows):
        if i == r:
            continue
        if (row >> c) & 1:
            row ^= pivot_row
        out.append((row & low) | ((row >> (c + 1)) << c))
    return BitMatrix(tuple(out), m.col_count - 1)


def append_row(m: BitMatrix, support: Iterable[int]) -> BitMatrix:
    """Append one row whose 1-entries are exactly ``support``."""
    row = 0
    for c in support:
        if not (0 <= c < m.col_count):
            raise ValueError(f"support index {c} out of range for {m.col_count} columns")
        row |= 1 << c
    return BitMatrix(m.rows + (row,), m.col_count)


def append_column(m: BitMatrix, entries: Sequence[int]) -> BitMatrix:
    """Append one column given its entries top to bottom."""
    if len(entries) != m.row_count:
        raise ValueError(f"expected {m.row_count} entries, got {len(entries)}")
    c = m.col_count
    out = tuple(row | ((e & 1) << c) for row, e in zip(m.rows, entries))
    return BitMatrix(out, c + 1)
