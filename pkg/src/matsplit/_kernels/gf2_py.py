"""Pure-Python GF(2) kernels on int bitsets.

Reference backend for the compiled extension in ``_gf2cy``.  Both expose
the same four functions; rows and columns are plain Python ints with bit
``j`` holding entry ``j``.
"""

from __future__ import annotations

from typing import Sequence

NAME = "python"

MAX_TABLE_BITS = 20


def rank_rows(rows: Sequence[int]) -> int:
    """GF(2) rank of a list of row bitsets."""
    pivots: list[int] = []
    rank = 0
    for row in rows:
        cur = row
        for p in pivots:
            if cur & (p & -p):
                cur ^= p
        if cur:
            pivots.append(cur)
            rank += 1
    return rank


def rref_rows(rows: Sequence[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form over GF(2).

    Returns (reduced rows sorted by pivot column, pivot column indices).
    Zero rows are dropped; pivot of a row is its lowest set bit.
    """
    pivots: dict[int, int] = {}  # pivot bit -> reduced row
    for row in rows:
        cur = row
        for lb, p in pivots.items():
            if cur & lb:
                cur ^= p
        if cur:
            lb = cur & -cur
            for k in pivots:
                if pivots[k] & lb:
                    pivots[k] ^= cur
            pivots[lb] = cur
    ordered = sorted(pivots.items())
    return [r for _, r in ordered], [lb.bit_length() - 1 for lb, _ in ordered]


def rank_table(cols: Sequence[int], n: int) -> bytearray:
    """Rank of every column subset, indexed by subset bitmask.

    ``cols[i]`` is the i-th column as an int over row bits.  The result has
    ``2**n`` entries; entry ``m`` is the GF(2) rank of the columns selected
    by mask ``m``.  Filled by depth-first include/exclude with an
    incremental elimination basis.
    """
    if n != len(cols):
        raise ValueError("n does not match number of columns")
    if n > MAX_TABLE_BITS:
        raise ValueError(f"rank table capped at {MAX_TABLE_BITS} columns, got {n}")
    tab = bytearray(1 << n)
    lead: dict[int, int] = {}  # leading bit -> basis vector

    def go(i: int, mask: int, rk: int) -> None:
        if i == n:
            tab[mask] = rk
            return
        go(i + 1, mask, rk)
        v = cols[i]
        while v:
            lb = v & -v
            b = lead.get(lb)
            if b is None:
                break
            v ^= b
        if v:
            lb = v & -v
            lead[lb] = v
            go(i + 1, mask | (1 << i), rk + 1)
            del lead[lb]
        else:
            go(i + 1, mask | (1 << i), rk)

    go(0, 0, 0)
    return tab


def circuit_masks(table: Sequence[int], n: int, max_size: int = 0) -> list[int]:
    """Masks of all circuits (minimal dependent column sets).

    ``table`` is a rank table as produced by :func:`rank_table`.  A mask m
    with k bits is a circuit iff rank(m) == k-1 and dropping any single
    element leaves an independent set.  ``max_size`` of 0 means unbounded.
    """
    out: list[int] = []
    for m in range(1, 1 << n):
        k = m.bit_count()
        if max_size and k > max_size:
            continue
        if table[m] != k - 1:
            continue
        rest = m
        ok = True
        while rest:
            lb = rest & -rest
            if table[m ^ lb] != k - 1:
                ok = False
                break
            rest ^= lb
        if ok:
            out.append(m)
    return out
