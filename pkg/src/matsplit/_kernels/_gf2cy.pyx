# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2) kernels; drop-in replacement for gf2_py.

Rows/columns are ints restricted to 64 bits here (the pure backend has no
such cap; callers dispatch accordingly).
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

NAME = "cython"

MAX_TABLE_BITS = 20

DEF MAXBITS = 64


def rank_rows(rows):
    """GF(2) rank of a list of row bitsets."""
    cdef unsigned long long piv[MAXBITS]
    cdef unsigned long long cur, lb
    cdef int rank = 0, i
    cdef object row
    for i in range(MAXBITS):
        piv[i] = 0
    for row in rows:
        cur = <unsigned long long> row
        while cur:
            lb = cur & (~cur + 1)
            i = __builtin_ctzll(lb)
            if piv[i] == 0:
                piv[i] = cur
                rank += 1
                break
            cur ^= piv[i]
    return rank


def rref_rows(rows):
    """Reduced row echelon form over GF(2); same contract as gf2_py.rref_rows."""
    cdef unsigned long long piv[MAXBITS]
    cdef unsigned long long cur, lb
    cdef int i, j
    for i in range(MAXBITS):
        piv[i] = 0
    for row in rows:
        cur = <unsigned long long> row
        while cur:
            lb = cur & (~cur + 1)
            i = __builtin_ctzll(lb)
            if piv[i] == 0:
                # back-eliminate the new pivot bit from settled rows
                for j in range(MAXBITS):
                    if piv[j] and (piv[j] & lb):
                        piv[j] ^= cur
                piv[i] = cur
                break
            cur ^= piv[i]
    out_rows = []
    out_piv = []
    for i in range(MAXBITS):
        if piv[i]:
            out_rows.append(piv[i])
            out_piv.append(i)
    return out_rows, out_piv


cdef void _fill(unsigned long long* cols, int n, int i, size_t mask, int rk,
                unsigned long long* lead, unsigned char* tab) nogil:
    cdef unsigned long long v, lb
    cdef int pos
    if i == n:
        tab[mask] = <unsigned char> rk
        return
    _fill(cols, n, i + 1, mask, rk, lead, tab)
    v = cols[i]
    while v:
        lb = v & (~v + 1)
        pos = __builtin_ctzll(lb)
        if lead[pos] == 0:
            break
        v ^= lead[pos]
    if v:
        lb = v & (~v + 1)
        pos = __builtin_ctzll(lb)
        lead[pos] = v
        _fill(cols, n, i + 1, mask | ((<size_t> 1) << i), rk + 1, lead, tab)
        lead[pos] = 0
    else:
        _fill(cols, n, i + 1, mask | ((<size_t> 1) << i), rk, lead, tab)


def rank_table(cols, int n):
    """Rank of every column subset, indexed by subset bitmask."""
    if n != len(cols):
        raise ValueError("n does not match number of columns")
    if n > MAX_TABLE_BITS:
        raise ValueError(f"rank table capped at {MAX_TABLE_BITS} columns, got {n}")
    cdef bytearray tab = bytearray(1 << n)
    cdef unsigned char* tptr = tab
    cdef unsigned long long* ccols = <unsigned long long*> malloc(n * sizeof(unsigned long long) if n else sizeof(unsigned long long))
    cdef unsigned long long lead[MAXBITS]
    cdef int i
    if ccols == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            ccols[i] = <unsigned long long> cols[i]
        for i in range(MAXBITS):
            lead[i] = 0
        _fill(ccols, n, 0, 0, 0, lead, tptr)
    finally:
        free(ccols)
    return tab


def circuit_masks(table, int n, int max_size=0):
    """Masks of all circuits given a rank table; same contract as gf2_py."""
    cdef const unsigned char[::1] tab = table
    cdef size_t m, rest, lb
    cdef int k
    cdef bint ok
    out = []
    for m in range(1, (<size_t> 1) << n):
        k = __builtin_popcountll(m)
        if max_size and k > max_size:
            continue
        if tab[m] != k - 1:
            continue
        rest = m
        ok = True
        while rest:
            lb = rest & (~rest + 1)
            if tab[m ^ lb] != k - 1:
                ok = False
                break
            rest ^= lb
        if ok:
            out.append(m)
    return out
