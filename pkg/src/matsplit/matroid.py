"""Represented binary matroids with labeled ground sets.

A :class:`BinaryMatroid` is the column-dependence matroid of a GF(2)
matrix; the stored representation is always in reduced row echelon form
with zero rows removed, so ``rank == matrix.row_count``.  Minors,
duality, circuits and isomorphism certificates all operate on that
normalized form.  Derived data (subset-rank table, circuits, canonical
form) is computed on demand and cached; instances are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import gf2
from ._kernels import MAX_TABLE_BITS, circuit_masks, rank_rows, rank_table
from .gf2 import BitMatrix

CANONICAL_CAP = 12

CircuitSet = frozenset  # of frozensets of element labels


@dataclass(frozen=True)
class IsoCertificate:
    """A ground-set bijection witnessing isomorphism; independently checkable."""

    mapping: dict[str, str]

    def inverse(self) -> dict[str, str]:
        return {v: k for k, v in self.mapping.items()}


class BinaryMatroid:
    """Binary matroid given by a normalized GF(2) representation."""

    __slots__ = (
        "matrix",
        "labels",
        "_index",
        "_pivots",
        "_cols",
        "_table",
        "_circ_masks",
        "_canon",
        "_fprint",
    )

    def __init__(self, matrix: BitMatrix, labels: Sequence[str], pivots: Sequence[int]):
        # internal: `matrix` must already be normalized (use from_matrix)
        self.matrix = matrix
        self.labels = tuple(labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._pivots = tuple(pivots)
        self._cols: Optional[tuple[int, ...]] = None
        self._table: Optional[bytearray] = None
        self._circ_masks: Optional[tuple[int, ...]] = None
        self._canon: Optional[tuple[bytes, tuple[int, ...]]] = None
        self._fprint: Optional[tuple] = None

    # -- basic queries ---------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def rank(self) -> int:
        return self.matrix.row_count

    def ground_set(self) -> frozenset[str]:
        return frozenset(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown element label {label!r}") from None

    def cols(self) -> tuple[int, ...]:
        if self._cols is None:
            self._cols = self.matrix.columns()
        return self._cols

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BinaryMatroid)
            and self.labels == other.labels
            and self.matrix == other.matrix
        )

    def __hash__(self) -> int:
        return hash((self.matrix.rows, self.matrix.col_count, self.labels))

    def __repr__(self) -> str:
        return f"BinaryMatroid(rank={self.rank}, elements={self.size})"

    # -- cached derived data ----------------------------------------------

    def subset_rank_table(self) -> bytearray:
        if self._table is None:
            if self.size > MAX_TABLE_BITS:
                raise ValueError(
                    f"subset computations capped at {MAX_TABLE_BITS} elements"
                )
            self._table = rank_table(self.cols(), self.size)
        return self._table

    def circuit_mask_list(self) -> tuple[int, ...]:
        if self._circ_masks is None:
            self._circ_masks = tuple(
                circuit_masks(self.subset_rank_table(), self.size)
            )
        return self._circ_masks

    def label_mask(self, labels: Iterable[str]) -> int:
        mask = 0
        for lab in labels:
            mask |= 1 << self.index_of(lab)
        return mask

    def labels_of_mask(self, mask: int) -> frozenset[str]:
        return frozenset(self.labels[i] for i in _bit_indices(mask))

    def fingerprint(self) -> tuple:
        """Isomorphism-invariant summary used for cheap rejections."""
        if self._fprint is None:
            cols = self.cols()
            loops = sum(1 for c in cols if c == 0)
            mult: dict[int, int] = {}
            for c in cols:
                if c:
                    mult[c] = mult.get(c, 0) + 1
            profile = tuple(sorted(mult.values(), reverse=True))
            hist: dict[int, int] = {}
            for m in self.circuit_mask_list():
                k = m.bit_count()
                hist[k] = hist.get(k, 0) + 1
            self._fprint = (
                self.size,
                self.rank,
                loops,
                profile,
                tuple(sorted(hist.items())),
            )
        return self._fprint


def from_matrix(m: BitMatrix, labels: Sequence[str]) -> BinaryMatroid:
    """Construct a matroid from any representation matrix.

    Normalizes via RREF (column order and labels preserved).  Labels must
    be distinct, non-empty, and match the column count.
    """
    labels = tuple(labels)
    if len(labels) != m.col_count:
        raise ValueError(f"{m.col_count} columns but {len(labels)} labels")
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate element labels")
    for lab in labels:
        if not lab:
            raise ValueError("empty element label")
    norm, pivots = gf2.rref(m)
    return BinaryMatroid(norm, labels, pivots)


def _bit_indices(mask: int) -> list[int]:
    out = []
    while mask:
        lb = mask & -mask
        out.append(lb.bit_length() - 1)
        mask ^= lb
    return out


def _select_columns(m: BitMatrix, idxs: Sequence[int]) -> BitMatrix:
    rows = []
    for row in m.rows:
        new = 0
        for j, i in enumerate(idxs):
            new |= ((row >> i) & 1) << j
        rows.append(new)
    return BitMatrix(tuple(rows), len(idxs))


def _validate_subset(b: BinaryMatroid, s: Iterable[str]) -> frozenset[str]:
    out = frozenset(s)
    for lab in out:
        b.index_of(lab)
    return out


# -- minors and duality ----------------------------------------------------


def delete(b: BinaryMatroid, s: Iterable[str]) -> BinaryMatroid:
    """Delete the elements in ``s``; remaining label order is preserved."""
    drop = _validate_subset(b, s)
    keep = [i for i, lab in enumerate(b.labels) if lab not in drop]
    return from_matrix(
        _select_columns(b.matrix, keep), [b.labels[i] for i in keep]
    )


def contract(b: BinaryMatroid, s: Iterable[str]) -> BinaryMatroid:
    """Contract the elements in ``s``; loops in ``s`` are simply deleted."""
    todo = sorted(_validate_subset(b, s))
    m = b.matrix
    labels = list(b.labels)
    for lab in todo:
        i = labels.index(lab)
        col = m.column(i)
        if col == 0:
            low = (1 << i) - 1
            m = BitMatrix(
                tuple((row & low) | ((row >> (i + 1)) << i) for row in m.rows),
                m.col_count - 1,
            )
        else:
            r = (col & -col).bit_length() - 1
            m = gf2.pivot_eliminate(m, r, i)
        labels.pop(i)
    return from_matrix(m, labels)


def restrict_to(b: BinaryMatroid, keep: Iterable[str]) -> BinaryMatroid:
    """Restriction to ``keep`` = deletion of everything else."""
    keep = _validate_subset(b, keep)
    return delete(b, b.ground_set() - keep)


def dual(b: BinaryMatroid) -> BinaryMatroid:
    """Standard-form dual: [I|D] goes to [D^T|I] with labels carried along."""
    n = b.size
    piv = b._pivots
    pivset = set(piv)
    nonpiv = [j for j in range(n) if j not in pivset]
    rows = []
    for j in nonpiv:
        row = 1 << j
        for i, p in enumerate(piv):
            if (b.matrix.rows[i] >> j) & 1:
                row |= 1 << p
        rows.append(row)
    return from_matrix(BitMatrix(tuple(rows), n), b.labels)


# -- circuits and element structure -----------------------------------------


def circuits(b: BinaryMatroid, max_size: Optional[int] = None) -> CircuitSet:
    """All circuits (minimal dependent sets), optionally size-bounded."""
    out = []
    for m in b.circuit_mask_list():
        if max_size is not None and m.bit_count() > max_size:
            continue
        out.append(b.labels_of_mask(m))
    return frozenset(out)


def cocircuits(b: BinaryMatroid, max_size: Optional[int] = None) -> CircuitSet:
    return circuits(dual(b), max_size)


def loops(b: BinaryMatroid) -> frozenset[str]:
    return frozenset(lab for lab, c in zip(b.labels, b.cols()) if c == 0)


def coloops(b: BinaryMatroid) -> frozenset[str]:
    """Elements in no circuit (equivalently, in every basis)."""
    tab = b.subset_rank_table()
    full = (1 << b.size) - 1
    r = b.rank
    return frozenset(
        b.labels[i] for i in range(b.size) if tab[full ^ (1 << i)] < r
    )


def parallel_classes(b: BinaryMatroid) -> list[frozenset[str]]:
    """Non-loop elements grouped by equal columns, in first-occurrence order."""
    groups: dict[int, list[str]] = {}
    for lab, c in zip(b.labels, b.cols()):
        if c:
            groups.setdefault(c, []).append(lab)
    return [frozenset(g) for g in groups.values()]


def has_2_cocircuit(b: BinaryMatroid) -> bool:
    """True iff some cocircuit has size exactly 2 (a 2-circuit of the dual)."""
    d = dual(b)
    seen: set[int] = set()
    for c in d.cols():
        if c:
            if c in seen:
                return True
            seen.add(c)
    return False


# -- isomorphism and canonical form ------------------------------------------


def _element_classes(b: BinaryMatroid) -> list[int]:
    """Class rank per element, from isomorphism-invariant local fingerprints."""
    n = b.size
    cols = b.cols()
    mult: dict[int, int] = {}
    for c in cols:
        mult[c] = mult.get(c, 0) + 1
    through: list[dict[int, int]] = [dict() for _ in range(n)]
    for m in b.circuit_mask_list():
        k = m.bit_count()
        for i in _bit_indices(m):
            through[i][k] = through[i].get(k, 0) + 1
    fps = [
        (cols[i] == 0, mult[cols[i]], tuple(sorted(through[i].items())))
        for i in range(n)
    ]
    order = {fp: r for r, fp in enumerate(sorted(set(fps)))}
    return [order[fp] for fp in fps]


def _canonical(b: BinaryMatroid) -> tuple[bytes, tuple[int, ...]]:
    """Canonical encoding plus a witnessing column order.

    Minimizes, over all column orders, the sequence of per-column keys
    (class_rank, rref_mask) where rref_mask is the column of the left-to-
    right RREF pattern: ``1 << k`` for the k-th new pivot, else the set of
    earlier pivots summing to the column.  Equal encodings hold exactly
    for isomorphic matroids.  Branch-and-bound over tie choices, with
    parallel columns collapsed and independent tails completed directly.
    """
    if b._canon is not None:
        return b._canon
    n = b.size
    if n > CANONICAL_CAP:
        raise ValueError(f"canonical form capped at {CANONICAL_CAP} elements")
    cols = b.cols()
    crank = _element_classes(b)
    best_keys: list = [None]
    best_order: list = [None]

    def reduce(v: int, lead: dict[int, tuple[int, int]]) -> tuple[int, int]:
        combo = 0
        while v:
            lb = v & -v
            rc = lead.get(lb)
            if rc is None:
                break
            v ^= rc[0]
            combo ^= rc[1]
        return v, combo

    def dfs(
        order: list[int],
        keys: list[tuple[int, int]],
        lead: dict[int, tuple[int, int]],
        k: int,
        remaining: list[int],
    ) -> None:
        d = len(keys)
        bk = best_keys[0]
        tight = False
        if bk is not None:
            prefix = bk[:d]
            kl = tuple(keys)
            if kl > prefix:
                return
            tight = kl == prefix
        if not remaining:
            kt = tuple(keys)
            if bk is None or kt < bk:
                best_keys[0] = kt
                best_order[0] = tuple(order)
            return

        reduced = [(e,) + reduce(cols[e], lead) for e in remaining]

        # independent tail: every remaining column is a fresh pivot in any
        # order, so the minimal completion is just sorted by class rank
        if all(v for _, v, _ in reduced) and rank_rows(
            [v for _, v, _ in reduced]
        ) == len(remaining):
            tail = sorted(remaining, key=lambda e: (crank[e], e))
            kk = k
            ok = True
            for e in tail:
                key = (crank[e], 1 << kk)
                if tight:
                    if key > bk[len(keys)]:
                        ok = False
                        break
                    if key < bk[len(keys)]:
                        tight = False
                keys.append(key)
                kk += 1
            if ok:
                kt = tuple(keys)
                if bk is None or kt < bk:
                    best_keys[0] = kt
                    best_order[0] = tuple(order + tail)
            del keys[d:]
            return

        entries = []
        for e, v, combo in reduced:
            key = (crank[e], (1 << k) if v else combo)
            entries.append((key, e, v, combo))
        kmin = min(key for key, _, _, _ in entries)
        if tight and kmin > bk[d]:
            return
        seen_cols: set[int] = set()
        for key, e, v, combo in entries:
            if key != kmin:
                continue
            if cols[e] in seen_cols:
                continue
            seen_cols.add(cols[e])
            order.append(e)
            keys.append(key)
            rest = [x for x in remaining if x != e]
            if v:
                lb = v & -v
                lead[lb] = (v, combo | (1 << k))
                dfs(order, keys, lead, k + 1, rest)
                del lead[lb]
            else:
                dfs(order, keys, lead, k, rest)
            order.pop()
            keys.pop()

    dfs([], [], {}, 0, list(range(n)))
    keys = best_keys[0]
    enc = bytes([n]) + b"".join(
        bytes([cr]) + mask.to_bytes(2, "big") for cr, mask in keys
    )
    b._canon = (enc, best_order[0])
    return b._canon


def canonical_form(b: BinaryMatroid) -> bytes:
    """Byte string equal for two matroids iff they are isomorphic."""
    return _canonical(b)[0]


def certificate_valid(cert: IsoCertificate, b1: BinaryMatroid, b2: BinaryMatroid) -> bool:
    """Re-check a certificate: permuted representations must have equal RREF."""
    if b1.size != b2.size:
        return False
    if set(cert.mapping) != set(b1.labels):
        return False
    if set(cert.mapping.values()) != set(b2.labels):
        return False
    inv = cert.inverse()
    perm = [b1.index_of(inv[lab]) for lab in b2.labels]
    permuted = _select_columns(b1.matrix, perm)
    norm, _ = gf2.rref(permuted)
    return norm.rows == b2.matrix.rows


def isomorphic(b1: BinaryMatroid, b2: BinaryMatroid) -> Optional[IsoCertificate]:
    """Certificate mapping circuits of b1 onto circuits of b2, or None."""
    if b1.size != b2.size or b1.rank != b2.rank:
        return None
    if b1.fingerprint() != b2.fingerprint():
        return None
    enc1, ord1 = _canonical(b1)
    enc2, ord2 = _canonical(b2)
    if enc1 != enc2:
        return None
    mapping = {
        b1.labels[ord1[i]]: b2.labels[ord2[i]] for i in range(b1.size)
    }
    cert = IsoCertificate(mapping)
    if not certificate_valid(cert, b1, b2):
        raise RuntimeError("canonical orders produced an invalid certificate")
    return cert
