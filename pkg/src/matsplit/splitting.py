"""Splitting, element splitting, es-splitting, and the extension family.

All three splitting operations act on the normalized representation:
splitting appends a row with 1s exactly on X; element splitting also
appends a fresh unit column q in the new row; es-splitting first
duplicates a chosen element e of X as a new column gamma (not in X) and
then element-splits.  Extensions, coextensions and quotients enumerate
single-element companions and are returned deduplicated up to
isomorphism, sorted by canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import gf2
from . import matroid as _matroid
from .matroid import BinaryMatroid

EXTENSION_RANK_CAP = 12
COEXTENSION_SIZE_CAP = 11


def fresh_label(existing: Iterable[str], base: str) -> str:
    """``base`` if unused, else base with the first free numeric suffix."""
    taken = set(existing)
    if base not in taken:
        return base
    k = 1
    while f"{base}{k}" in taken:
        k += 1
    return f"{base}{k}"


def _x_indices(b: BinaryMatroid, x: Iterable[str]) -> list[int]:
    return sorted(b.index_of(lab) for lab in set(x))


def split(b: BinaryMatroid, x: Iterable[str]) -> BinaryMatroid:
    """Splitting on X: append a row with 1s on the columns of X."""
    m = gf2.append_row(b.matrix, _x_indices(b, x))
    return _matroid.from_matrix(m, b.labels)


def element_split(
    b: BinaryMatroid, x: Iterable[str], q_label: Optional[str] = None
) -> BinaryMatroid:
    """Element splitting on X: splitting plus a unit column q in the new row."""
    q = fresh_label(b.labels, "q") if q_label is None else q_label
    if q in b.labels:
        raise ValueError(f"label {q!r} collides with an existing element")
    m = gf2.append_row(b.matrix, _x_indices(b, x))
    m = gf2.append_column(m, [0] * b.matrix.row_count + [1])
    return _matroid.from_matrix(m, b.labels + (q,))


def es_split(
    b: BinaryMatroid,
    x: Iterable[str],
    e: str,
    gamma_label: Optional[str] = None,
    q_label: Optional[str] = None,
) -> BinaryMatroid:
    """es-splitting: duplicate e (in X) as gamma, then element-split on X."""
    xset = set(x)
    if e not in xset:
        raise ValueError(f"pivot element {e!r} must belong to X")
    b.index_of(e)
    gamma = fresh_label(b.labels, "gamma") if gamma_label is None else gamma_label
    if gamma in b.labels:
        raise ValueError(f"label {gamma!r} collides with an existing element")
    col = b.cols()[b.index_of(e)]
    entries = [(col >> i) & 1 for i in range(b.matrix.row_count)]
    m = gf2.append_column(b.matrix, entries)
    widened = _matroid.from_matrix(m, b.labels + (gamma,))
    return element_split(widened, xset, q_label)


@dataclass(frozen=True)
class SplitSpec:
    """A splitting request: subject, X, mode, and fresh-label choices."""

    subject: BinaryMatroid
    x_set: frozenset[str]
    mode: str = "plain"  # plain | element | es
    pivot: Optional[str] = None
    new_labels: tuple[Optional[str], Optional[str]] = (None, None)  # (q, gamma)

    def __post_init__(self) -> None:
        if self.mode not in ("plain", "element", "es"):
            raise ValueError(f"unknown splitting mode {self.mode!r}")
        for lab in self.x_set:
            self.subject.index_of(lab)
        if self.mode == "es":
            if self.pivot is None:
                raise ValueError("es mode needs a pivot element")
            if self.pivot not in self.x_set:
                raise ValueError(f"pivot element {self.pivot!r} must belong to X")

    def apply(self) -> BinaryMatroid:
        q, gamma = self.new_labels
        if self.mode == "plain":
            return split(self.subject, self.x_set)
        if self.mode == "element":
            return element_split(self.subject, self.x_set, q)
        return es_split(self.subject, self.x_set, self.pivot, gamma, q)


def _dedup_sorted(cands: list[BinaryMatroid]) -> list[BinaryMatroid]:
    by_canon: dict[bytes, BinaryMatroid] = {}
    for b in cands:
        key = _matroid.canonical_form(b)
        if key not in by_canon:
            by_canon[key] = b
    return [by_canon[k] for k in sorted(by_canon)]


def extensions(b: BinaryMatroid, q_label: Optional[str] = None) -> list[BinaryMatroid]:
    """Single-element binary extensions, one per isomorphism class.

    Candidate columns range over all 2^r vectors in the normalized row
    coordinates (the zero vector adds a loop).
    """
    r = b.rank
    if r > EXTENSION_RANK_CAP:
        raise ValueError(f"extension enumeration capped at rank {EXTENSION_RANK_CAP}")
    q = fresh_label(b.labels, "q") if q_label is None else q_label
    if q in b.labels:
        raise ValueError(f"label {q!r} collides with an existing element")
    cands = []
    for vec in range(1 << r):
        m = gf2.append_column(b.matrix, [(vec >> i) & 1 for i in range(r)])
        cands.append(_matroid.from_matrix(m, b.labels + (q,)))
    return _dedup_sorted(cands)


def coextensions(
    b: BinaryMatroid,
    y_label: Optional[str] = None,
    forbid_2_cocircuit: bool = False,
    forbid_coloop: bool = False,
    max_loops: Optional[int] = None,
) -> list[BinaryMatroid]:
    """Single-element binary coextensions N (N/y isomorphic to b).

    Computed as duals of extensions of the dual.  Filters mirror the
    coextension restrictions used in the minimality arguments: drop
    results with a 2-cocircuit, with y a coloop (coextension by a
    cocircuit), or with more than ``max_loops`` loops.  All filters are
    off by default.
    """
    if b.size > COEXTENSION_SIZE_CAP:
        raise ValueError(f"coextension enumeration capped at {COEXTENSION_SIZE_CAP} elements")
    y = fresh_label(b.labels, "y") if y_label is None else y_label
    if y in b.labels:
        raise ValueError(f"label {y!r} collides with an existing element")
    d = _matroid.dual(b)
    out = []
    for ext in extensions(d, y):
        n = _matroid.dual(ext)
        if forbid_2_cocircuit and _matroid.has_2_cocircuit(n):
            continue
        if forbid_coloop and y in _matroid.coloops(n):
            continue
        if max_loops is not None and len(_matroid.loops(n)) > max_loops:
            continue
        out.append(n)
    return _dedup_sorted(out)


def quotients(b: BinaryMatroid, q_label: Optional[str] = None) -> list[BinaryMatroid]:
    """Quotients Z/q over all single-element extensions Z of b (pre-dedup)."""
    r = b.rank
    if r > EXTENSION_RANK_CAP:
        raise ValueError(f"quotient enumeration capped at rank {EXTENSION_RANK_CAP}")
    q = fresh_label(b.labels, "q") if q_label is None else q_label
    if q in b.labels:
        raise ValueError(f"label {q!r} collides with an existing element")
    cands = []
    for vec in range(1 << r):
        m = gf2.append_column(b.matrix, [(vec >> i) & 1 for i in range(r)])
        z = _matroid.from_matrix(m, b.labels + (q,))
        cands.append(_matroid.contract(z, {q}))
    return _dedup_sorted(cands)
