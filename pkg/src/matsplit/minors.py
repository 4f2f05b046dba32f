"""Exhaustive minor detection with witnesses, and excluded-minor predicates.

``has_minor`` contracts independent sets of the right rank deficit, then
scans keep-sets grouped by parallel class (the minor only depends on how
many elements of each class survive), pruning on loop counts, parallel
profiles and rank before any isomorphism test.  Returned witnesses are
self-contained and re-checkable.

The gammoid / graphic predicates are excluded-minor tests; desk-scale
hosts make exhaustive search affordable and the searcher doubles as the
object under test for the soundness criteria.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Union

from . import matroid as _matroid
from .matroid import BinaryMatroid, IsoCertificate

HOST_CAP = 14


@dataclass(frozen=True)
class CircuitTarget:
    """A minor target given by its circuit structure (for non-binary targets).

    ``circuits`` are index sets over 0..size-1.
    """

    name: str
    size: int
    rank: int
    circuits: frozenset[frozenset[int]]

    def parallel_pair_count(self) -> int:
        return sum(1 for c in self.circuits if len(c) == 2)

    def loop_count(self) -> int:
        return sum(1 for c in self.circuits if len(c) == 1)


MinorTarget = Union[BinaryMatroid, CircuitTarget]


@dataclass(frozen=True)
class MinorWitness:
    """Delete-set, contract-set and mapping certifying a minor."""

    deleted: frozenset[str]
    contracted: frozenset[str]
    mapping: dict[str, str]  # minor label -> target label (indices as str for CircuitTarget)


def witness_valid(b: BinaryMatroid, target: MinorTarget, w: MinorWitness) -> bool:
    """Recompute b \\ deleted / contracted and re-check the mapping."""
    if w.deleted & w.contracted:
        return False
    if not (w.deleted | w.contracted) <= b.ground_set():
        return False
    minor = _matroid.delete(_matroid.contract(b, w.contracted), w.deleted)
    if isinstance(target, CircuitTarget):
        if minor.size != target.size:
            return False
        if set(w.mapping) != set(minor.labels):
            return False
        if set(w.mapping.values()) != {str(i) for i in range(target.size)}:
            return False
        image = {
            frozenset(int(w.mapping[lab]) for lab in c)
            for c in _matroid.circuits(minor)
        }
        return image == target.circuits
    cert = IsoCertificate(w.mapping)
    return _matroid.certificate_valid(cert, minor, target)


def _target_stats(target: MinorTarget) -> tuple[int, int, int, tuple[int, ...]]:
    """(size, rank, loop count, sorted parallel profile)."""
    if isinstance(target, CircuitTarget):
        n, r = target.size, target.rank
        nloops = target.loop_count()
        npairs = target.parallel_pair_count()
        # parallel pairs only (larger classes would show as multiple 2-circuits)
        classes = [1] * (n - nloops)
        pair_members = {e for c in target.circuits if len(c) == 2 for e in c}
        groups: dict[int, set[int]] = {}
        for c in target.circuits:
            if len(c) == 2:
                a, bb = sorted(c)
                groups.setdefault(a, {a}).add(bb)
        if groups:
            merged: list[set[int]] = []
            for s in groups.values():
                for m in merged:
                    if m & s:
                        m |= s
                        break
                else:
                    merged.append(set(s))
            profile = sorted(
                [len(m) for m in merged]
                + [1] * (n - nloops - len(pair_members)),
                reverse=True,
            )
        else:
            profile = sorted(classes, reverse=True)
        return n, r, nloops, tuple(profile)
    cols = target.cols()
    nloops = sum(1 for c in cols if c == 0)
    mult: dict[int, int] = {}
    for c in cols:
        if c:
            mult[c] = mult.get(c, 0) + 1
    return target.size, target.rank, nloops, tuple(sorted(mult.values(), reverse=True))


def _match_circuit_target(minor: BinaryMatroid, target: CircuitTarget) -> Optional[dict[str, str]]:
    if minor.size != target.size or minor.rank != target.rank:
        return None
    mcirc = [frozenset(minor.index_of(l) for l in c) for c in _matroid.circuits(minor)]
    if len(mcirc) != len(target.circuits):
        return None
    wanted = target.circuits
    for perm in itertools.permutations(range(target.size)):
        if all(frozenset(perm[i] for i in c) in wanted for c in mcirc):
            return {minor.labels[i]: str(perm[i]) for i in range(minor.size)}
    return None


def _independent_sets_of_size(b: BinaryMatroid, k: int):
    """Index tuples of independent k-subsets, lexicographic."""
    tab = b.subset_rank_table()
    n = b.size
    for combo in itertools.combinations(range(n), k):
        mask = 0
        for i in combo:
            mask |= 1 << i
        if tab[mask] == k:
            yield combo, mask


def has_minor(b: BinaryMatroid, target: MinorTarget) -> Optional[MinorWitness]:
    """First minor witness under the fixed search order, or None.

    Search: independent contract-sets of size rank(b) - rank(target) in
    lexicographic order; within each contraction, keep-sets enumerated as
    per-parallel-class counts (equal columns are interchangeable).
    """
    if b.size > HOST_CAP:
        raise ValueError(f"minor search capped at {HOST_CAP} host elements")
    nt, rt, t_loops, t_profile = _target_stats(target)
    n, r = b.size, b.rank
    if nt > n or rt > r or (nt - rt) > (n - r):
        return None
    # a binary rank-rt span has only 2^rt - 1 distinct nonzero columns
    if len(t_profile) > (1 << rt) - 1:
        return None

    t_fingerprint = target.fingerprint() if isinstance(target, BinaryMatroid) else None

    for combo, _mask in _independent_sets_of_size(b, r - rt):
        contracted = frozenset(b.labels[i] for i in combo)
        base = _matroid.contract(b, contracted)
        cols = base.cols()
        # group surviving elements by column value, loops under key 0
        groups: dict[int, list[int]] = {}
        for i, c in enumerate(cols):
            groups.setdefault(c, []).append(i)
        loop_avail = len(groups.get(0, ()))
        if loop_avail < t_loops:
            continue
        nz_keys = sorted(k for k in groups if k)
        if len(nz_keys) < len(t_profile):
            continue
        sizes = [len(groups[k]) for k in nz_keys]
        need = nt - t_loops

        # choose how many elements to keep from each nonzero class
        for counts in _class_count_vectors(sizes, need, t_profile):
            keep_idx = list(groups.get(0, ())[:t_loops])
            for k, c in zip(nz_keys, counts):
                keep_idx.extend(groups[k][:c])
            keep_idx.sort()
            keep_labels = [base.labels[i] for i in keep_idx]
            minor = _matroid.restrict_to(base, keep_labels)
            if minor.rank != rt:
                continue
            if isinstance(target, CircuitTarget):
                mapping = _match_circuit_target(minor, target)
                if mapping is None:
                    continue
            else:
                if minor.fingerprint() != t_fingerprint:
                    continue
                cert = _matroid.isomorphic(minor, target)
                if cert is None:
                    continue
                mapping = cert.mapping
            deleted = frozenset(base.ground_set()) - frozenset(keep_labels)
            return MinorWitness(deleted=deleted, contracted=contracted, mapping=mapping)
    return None


def _class_count_vectors(sizes: list[int], need: int, t_profile: tuple[int, ...]):
    """Count vectors over parallel classes whose kept profile matches the target's.

    Yields tuples in lexicographic order (fixed search order).  Each kept
    class must not exceed the largest target class, and the multiset of
    nonzero counts must equal the target profile exactly.
    """
    want = sorted(t_profile, reverse=True)
    m = len(sizes)

    def go(i: int, left: int, acc: list[int]):
        if left == 0:
            yield tuple(acc + [0] * (m - i))
            return
        if i == m:
            return
        if sum(sizes[i:]) < left:
            return
        for c in range(min(sizes[i], left, want[0]) + 1):
            acc.append(c)
            yield from go(i + 1, left - c, acc)
            acc.pop()

    for counts in go(0, need, []):
        got = sorted((c for c in counts if c), reverse=True)
        if got == want:
            yield counts


def binary_gammoid_obstruction(b: BinaryMatroid) -> Optional[tuple[str, MinorWitness]]:
    """An excluded-minor witness (M(K4) or U_{2,4}) if one exists.

    The U_{2,4} search is a soundness tautology for binary inputs and is
    always executed; a hit would mean the searcher itself is broken.
    """
    from .catalog import get, get_target  # local import: catalog builds on minors' siblings

    u_wit = has_minor(b, get_target("U24"))
    if u_wit is not None:
        raise RuntimeError("binary matroid reported a U_{2,4} minor; searcher bug")
    k_wit = has_minor(b, get("K4"))
    if k_wit is not None:
        return ("K4", k_wit)
    return None


def is_binary_gammoid(b: BinaryMatroid) -> bool:
    """No M(K4) minor and no U_{2,4} minor."""
    return binary_gammoid_obstruction(b) is None


GRAPHIC_EXCLUDED = ("F7", "F7*", "M*(K5)", "M*(K33)")


def graphicness_obstruction(b: BinaryMatroid) -> Optional[tuple[str, MinorWitness]]:
    from .catalog import get

    for name in GRAPHIC_EXCLUDED:
        w = has_minor(b, get(name))
        if w is not None:
            return (name, w)
    return None


def is_graphic(b: BinaryMatroid) -> bool:
    """Excluded-minor graphicness test (F7, F7*, M*(K5), M*(K33))."""
    return graphicness_obstruction(b) is None


def is_cographic(b: BinaryMatroid) -> bool:
    return is_graphic(_matroid.dual(b))
