"""Multigraphs, their cycle matroids, and small-graph enumeration.

Loops and parallel edges are allowed throughout.  The enumerator
generates connected multigraphs by edge-multiset over vertex pairs with
a canonical-representative check, which is easy to audit at these sizes
(caps: 6 vertices, 9 edges).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Optional

from . import matroid as _matroid
from .gf2 import BitMatrix

MAX_ENUM_VERTICES = 6
MAX_ENUM_EDGES = 9


@dataclass(frozen=True)
class Multigraph:
    """Vertices 0..vertex_count-1 plus labeled edges; u == v is a loop."""

    vertex_count: int
    edges: tuple[tuple[int, int, str], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("negative vertex count")
        seen = set()
        for u, v, lab in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u},{v},{lab!r}) endpoint out of range")
            if not lab:
                raise ValueError("empty edge label")
            if lab in seen:
                raise ValueError(f"duplicate edge label {lab!r}")
            seen.add(lab)

    def edge_labels(self) -> tuple[str, ...]:
        return tuple(lab for _, _, lab in self.edges)

    def is_connected(self) -> bool:
        n = self.vertex_count
        if n <= 1:
            return True
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        return len({find(x) for x in range(n)}) == 1


def graphic_matroid(g: Multigraph) -> _matroid.BinaryMatroid:
    """Cycle matroid via the vertex-edge incidence matrix over GF(2).

    Loops give zero columns; rank is vertex_count minus the number of
    connected components.
    """
    rows = []
    for v in range(g.vertex_count):
        row = 0
        for j, (a, b, _) in enumerate(g.edges):
            if (a == v) != (b == v):  # loops cancel mod 2
                row |= 1 << j
        rows.append(row)
    m = BitMatrix(tuple(rows), len(g.edges))
    return _matroid.from_matrix(m, g.edge_labels())


def _slots(nv: int) -> list[tuple[int, int]]:
    out = [(i, i) for i in range(nv)]
    out.extend((i, j) for i in range(nv) for j in range(i + 1, nv))
    return out


def _counts_canonical(counts: tuple[int, ...], nv: int, slots: list[tuple[int, int]]) -> bool:
    """True iff this edge-multiset is lex-minimal over vertex relabelings."""
    slot_index = {s: k for k, s in enumerate(slots)}
    for perm in permutations(range(nv)):
        image = [0] * len(slots)
        for k, (i, j) in enumerate(slots):
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            image[slot_index[(a, b)]] = counts[k]
        if tuple(image) < counts:
            return False
    return True


def _materialize(nv: int, slots: list[tuple[int, int]], counts: tuple[int, ...]) -> Multigraph:
    edges = []
    k = 0
    for (i, j), c in zip(slots, counts):
        for _ in range(c):
            edges.append((i, j, f"e{k}"))
            k += 1
    return Multigraph(nv, tuple(edges))


def enumerate_connected_multigraphs(
    max_vertices: int,
    max_edges: int,
    max_loops_per_vertex: Optional[int] = None,
    max_multiplicity: Optional[int] = None,
    dedup: str = "matroid",
) -> Iterator[Multigraph]:
    """All connected multigraphs within the bounds, smallest vertex count first.

    dedup: "none" (all labeled-slot representatives), "graph" (one per
    graph-isomorphism class), or "matroid" (one per cycle-matroid class).
    """
    if max_vertices > MAX_ENUM_VERTICES:
        raise ValueError(f"enumeration capped at {MAX_ENUM_VERTICES} vertices")
    if max_edges > MAX_ENUM_EDGES:
        raise ValueError(f"enumeration capped at {MAX_ENUM_EDGES} edges")
    if dedup not in ("none", "graph", "matroid"):
        raise ValueError(f"unknown dedup mode {dedup!r}")

    seen_matroids: set[bytes] = set()
    for nv in range(1, max_vertices + 1):
        slots = _slots(nv)
        n_slots = len(slots)
        min_edges = max(0, nv - 1)

        def gen(k: int, left: int, counts: list[int]) -> Iterator[tuple[int, ...]]:
            if k == n_slots:
                yield tuple(counts)
                return
            i, j = slots[k]
            cap = left
            if i == j and max_loops_per_vertex is not None:
                cap = min(cap, max_loops_per_vertex)
            if i != j and max_multiplicity is not None:
                cap = min(cap, max_multiplicity)
            for c in range(cap + 1):
                counts.append(c)
                yield from gen(k + 1, left - c, counts)
                counts.pop()

        for counts in gen(0, max_edges, []):
            total = sum(counts)
            if total < min_edges:
                continue
            g = _materialize(nv, slots, counts)
            if not g.is_connected():
                continue
            if dedup == "none":
                yield g
                continue
            if not _counts_canonical(counts, nv, slots):
                continue
            if dedup == "graph":
                yield g
                continue
            key = _matroid.canonical_form(graphic_matroid(g))
            if key in seen_matroids:
                continue
            seen_matroids.add(key)
            yield g
