"""Named matroids and graphs used throughout the verification claims.

Constructions are fixed multigraphs or matrices; where a source drawing
is ambiguous the representative is pinned by its defining properties
(validated in the test suite, with cheap fingerprint checks at build
time).  Distinguished element roles (x, y, z, e) are resolved by
lexicographic search for the first assignment satisfying the entry's
defining property; failure to resolve is a construction bug and raises.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from . import matroid as _matroid
from . import splitting as _splitting
from .gf2 import BitMatrix
from .graphs import Multigraph, graphic_matroid
from .minors import CircuitTarget


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    matroid: Optional[_matroid.BinaryMatroid]
    graph: Optional[Multigraph]
    target: Optional[CircuitTarget]
    note: str
    # expected (size, rank, loop count, parallel profile) checked at build
    expect: tuple[int, int, int, tuple[int, ...]] = field(default=(0, 0, 0, ()))


def _graph(vc: int, *edges: tuple[int, int, str]) -> Multigraph:
    return Multigraph(vc, tuple(edges))


def _k4_graph() -> Multigraph:
    return _graph(
        4,
        (0, 1, "a"), (0, 2, "b"), (0, 3, "c"),
        (1, 2, "d"), (1, 3, "e"), (2, 3, "f"),
    )


def _q2_graph(loop_vertex: int) -> Multigraph:
    return _graph(
        3,
        (0, 1, "l1"), (0, 1, "l2"),
        (0, 2, "r1"), (0, 2, "r2"),
        (1, 2, "b"),
        (loop_vertex, loop_vertex, "loop"),
    )


def _doubled_triangle() -> Multigraph:
    return _graph(
        3,
        (0, 1, "x"), (1, 2, "y"), (0, 2, "z"),
        (0, 1, "x2"), (1, 2, "y2"), (0, 2, "z2"),
    )


def _entry_specs() -> list[CatalogEntry]:
    k4g = _k4_graph()
    entries: list[CatalogEntry] = []

    def add(name: str, graph: Multigraph, note: str, expect) -> None:
        entries.append(
            CatalogEntry(name, graphic_matroid(graph), graph, None, note, expect)
        )

    add("K4", k4g, "complete graph on four vertices", (6, 3, 0, (1,) * 6))
    add("Q1", k4g, "quotient representative: the complete graph itself", (6, 3, 0, (1,) * 6))
    add("Q2", _q2_graph(0), "triangle with two doubled sides plus a loop", (6, 2, 1, (2, 2, 1)))
    add("Q3", _q2_graph(2), "same sides as Q2 with the loop moved", (6, 2, 1, (2, 2, 1)))
    add("Q4", _doubled_triangle(), "triangle with every side doubled", (6, 2, 0, (2, 2, 2)))

    add(
        "G1",
        _graph(4, (0, 1, "b"), (1, 2, "r"), (2, 3, "t"), (3, 0, "l"),
               (0, 2, "d"), (3, 0, "x"), (0, 1, "y")),
        "4-cycle plus a diagonal, with two adjacent sides doubled",
        (7, 3, 0, (2, 2, 1, 1, 1)),
    )
    add(
        "G2",
        _graph(4, (0, 1, "a"), (0, 2, "b"), (0, 3, "c"),
               (1, 2, "d"), (1, 3, "e"), (2, 3, "f"), (0, 0, "g")),
        "complete graph on four vertices plus one loop",
        (7, 3, 1, (1,) * 6),
    )
    add("G3", k4g, "alias construction: complete graph on four vertices", (6, 3, 0, (1,) * 6))
    add("G4", _q2_graph(0), "same construction as Q2", (6, 2, 1, (2, 2, 1)))
    add("G5", _q2_graph(2), "same construction as Q3", (6, 2, 1, (2, 2, 1)))
    add("G6", _doubled_triangle(), "same construction as Q4", (6, 2, 0, (2, 2, 2)))
    add(
        "G7",
        _graph(3, (0, 1, "x"), (0, 1, "x2"), (0, 2, "y"), (0, 2, "y2"), (1, 2, "b")),
        "triangle with two doubled sides",
        (5, 2, 0, (2, 2, 1)),
    )
    add(
        "G8",
        _graph(3, (0, 1, "a"), (0, 2, "b"), (1, 2, "c1"), (1, 2, "c2")),
        "triangle with one doubled side",
        (4, 2, 0, (2, 1, 1)),
    )

    add(
        "W1",
        _graph(4, (0, 1, "b1"), (0, 1, "b2"), (1, 2, "r"), (2, 3, "t"),
               (3, 0, "l1"), (3, 0, "l2"), (0, 2, "d")),
        "coextension of Q2; same matroid as G1",
        (7, 3, 0, (2, 2, 1, 1, 1)),
    )
    add(
        "W2",
        _graph(4, (0, 1, "b1"), (0, 1, "b2"), (1, 2, "r"), (2, 3, "t1"),
               (2, 3, "t2"), (3, 0, "l1"), (3, 0, "l2")),
        "coextension of Q2: 4-cycle with three doubled sides",
        (7, 3, 0, (2, 2, 2, 1)),
    )
    add(
        "W3",
        _graph(4, (0, 1, "b1"), (0, 1, "b2"), (1, 2, "r"), (2, 3, "t1"),
               (2, 3, "t2"), (3, 0, "l"), (3, 3, "loop")),
        "coextension of Q2: 4-cycle with two opposite doubled sides plus a loop"
        " (carries a 2-cocircuit)",
        (7, 3, 1, (2, 2, 1, 1)),
    )

    add(
        "V1",
        _graph(5, (0, 1, "b1"), (4, 1, "b2"), (1, 2, "r"), (2, 3, "t1"),
               (2, 3, "t2"), (3, 0, "l1"), (3, 4, "l2"), (0, 4, "y")),
        "coextension of W2 obtained by splitting a degree-4 vertex",
        (8, 4, 0, (2, 1, 1, 1, 1, 1, 1)),
    )
    add(
        "V2",
        _graph(5, (0, 1, "b"), (1, 2, "r"), (2, 3, "t"), (3, 0, "l1"),
               (3, 0, "l2"), (3, 4, "p1"), (4, 2, "p2"), (4, 1, "p3")),
        "coextension of W2: 4-cycle with a doubled side and an apex vertex",
        (8, 4, 0, (2, 1, 1, 1, 1, 1, 1)),
    )
    add(
        "V3",
        _graph(5, (0, 1, "b1"), (0, 1, "b2"), (1, 2, "r"), (2, 3, "t"),
               (3, 0, "l"), (3, 4, "p1"), (3, 4, "p2"), (4, 2, "p3")),
        "coextension of W3: 4-cycle with doubled side, doubled apex edge",
        (8, 4, 0, (2, 2, 1, 1, 1, 1)),
    )

    f7 = _matroid.from_matrix(
        BitMatrix.from_lists(
            [
                [1, 0, 0, 1, 1, 0, 1],
                [0, 1, 0, 1, 0, 1, 1],
                [0, 0, 1, 0, 1, 1, 1],
            ]
        ),
        [f"e{i}" for i in range(1, 8)],
    )
    entries.append(
        CatalogEntry("F7", f7, None, None,
                     "all seven nonzero GF(2)^3 columns", (7, 3, 0, (1,) * 7))
    )
    entries.append(
        CatalogEntry("F7*", _matroid.dual(f7), None, None,
                     "dual of F7", (7, 4, 0, (1,) * 7))
    )

    k5 = _graph(5, *[(i, j, f"e{i}{j}") for i in range(5) for j in range(i + 1, 5)])
    entries.append(
        CatalogEntry("M*(K5)", _matroid.dual(graphic_matroid(k5)), k5, None,
                     "bond matroid of the complete graph on five vertices",
                     (10, 6, 0, (1,) * 10))
    )
    k33 = _graph(6, *[(i, 3 + j, f"e{i}{j}") for i in range(3) for j in range(3)])
    entries.append(
        CatalogEntry("M*(K33)", _matroid.dual(graphic_matroid(k33)), k33, None,
                     "bond matroid of the complete bipartite 3x3 graph",
                     (9, 4, 0, (1,) * 9))
    )

    u24 = CircuitTarget(
        name="U24",
        size=4,
        rank=2,
        circuits=frozenset(
            frozenset(c) for c in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
        ),
    )
    entries.append(
        CatalogEntry("U24", None, None, u24,
                     "four-element rank-2 target with every 3-subset a circuit"
                     " (not binary; minor-search target only)",
                     (4, 2, 0, (1, 1, 1, 1)))
    )
    return entries


def _validate(e: CatalogEntry) -> None:
    if e.matroid is None:
        return
    b = e.matroid
    got = (
        b.size,
        b.rank,
        len(_matroid.loops(b)),
        tuple(sorted((len(p) for p in _matroid.parallel_classes(b)), reverse=True)),
    )
    if got != e.expect:
        raise RuntimeError(f"catalog entry {e.name}: fingerprint {got} != expected {e.expect}")


@lru_cache(maxsize=1)
def _entries() -> dict[str, CatalogEntry]:
    out = {}
    for e in _entry_specs():
        _validate(e)
        out[e.name] = e
    return out


def names() -> list[str]:
    return list(_entries().keys())


def entry(name: str) -> CatalogEntry:
    try:
        return _entries()[name]
    except KeyError:
        raise ValueError(f"unknown catalog name {name!r}") from None


def get(name: str) -> _matroid.BinaryMatroid:
    e = entry(name)
    if e.matroid is None:
        raise ValueError(f"catalog entry {name!r} has no binary representation")
    return e.matroid


def get_target(name: str):
    """Matroid or circuit-structure target for minor searches."""
    e = entry(name)
    return e.target if e.target is not None else get(name)


_K4_CACHE: dict[str, _matroid.BinaryMatroid] = {}


def _k4() -> _matroid.BinaryMatroid:
    if "m" not in _K4_CACHE:
        _K4_CACHE["m"] = get("K4")
    return _K4_CACHE["m"]


def _prop_split_contract_x(b, x: str, y: str) -> bool:
    s = _splitting.split(b, {x, y})
    return _matroid.isomorphic(_matroid.contract(s, {x}), _k4()) is not None


def _prop_split_is_k4(b, xs) -> bool:
    return _matroid.isomorphic(_splitting.split(b, xs), _k4()) is not None


def _prop_element_split_is_k4(b, xs) -> bool:
    return _matroid.isomorphic(_splitting.element_split(b, xs), _k4()) is not None


def _prop_es_split_is_k4(b, x: str, y: str) -> bool:
    return _matroid.isomorphic(_splitting.es_split(b, {x, y}, x), _k4()) is not None


@lru_cache(maxsize=None)
def resolve_distinguished(name: str) -> dict[str, str]:
    """First label assignment (lexicographic) satisfying the defining property.

    G1, G2: splitting on {x,y} then contracting x gives M(K4).
    G3-G6:  splitting on {x,y,z} gives M(K4) (G3: leaves it unchanged).
    G7:     element splitting on {x,y} gives M(K4).
    G8:     es-splitting on {x,y} with pivot x gives M(K4).
    """
    import itertools

    e = entry(name)
    if e.matroid is None:
        raise ValueError(f"catalog entry {name!r} has no distinguished labels")
    b = e.matroid
    labs = sorted(b.labels)
    if name in ("G1", "G2"):
        for x, y in itertools.permutations(labs, 2):
            if _prop_split_contract_x(b, x, y):
                return {"x": x, "y": y}
    elif name in ("G3", "G4", "G5", "G6"):
        for xs in itertools.combinations(labs, 3):
            if _prop_split_is_k4(b, set(xs)):
                return {"x": xs[0], "y": xs[1], "z": xs[2]}
    elif name == "G7":
        for xs in itertools.combinations(labs, 2):
            if _prop_element_split_is_k4(b, set(xs)):
                return {"x": xs[0], "y": xs[1]}
    elif name == "G8":
        for x, y in itertools.permutations(labs, 2):
            if _prop_es_split_is_k4(b, x, y):
                return {"x": x, "y": y, "e": x}
    else:
        return {}
    raise ValueError(f"no distinguished assignment satisfies {name!r}'s defining property")
