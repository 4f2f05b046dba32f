"""Text formats for matroids and multigraphs.

Matroid format::

    r n
    label_1 ... label_n
    <r rows of n characters from {0,1}>

Graph format::

    V E
    <E lines "u v label", 0-based vertex indices; loops as "u u label">

Lines starting with ``#`` and blank lines are ignored on input.  Parsers
raise :class:`FormatError` with a 1-based line number on malformed input.
Serialized matroids are always in normalized (RREF) form, so
parse/serialize round-trips are byte-stable.
"""

from __future__ import annotations

from . import matroid as _matroid
from .gf2 import BitMatrix
from .graphs import Multigraph


class FormatError(ValueError):
    """Malformed matroid/graph text; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((i, line))
    return out


def parse_matroid(text: str) -> _matroid.BinaryMatroid:
    lines = _content_lines(text)
    if not lines:
        raise FormatError(1, "empty matroid text")
    ln, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise FormatError(ln, f"expected 'r n' header, got {header!r}")
    try:
        r, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(ln, f"non-integer dimensions in {header!r}") from None
    if r < 0 or n < 0:
        raise FormatError(ln, "negative dimensions")

    if n == 0:
        labels: list[str] = []
        body_start = 1
    else:
        if len(lines) < 2:
            raise FormatError(ln, "missing label line")
        lln, label_line = lines[1]
        labels = label_line.split()
        if len(labels) != n:
            raise FormatError(lln, f"expected {n} labels, got {len(labels)}")
        body_start = 2

    rows = []
    row_lines = lines[body_start:]
    if len(row_lines) != r:
        where = row_lines[-1][0] if row_lines else lines[-1][0]
        raise FormatError(where, f"expected {r} matrix rows, got {len(row_lines)}")
    for ln2, line in row_lines:
        if len(line) != n:
            raise FormatError(ln2, f"row has {len(line)} characters, expected {n}")
        val = 0
        for j, ch in enumerate(line):
            if ch == "1":
                val |= 1 << j
            elif ch != "0":
                raise FormatError(ln2, f"invalid character {ch!r} in matrix row")
        rows.append(val)
    try:
        return _matroid.from_matrix(BitMatrix(tuple(rows), n), labels)
    except ValueError as exc:
        raise FormatError(ln, str(exc)) from None


def serialize_matroid(b: _matroid.BinaryMatroid) -> str:
    lines = [f"{b.rank} {b.size}", " ".join(b.labels)]
    lines.extend(b.matrix.row_strings())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Multigraph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError(1, "empty graph text")
    ln, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise FormatError(ln, f"expected 'V E' header, got {header!r}")
    try:
        nv, ne = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(ln, f"non-integer dimensions in {header!r}") from None
    if nv < 0 or ne < 0:
        raise FormatError(ln, "negative dimensions")
    edge_lines = lines[1:]
    if len(edge_lines) != ne:
        where = edge_lines[-1][0] if edge_lines else ln
        raise FormatError(where, f"expected {ne} edge lines, got {len(edge_lines)}")
    edges = []
    for ln2, line in edge_lines:
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(ln2, f"expected 'u v label', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(ln2, f"non-integer endpoints in {line!r}") from None
        if not (0 <= u < nv and 0 <= v < nv):
            raise FormatError(ln2, f"endpoint out of range in {line!r}")
        edges.append((u, v, parts[2]))
    try:
        return Multigraph(nv, tuple(edges))
    except ValueError as exc:
        raise FormatError(ln, str(exc)) from None


def serialize_graph(g: Multigraph) -> str:
    lines = [f"{g.vertex_count} {len(g.edges)}"]
    lines.extend(f"{u} {v} {lab}" for u, v, lab in g.edges)
    return "\n".join(lines) + "\n"
