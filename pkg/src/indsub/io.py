"""Edge-list text format.

First non-comment line is ``n m``; then ``m`` lines ``u v``. Lines whose
first non-blank character is ``#`` are ignored, as are blank lines.
Directed files use the same syntax with ``u -> v``.
"""

from __future__ import annotations

from typing import Union

from .errors import GraphFormatError
from .graph import DirectedGraph, Graph, UndirectedGraph


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(fields: list[str], lineno: int, what: str) -> tuple[int, int]:
    if len(fields) != 2:
        raise GraphFormatError(f"expected two integers for {what}, got {len(fields)} fields", lineno)
    try:
        a, b = int(fields[0]), int(fields[1])
    except ValueError:
        raise GraphFormatError(f"non-integer {what}: {' '.join(fields)!r}", lineno) from None
    return a, b


def parse_graph(text: Union[str, bytes], directed: bool = False, strict: bool = False) -> Graph:
    """Parse edge-list text.

    Duplicate undirected edges (``u v`` twice, or ``u v`` and ``v u``) are
    merged unless ``strict`` is set. Directed duplicates are always merged
    under ``strict=False``; an antiparallel pair is an error in any mode.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"non-ASCII input: {exc}") from None
    records = _records(text)
    try:
        lineno, header = next(records)
    except StopIteration:
        raise GraphFormatError("missing header line 'n m'") from None
    n, m = _ints(header, lineno, "header")
    if n < 0 or m < 0:
        raise GraphFormatError(f"negative header values n={n} m={m}", lineno)

    seen: dict[tuple[int, int], int] = {}
    count = 0
    for lineno, fields in records:
        count += 1
        if count > m:
            raise GraphFormatError(f"more than the declared {m} edges", lineno)
        u, v = _ints(fields, lineno, "edge")
        for w in (u, v):
            if not 0 <= w < n:
                raise GraphFormatError(f"endpoint {w} out of range [0, {n})", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            if strict:
                raise GraphFormatError(f"duplicate edge {u} {v} (first on line {seen[key]})", lineno)
            continue
        if directed and (v, u) in seen:
            raise GraphFormatError(f"antiparallel pair {u} {v} (reverse on line {seen[(v, u)]})", lineno)
        seen[key] = lineno
    if count < m:
        raise GraphFormatError(f"declared {m} edges but found {count}")

    if directed:
        return DirectedGraph.from_edges(n, seen)
    return UndirectedGraph.from_edges(n, seen)


def serialize_graph(G: Graph) -> str:
    """Inverse of :func:`parse_graph`; edges sorted lexicographically."""
    edges = sorted(G.edges())
    lines = [f"{G.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read_graph(path: str, directed: bool = False, strict: bool = False) -> Graph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read(), directed=directed, strict=strict)
