"""Immutable simple graphs on dense vertex sets ``0..n-1``.

Both graph types keep per-vertex neighbor sets and, alongside them,
one integer bitmask per vertex (bit ``u`` of ``rows[v]`` is set iff
``v -> u`` / ``v ~ u``). The counting loops work on the bitmasks; the
sets are there for readable code and for the public ``adjacency``
field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ParameterError

Edge = tuple[int, int]


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def pair_index(k: int) -> list[Edge]:
    """Vertex pairs of ``K_k`` in lexicographic order; pair ``i`` is bit ``i`` of an edge mask."""
    return list(combinations(range(k), 2))


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    adjacency: tuple[frozenset[int], ...]
    rows: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.adjacency) != self.n:
            raise ParameterError("adjacency must have one entry per vertex")
        adjacency = tuple(frozenset(nb) for nb in self.adjacency)
        for v, nb in enumerate(adjacency):
            for u in nb:
                if not 0 <= u < self.n:
                    raise ParameterError(f"neighbor {u} of vertex {v} out of range")
                if u == v:
                    raise ParameterError(f"self-loop at vertex {v}")
                if v not in adjacency[u]:
                    raise ParameterError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "rows", tuple(_mask(nb) for nb in adjacency))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> UndirectedGraph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj))

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> UndirectedGraph:
        return cls(len(rows), tuple(frozenset(bits(r)) for r in rows))

    @classmethod
    def from_edge_mask(cls, k: int, mask: int) -> UndirectedGraph:
        """Labeled ``k``-vertex graph whose edges are the set bits of ``mask`` (see :func:`pair_index`)."""
        return cls.from_edges(k, (e for i, e in enumerate(pair_index(k)) if mask >> i & 1))

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edge_mask(self) -> int:
        """Inverse of :meth:`from_edge_mask`."""
        index = {e: i for i, e in enumerate(pair_index(self.n))}
        return _mask(index[e] for e in self.edges())

    def permute(self, perm: Sequence[int]) -> UndirectedGraph:
        """Relabel vertex ``v`` as ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ParameterError("perm must be a permutation of range(n)")
        return UndirectedGraph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def add_edges(self, edges: Iterable[Edge]) -> UndirectedGraph:
        return UndirectedGraph.from_edges(self.n, [*self.edges(), *edges])

    def __str__(self) -> str:
        return f"UndirectedGraph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class DirectedGraph:
    n: int
    out_adjacency: tuple[frozenset[int], ...]
    in_rows: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.out_adjacency) != self.n:
            raise ParameterError("out_adjacency must have one entry per vertex")
        out = tuple(frozenset(nb) for nb in self.out_adjacency)
        in_rows = [0] * self.n
        for u, nb in enumerate(out):
            for v in nb:
                if not 0 <= v < self.n:
                    raise ParameterError(f"successor {v} of vertex {u} out of range")
                if u == v:
                    raise ParameterError(f"self-loop at vertex {u}")
                if u in out[v]:
                    raise ParameterError(f"antiparallel pair between {u} and {v}")
                in_rows[v] |= 1 << u
        object.__setattr__(self, "out_adjacency", out)
        object.__setattr__(self, "in_rows", tuple(in_rows))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> DirectedGraph:
        out: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            out[u].add(v)
        return cls(n, tuple(frozenset(a) for a in out))

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in sorted(self.out_adjacency[u])]

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.out_adjacency)

    def in_degree(self, v: int) -> int:
        return self.in_rows[v].bit_count()

    def in_degrees(self) -> list[int]:
        deg = [0] * self.n
        for nb in self.out_adjacency:
            for v in nb:
                deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.out_adjacency[u]

    def permute(self, perm: Sequence[int]) -> DirectedGraph:
        if sorted(perm) != list(range(self.n)):
            raise ParameterError("perm must be a permutation of range(n)")
        return DirectedGraph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __str__(self) -> str:
        return f"DirectedGraph(n={self.n}, edges={self.edges()})"


Graph = UndirectedGraph | DirectedGraph


def _check_subset(n: int, X: Iterable[int]) -> list[int]:
    xs = sorted(set(X))
    if xs and not (0 <= xs[0] and xs[-1] < n):
        raise ParameterError(f"vertex subset {xs} not contained in range({n})")
    return xs


def induced_subgraph(G: UndirectedGraph, X: Iterable[int]) -> UndirectedGraph:
    """``G[X]`` relabeled ``0..|X|-1`` in ascending order of the original labels."""
    xs = _check_subset(G.n, X)
    pos = {v: i for i, v in enumerate(xs)}
    adj = tuple(frozenset(pos[u] for u in G.adjacency[v] if u in pos) for v in xs)
    return UndirectedGraph(len(xs), adj)


def induced_subdigraph(D: DirectedGraph, X: Iterable[int]) -> DirectedGraph:
    xs = _check_subset(D.n, X)
    pos = {v: i for i, v in enumerate(xs)}
    out = tuple(frozenset(pos[u] for u in D.out_adjacency[v] if u in pos) for v in xs)
    return DirectedGraph(len(xs), out)


def edge_subgraph(G: UndirectedGraph, S: Iterable[Edge]) -> UndirectedGraph:
    """Spanning subgraph of ``G`` on all of ``V(G)`` with edge set exactly ``S``."""
    S = list(S)
    for u, v in S:
        if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
            raise ParameterError(f"({u}, {v}) is not an edge of the host graph")
    return UndirectedGraph.from_edges(G.n, S)
