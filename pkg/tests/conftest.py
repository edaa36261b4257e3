"""Shared helpers: deliberately naive reference implementations built on plain
sets and itertools, sharing no code with the package's bitmask routines."""

from __future__ import annotations

from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from indsub.graph import DirectedGraph, UndirectedGraph


def edge_set(H: UndirectedGraph) -> set[frozenset[int]]:
    return {frozenset(e) for e in H.edges()}


def naive_scorpion_tuples(H: UndirectedGraph, ell: int) -> list[tuple[int, ...]]:
    """Every tuple satisfying the three scorpion conditions, over all ordered (ell+2)-tuples."""
    n = H.n
    if n < ell + 4:
        return []
    E = edge_set(H)
    out = []
    for q in permutations(range(n), ell + 2):
        Q = set(q)
        path = {frozenset((q[i], q[i + 1])) for i in range(ell + 1)}
        inside = {e for e in E if e <= Q}
        if inside != path:
            continue
        legs = set(range(n)) - Q
        if not all(frozenset((q[0], x)) in E for x in legs):
            continue
        if any(frozenset((v, x)) in E for v in q[1:] for x in legs):
            continue
        out.append(q)
    return out


def naive_is_fossil(H: UndirectedGraph, ell: int) -> bool:
    n = H.n
    if n < ell + 4:
        return False
    E = edge_set(H)
    for q in permutations(range(n), ell + 2):
        legs = set(range(n)) - set(q)
        if not all(frozenset((q[i], q[i + 1])) in E for i in range(ell + 1)):
            continue
        if not all(frozenset((q[0], x)) in E for x in legs):
            continue
        if any(frozenset(p) in E for p in combinations(legs, 2)):
            continue
        return True
    return False


def naive_vertex_cover(H: UndirectedGraph) -> int:
    E = H.edges()
    for size in range(H.n + 1):
        for C in combinations(range(H.n), size):
            C = set(C)
            if all(u in C or v in C for u, v in E):
                return size
    raise AssertionError("unreachable")


def naive_alt_enum(pred, H: UndirectedGraph) -> int:
    E = H.edges()
    total = 0
    for r in range(len(E) + 1):
        for S in combinations(E, r):
            if pred(UndirectedGraph.from_edges(H.n, S)):
                total += (-1) ** r
    return (-1) ** len(E) * total


def naive_has_sink(D: DirectedGraph) -> bool:
    return any(all(D.has_edge(u, v) for u in range(D.n) if u != v) for v in range(D.n))


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return UndirectedGraph.from_edges(n, [e for e, c in zip(pairs, chosen) if c])


@st.composite
def digraphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    edges = []
    for u, v in combinations(range(n), 2):
        r = draw(st.integers(0, 2))
        if r == 1:
            edges.append((u, v))
        elif r == 2:
            edges.append((v, u))
    return DirectedGraph.from_edges(n, edges)


@pytest.fixture
def path5() -> UndirectedGraph:
    return UndirectedGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
