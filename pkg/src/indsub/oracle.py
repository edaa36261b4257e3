"""Brute-force ground truth: subset enumeration, labeled-graph census, isomorphism test."""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterator, Optional

from .combinatorics import BigCount, binomial
from .errors import BudgetExceeded, GraphKindMismatch
from .graph import DirectedGraph, Graph, UndirectedGraph, induced_subdigraph, induced_subgraph, pair_index
from .recognition import PropertySpec, evaluate_property

DEFAULT_SUBSET_BUDGET = 10**8
MAX_CENSUS_PAIRS = 28


def iter_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All ``k``-subsets of ``range(n)`` exactly once, in lexicographic order."""
    return combinations(range(n), k)


def brute_count(
    G: Graph,
    k: int,
    spec: PropertySpec,
    budget: int = DEFAULT_SUBSET_BUDGET,
    first: Optional[int] = None,
) -> BigCount:
    """Evaluate ``spec`` on every induced ``k``-vertex subgraph of ``G`` and count the hits.

    ``first`` restricts to subsets whose smallest vertex is ``first``; summing
    over all ``first`` reproduces the full count (sharding hook).
    """
    if k <= 0:
        raise ValueError(f"slice size k must be positive, got {k}")
    if spec.directed != isinstance(G, DirectedGraph):
        raise GraphKindMismatch(f"property {spec.label} does not match {type(G).__name__}")
    total_subsets = binomial(G.n, k)
    if total_subsets > budget:
        raise BudgetExceeded(f"C({G.n}, {k}) = {total_subsets} subsets exceeds budget {budget}")
    restrict = induced_subdigraph if spec.directed else induced_subgraph
    count = 0
    for X in iter_subsets(G.n, k):
        if first is not None and X[0] != first:
            continue
        if evaluate_property(spec, restrict(G, X)):
            count += 1
    return count


def enumerate_labeled_graphs(k: int, max_pairs: int = MAX_CENSUS_PAIRS) -> Iterator[UndirectedGraph]:
    """All ``2^C(k,2)`` labeled graphs on ``k`` vertices, ordered by edge mask."""
    pairs = pair_index(k)
    if len(pairs) > max_pairs:
        raise BudgetExceeded(f"C({k}, 2) = {len(pairs)} vertex pairs exceeds census budget {max_pairs}")
    for mask in range(1 << len(pairs)):
        yield UndirectedGraph.from_edge_mask(k, mask)


def are_isomorphic(G: UndirectedGraph, H: UndirectedGraph, max_n: int = 10) -> bool:
    """Permutation search restricted to degree-preserving bijections."""
    if G.n != H.n or G.num_edges != H.num_edges:
        return False
    n = G.n
    if n > max_n:
        raise BudgetExceeded(f"isomorphism search limited to {max_n} vertices, got {n}")
    dg = [G.degree(v) for v in range(n)]
    dh = [H.degree(v) for v in range(n)]
    if sorted(dg) != sorted(dh):
        return False
    gedges = G.edges()
    order = sorted(range(n), key=lambda v: -dg[v])
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return all(H.has_edge(image[u], image[v]) for u, v in gedges)
        v = order[i]
        for w in range(n):
            if used[w] or dh[w] != dg[v]:
                continue
            # adjacency to already-mapped vertices must be preserved both ways
            if any(G.has_edge(v, order[j]) != H.has_edge(w, image[order[j]]) for j in range(i)):
                continue
            image[v], used[w] = w, True
            if extend(i + 1):
                return True
            image[v], used[w] = -1, False
        return False

    return extend(0)


def brute_isomorphic(G: UndirectedGraph, H: UndirectedGraph) -> bool:
    """Unpruned check over all ``n!`` bijections; test-only reference for :func:`are_isomorphic`."""
    if G.n != H.n:
        return False
    target = set(H.edges())
    for perm in permutations(range(G.n)):
        if {tuple(sorted((perm[u], perm[v]))) for u, v in G.edges()} == target:
            return True
    return False
