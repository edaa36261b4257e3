"""Structured and seeded-random graph constructors."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Union

from .errors import ParameterError
from .graph import DirectedGraph, UndirectedGraph
from .recognition import ScorpionAnatomy

Probability = Union[float, Fraction, int]


def empty_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph.from_edges(n, [])


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph.from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> UndirectedGraph:
    if n < 3:
        raise ParameterError(f"cycle needs at least 3 vertices, got {n}")
    return UndirectedGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(a: int, b: int) -> UndirectedGraph:
    return UndirectedGraph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def in_star(n: int, center: int = 0) -> DirectedGraph:
    """Every vertex other than ``center`` points to ``center``."""
    return DirectedGraph.from_edges(n, ((v, center) for v in range(n) if v != center))


def gen_skeleton(ell: int, k: int) -> tuple[UndirectedGraph, ScorpionAnatomy]:
    """The ``k``-vertex ell-scorpion with independent legs.

    Layout: body ``0``, tail ``1..ell``, sting ``ell+1``, legs ``ell+2..k-1``.
    """
    if ell < 1:
        raise ParameterError(f"ell must be >= 1, got {ell}")
    if k < ell + 4:
        raise ParameterError(f"skeleton needs k >= ell + 4, got ell={ell}, k={k}")
    path = [(i, i + 1) for i in range(ell + 1)]
    legs = list(range(ell + 2, k))
    G = UndirectedGraph.from_edges(k, path + [(0, v) for v in legs])
    return G, ScorpionAnatomy(0, tuple(range(1, ell + 1)), ell + 1, tuple(legs))


def gen_augmented_biclique(a: int, b: int) -> UndirectedGraph:
    """``K_{a,b}`` with the left side (vertices ``0..a-1``) turned into a clique."""
    if a < 1 or b < 1:
        raise ParameterError(f"augmented biclique needs a, b >= 1, got a={a}, b={b}")
    edges = list(combinations(range(a), 2))
    edges += [(i, a + j) for i in range(a) for j in range(b)]
    return UndirectedGraph.from_edges(a + b, edges)


def _check_p(p: Probability) -> float:
    if not 0 <= p <= 1:
        raise ParameterError(f"edge probability must lie in [0, 1], got {p}")
    return p


def random_graph(n: int, p: Probability, seed: int) -> UndirectedGraph:
    """G(n, p): pairs visited in lexicographic order, one uniform draw each."""
    if n < 0:
        raise ParameterError(f"n must be nonnegative, got {n}")
    _check_p(p)
    rng = random.Random(seed)
    return UndirectedGraph.from_edges(n, (e for e in combinations(range(n), 2) if rng.random() < p))


def random_orientation(n: int, seed: int) -> DirectedGraph:
    """Each pair independently absent, ``u -> v`` or ``v -> u`` with probability 1/3 each."""
    if n < 0:
        raise ParameterError(f"n must be nonnegative, got {n}")
    rng = random.Random(seed)
    edges = []
    for u, v in combinations(range(n), 2):
        r = rng.randrange(3)
        if r == 1:
            edges.append((u, v))
        elif r == 2:
            edges.append((v, u))
    return DirectedGraph.from_edges(n, edges)


def random_permutation(n: int, seed: int) -> list[int]:
    perm = list(range(n))
    random.Random(seed).shuffle(perm)
    return perm
