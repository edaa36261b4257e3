"""Polynomial-time induced-subgraph counters for the sink and ell-scorpion properties.

Both counters partition the counted ``k``-sets by a uniquely recoverable
set of special vertices (the sink; the body/tail/sting tuple) and count
each class with one binomial coefficient.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional

from .combinatorics import BigCount, binomial, binomial_row
from .errors import ParameterError
from .graph import DirectedGraph, UndirectedGraph


def count_sinks_slice(D: DirectedGraph, k: int) -> BigCount:
    """Number of ``k``-sets ``X`` such that ``D[X]`` has a sink.

    Each such set has exactly one sink ``v`` and consists of ``v`` plus
    ``k - 1`` in-neighbors of ``v``, so the answer is
    ``sum_v C(indeg(v), k - 1)``.
    """
    if k <= 0:
        raise ParameterError(f"slice size k must be positive, got {k}")
    return sum(binomial(d, k - 1) for d in D.in_degrees())


def _check_scorpion_params(ell: int, k: int) -> None:
    if ell < 1:
        raise ParameterError(f"ell must be >= 1, got {ell}")
    if k < ell + 4:
        raise ParameterError(f"scorpion slices need k >= ell + 4, got ell={ell}, k={k}")


def _count_from_bodies(rows: tuple[int, ...], ell: int, k: int, bodies: Iterable[int]) -> BigCount:
    n = len(rows)
    table = binomial_row(n, k - ell - 2)
    total = 0
    for b in bodies:
        nb = rows[b]
        # stack frames: (last vertex, blocked mask, union of tail/sting neighborhoods, depth)
        # blocked holds the path so far plus neighbors of all but its last vertex
        for t1 in _iter_bits(nb):
            stack = [(t1, (1 << b) | nb | (1 << t1), rows[t1] | (1 << t1), 1)]
            while stack:
                last, blocked, hood, depth = stack.pop()
                cands = rows[last] & ~blocked
                if depth == ell:
                    # next vertex is the sting
                    base = nb & ~hood & ~(1 << b)
                    while cands:
                        low = cands & -cands
                        cands ^= low
                        s = low.bit_length() - 1
                        total += table[(base & ~rows[s] & ~low).bit_count()]
                    continue
                nblocked = blocked | rows[last]
                while cands:
                    low = cands & -cands
                    cands ^= low
                    w = low.bit_length() - 1
                    stack.append((w, nblocked | low, hood | rows[w] | low, depth + 1))
    return total


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _shard(args: tuple[tuple[int, ...], int, int, list[int]]) -> BigCount:
    return _count_from_bodies(*args)


def count_scorpions(G: UndirectedGraph, ell: int, k: int, workers: Optional[int] = None) -> BigCount:
    """Number of ``k``-vertex induced subgraphs of ``G`` that are ell-scorpions.

    Walks every ordered induced path ``(b, t_1, ..., t_ell, s)`` by
    backtracking from each body ``b``. The legs of a scorpion with that
    anatomy are exactly ``k - ell - 2`` vertices drawn from
    ``N(b)`` minus the tuple and minus the neighborhoods of ``t_1..t_ell, s``,
    so each path contributes ``C(|candidates|, k - ell - 2)``.

    ``workers > 1`` splits the bodies round-robin over a process pool; the
    exact partial sums are added in shard order.
    """
    _check_scorpion_params(ell, k)
    if k > G.n:
        return 0
    rows = G.rows
    if not workers or workers <= 1:
        return _count_from_bodies(rows, ell, k, range(G.n))
    shards = [(rows, ell, k, list(range(i, G.n, workers))) for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_shard, shards))


def count_scorpions_slicewise(G: UndirectedGraph, f: Callable[[int], int], k: int) -> BigCount:
    """Count for the property whose slice ``k`` is the ``f(k)``-scorpions."""
    ell = f(k)
    if not 1 <= ell or 2 * ell > k - 4:
        raise ParameterError(f"f({k}) = {ell} outside [1, (k-4)/2]")
    return count_scorpions(G, ell, k)
