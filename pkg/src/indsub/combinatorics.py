"""Exact integer combinatorics. Counts are plain Python ints (unbounded, signed)."""

from __future__ import annotations

import math

BigCount = int


def binomial(n: int, k: int) -> BigCount:
    """``C(n, k)`` with the convention ``0`` for ``k < 0`` or ``k > n``."""
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def binomial_row(n_max: int, k: int) -> list[BigCount]:
    """``[C(0, k), C(1, k), ..., C(n_max, k)]`` for table lookups in hot loops."""
    return [binomial(n, k) for n in range(n_max + 1)]
