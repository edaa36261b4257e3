"""Empirical scaling probe for the scorpion counter."""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .fast_count import count_scorpions
from .generators import Probability, random_graph


@dataclass
class BenchPoint:
    n: int
    count: int
    times_us: list[int]

    @property
    def median_us(self) -> int:
        return int(statistics.median(self.times_us))


def loglog_slope(sizes: Sequence[int], times: Sequence[float]) -> Optional[float]:
    """Least-squares slope of ``log t`` against ``log n``; ``None`` with fewer than two sizes."""
    if len(sizes) < 2:
        return None
    return statistics.linear_regression([math.log(n) for n in sizes], [math.log(max(t, 1)) for t in times]).slope


def run_bench(
    ell: int, k: int, sizes: Sequence[int], p: Probability, seed: int, repeats: int = 1
) -> tuple[list[BenchPoint], Optional[float]]:
    points = []
    for n in sizes:
        G = random_graph(n, p, seed)
        times = []
        count = None
        for _ in range(repeats):
            start = time.perf_counter_ns()
            value = count_scorpions(G, ell, k)
            times.append((time.perf_counter_ns() - start) // 1000)
            if count is not None and value != count:
                raise RuntimeError(f"nondeterministic count at n={n}: {count} then {value}")
            count = value
        points.append(BenchPoint(n, count, times))
    slope = loglog_slope([pt.n for pt in points], [pt.median_us for pt in points])
    return points, slope
