"""Subgraph-basis analysis: alternating enumerators, fossil characterization,
vertex cover numbers and edge-count (weight) spectra.

Census-level routines work on labeled ``k``-vertex graphs identified by
their edge mask over :func:`indsub.graph.pair_index`. Every spanning
subgraph of a labeled graph is again a labeled graph whose mask is a
submask, so a property is evaluated once per mask and the alternating
sums for the whole census come out of one subset-sum transform.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .combinatorics import BigCount, binomial
from .errors import BudgetExceeded, ParameterError
from .graph import UndirectedGraph, bits, pair_index
from .oracle import enumerate_labeled_graphs
from .recognition import PropertySpec, evaluate_property, find_all_anatomies, is_fossil, locate_anatomy

MAX_ALT_ENUM_EDGES = 30
DEFAULT_CENSUS_PAIRS = 15
MAX_VC_VERTICES = 24


def alt_enum(spec: PropertySpec, H: UndirectedGraph, max_edges: int = MAX_ALT_ENUM_EDGES) -> BigCount:
    """``(-1)^|E(H)| * sum_{S subset E(H)} (-1)^|S| * spec(H[S])`` over spanning subgraphs.

    Edge subsets are visited in reflected Gray-code order, toggling one
    edge per step.
    """
    edges = H.edges()
    m = len(edges)
    if m > max_edges:
        raise BudgetExceeded(f"{m} edges exceeds the alternating-enumerator budget of {max_edges}")
    rows = [0] * H.n
    total = 0
    prev = 0
    for i in range(1 << m):
        gray = i ^ (i >> 1)
        flip = gray ^ prev
        if flip:
            u, v = edges[flip.bit_length() - 1]
            rows[u] ^= 1 << v
            rows[v] ^= 1 << u
        prev = gray
        if evaluate_property(spec, UndirectedGraph.from_rows(rows)):
            total += -1 if gray.bit_count() & 1 else 1
    return -total if m & 1 else total


def property_table(spec: PropertySpec, k: int, max_pairs: int = DEFAULT_CENSUS_PAIRS) -> np.ndarray:
    """``table[mask] = spec(graph with edge mask mask)`` over all labeled ``k``-vertex graphs."""
    if spec.directed:
        raise ParameterError("census routines cover undirected properties only")
    return np.fromiter(
        (evaluate_property(spec, H) for H in enumerate_labeled_graphs(k, max_pairs)),
        dtype=np.int64,
    )


def _popcounts(size: int) -> np.ndarray:
    """Number of set bits of every index in ``range(size)``."""
    idx = np.arange(size)
    counts = np.zeros(size, dtype=np.int64)
    for b in range(max(size - 1, 0).bit_length()):
        counts += (idx >> b) & 1
    return counts


def alt_enum_census(table: np.ndarray) -> np.ndarray:
    """Alternating enumerator of every labeled graph, from a property table.

    ``g[S] = (-1)^|S| table[S]`` is summed over submasks by the standard
    subset-sum transform, then multiplied by ``(-1)^|H|``.
    """
    size = len(table)
    pairs = size.bit_length() - 1
    sign = 1 - 2 * (_popcounts(size) & 1)
    g = sign * table
    for b in range(pairs):
        g = g.reshape(-1, 2, 1 << b)
        g[:, 1, :] += g[:, 0, :]
    return sign * g.reshape(size)


@dataclass
class VerificationReport:
    check: str
    params: dict
    graphs_scanned: int
    counterexamples: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def line(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        extra = "".join(f" {k}={v}" for k, v in self.details.items())
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.check} {params} graphs={self.graphs_scanned} "
            f"counterexamples={len(self.counterexamples)}{extra}"
        )


def _census_pairs(k: int, max_pairs: int) -> int:
    pairs = k * (k - 1) // 2
    if pairs > max_pairs:
        raise BudgetExceeded(f"census over 2^{pairs} labeled graphs exceeds budget 2^{max_pairs}")
    return pairs


def verify_fossil_characterization(ell: int, k: int, max_pairs: int = DEFAULT_CENSUS_PAIRS) -> VerificationReport:
    """Check ``alt_enum(scorpion(ell), H) != 0  <=>  H is an ell-scorpion fossil`` for every labeled ``H``."""
    if ell < 1 or k < ell + 4:
        raise ParameterError(f"need ell >= 1 and k >= ell + 4, got ell={ell}, k={k}")
    _census_pairs(k, max_pairs)
    alt = alt_enum_census(property_table(PropertySpec.scorpion(ell), k, max_pairs))
    bad = []
    fossils = 0
    for mask, H in enumerate(enumerate_labeled_graphs(k, max_pairs)):
        fossil = is_fossil(H, ell)
        fossils += fossil
        if fossil != bool(alt[mask]):
            bad.append(mask)
    return VerificationReport(
        "fossil-charac", {"ell": ell, "k": k}, len(alt), bad, {"fossils": fossils, "nonzero": int(np.count_nonzero(alt))}
    )


def _greedy_matching(rows: tuple[int, ...], alive: int) -> int:
    size = 0
    while alive:
        v = (alive & -alive).bit_length() - 1
        nb = rows[v] & alive
        alive &= ~(1 << v)
        if nb:
            u = (nb & -nb).bit_length() - 1
            alive &= ~(1 << u)
            size += 1
    return size


def vertex_cover_number(H: UndirectedGraph, max_n: int = MAX_VC_VERTICES) -> int:
    """Exact minimum vertex cover size by branch and bound.

    Branches on a maximum-degree vertex ``v`` of the remaining graph: either
    ``v`` joins the cover, or every remaining neighbor of ``v`` does. A
    greedy maximal matching gives the lower bound for pruning.
    """
    if H.n > max_n:
        raise BudgetExceeded(f"exact vertex cover limited to {max_n} vertices, got {H.n}")
    rows = H.rows
    best = H.n

    def solve(alive: int, size: int) -> None:
        nonlocal best
        top, v = 0, -1
        for w in bits(alive):
            d = (rows[w] & alive).bit_count()
            if d > top:
                top, v = d, w
        if top == 0:
            best = min(best, size)
            return
        if size + _greedy_matching(rows, alive) >= best:
            return
        solve(alive & ~(1 << v), size + 1)
        nb = rows[v] & alive
        solve(alive & ~nb & ~(1 << v), size + nb.bit_count())

    solve((1 << H.n) - 1, 0)
    return best


def tau_slice(ell: int, k: int, max_pairs: int = DEFAULT_CENSUS_PAIRS) -> int:
    """Largest vertex cover number among ``k``-vertex graphs with nonzero scorpion alternating enumerator."""
    if ell < 1 or k < ell + 4:
        raise ParameterError(f"need ell >= 1 and k >= ell + 4, got ell={ell}, k={k}")
    _census_pairs(k, max_pairs)
    alt = alt_enum_census(property_table(PropertySpec.scorpion(ell), k, max_pairs))
    best = 0
    for mask in np.flatnonzero(alt):
        best = max(best, vertex_cover_number(UndirectedGraph.from_edge_mask(k, int(mask))))
    return best


@dataclass(frozen=True)
class WeightSpectrum:
    k: int
    attained: frozenset[int]

    def __post_init__(self):
        top = binomial(self.k, 2)
        if any(not 0 <= m <= top for m in self.attained):
            raise ParameterError(f"attained weights must lie in [0, {top}]")

    @property
    def avoided_count(self) -> int:
        return binomial(self.k, 2) + 1 - len(self.attained)


def attained_weights(ell: int, k: int) -> WeightSpectrum:
    """Edge counts of ``k``-vertex ell-scorpions: ``k - 1`` skeleton edges plus any number of leg-leg edges."""
    if ell < 1 or k < ell + 4:
        raise ParameterError(f"need ell >= 1 and k >= ell + 4, got ell={ell}, k={k}")
    extra = binomial(k - ell - 2, 2)
    return WeightSpectrum(k, frozenset(range(k - 1, k + extra)))


def brute_attained_weights(spec: PropertySpec, k: int, max_pairs: int = DEFAULT_CENSUS_PAIRS) -> WeightSpectrum:
    _census_pairs(k, max_pairs)
    table = property_table(spec, k, max_pairs)
    counts = _popcounts(len(table))
    return WeightSpectrum(k, frozenset(int(c) for c in np.unique(counts[table.astype(bool)])))


def verify_weights(ell: int, k: int, max_pairs: int = DEFAULT_CENSUS_PAIRS) -> VerificationReport:
    analytic = attained_weights(ell, k)
    brute = brute_attained_weights(PropertySpec.scorpion(ell), k, max_pairs)
    bad = [] if analytic == brute else [(sorted(analytic.attained), sorted(brute.attained))]
    return VerificationReport(
        "weights",
        {"ell": ell, "k": k},
        1 << (k * (k - 1) // 2),
        bad,
        {"attained": sorted(analytic.attained), "avoided": analytic.avoided_count},
    )


def verify_tau(ell: int, k: int, max_pairs: int = DEFAULT_CENSUS_PAIRS) -> VerificationReport:
    tau = tau_slice(ell, k, max_pairs)
    bad = [] if tau == ell + 2 else [tau]
    return VerificationReport("tau", {"ell": ell, "k": k}, 1 << (k * (k - 1) // 2), bad, {"tau": tau})


def verify_anatomy(ell: int, k: int, max_pairs: int = DEFAULT_CENSUS_PAIRS) -> VerificationReport:
    """Every labeled ``k``-vertex graph has at most one scorpion tuple, and it is the one the degree procedure finds."""
    if ell < 1 or k < ell + 4:
        raise ParameterError(f"need ell >= 1 and k >= ell + 4, got ell={ell}, k={k}")
    _census_pairs(k, max_pairs)
    bad = []
    scorpions = 0
    scanned = 0
    for mask, H in enumerate(enumerate_labeled_graphs(k, max_pairs)):
        scanned += 1
        found = find_all_anatomies(H, ell)
        located = locate_anatomy(H, ell)
        scorpions += bool(found)
        if len(found) > 1 or (found[0] if found else None) != located:
            bad.append(mask)
    return VerificationReport("anatomy", {"ell": ell, "k": k}, scanned, bad, {"scorpions": scorpions})

