import math
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import digraphs, graphs, naive_has_sink, naive_scorpion_tuples
from indsub.combinatorics import binomial
from indsub.errors import ParameterError
from indsub.fast_count import count_scorpions, count_scorpions_slicewise, count_sinks_slice
from indsub.generators import complete_graph, gen_skeleton, in_star, random_graph, random_orientation, random_permutation
from indsub.graph import DirectedGraph, induced_subdigraph, induced_subgraph
from indsub.oracle import brute_count
from indsub.recognition import PropertySpec


def naive_scorpion_count(G, ell, k):
    return sum(bool(naive_scorpion_tuples(induced_subgraph(G, X), ell)) for X in combinations(range(G.n), k))


# ---------------------------------------------------------------- sinks


def test_sinks_in_star():
    D = in_star(4, 0)
    assert sum(naive_has_sink(induced_subdigraph(D, X)) for X in combinations(range(4), 3)) == 3
    assert count_sinks_slice(D, 3) == 3


def test_sinks_edgeless():
    assert count_sinks_slice(DirectedGraph.from_edges(5, []), 2) == 0


@given(digraphs(max_n=9))
def test_sinks_k1_is_n(D):
    assert count_sinks_slice(D, 1) == D.n


def test_sinks_bad_k():
    with pytest.raises(ParameterError):
        count_sinks_slice(in_star(3), 0)


@given(digraphs(max_n=8), st.integers(1, 8))
@settings(max_examples=100, deadline=None)
def test_sinks_match_naive(D, k):
    want = sum(naive_has_sink(induced_subdigraph(D, X)) for X in combinations(range(D.n), k))
    assert count_sinks_slice(D, k) == want


# ---------------------------------------------------------------- scorpions


def test_scorpion_skeleton_is_single_hit():
    G, _ = gen_skeleton(1, 5)
    assert count_scorpions(G, 1, 5) == 1


def test_scorpion_clique_zero():
    assert count_scorpions(complete_graph(7), 1, 5) == 0


def test_scorpion_random_graph_seed42():
    G = random_graph(10, 0.5, 42)
    want = naive_scorpion_count(G, 1, 5)
    assert want == 44
    assert count_scorpions(G, 1, 5) == want
    assert brute_count(G, 5, PropertySpec.scorpion(1)) == want


@pytest.mark.parametrize("ell, k", [(1, 3), (2, 5), (0, 6)])
def test_scorpion_parameter_errors(ell, k):
    with pytest.raises(ParameterError):
        count_scorpions(complete_graph(8), ell, k)


def test_scorpion_k_above_n():
    assert count_scorpions(gen_skeleton(1, 5)[0], 1, 6) == 0


@given(graphs(min_n=5, max_n=8), st.integers(1, 2), st.integers(5, 8))
@settings(max_examples=60, deadline=None)
def test_scorpions_match_naive(G, ell, k):
    if k < ell + 4:
        k = ell + 4
    assert count_scorpions(G, ell, k) == naive_scorpion_count(G, ell, k)


@given(graphs(min_n=6, max_n=11), st.integers(1, 2), st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_scorpions_bound_and_invariance(G, ell, seed):
    k = ell + 4
    value = count_scorpions(G, ell, k)
    assert 0 <= value <= binomial(G.n, k)
    assert count_scorpions(G.permute(random_permutation(G.n, seed)), ell, k) == value


@pytest.mark.parametrize("n", [6, 9, 12])
def test_scorpions_zero_on_cliques(n):
    for ell in (1, 2):
        for k in range(ell + 4, n + 1):
            assert count_scorpions(complete_graph(n), ell, k) == 0


def test_sink_permutation_invariance():
    D = random_orientation(10, 3)
    P = D.permute(random_permutation(10, 4))
    assert all(count_sinks_slice(D, k) == count_sinks_slice(P, k) for k in range(1, 11))


def test_workers_match_sequential():
    G = random_graph(40, 0.5, 11)
    assert count_scorpions(G, 1, 6, workers=3) == count_scorpions(G, 1, 6)


# ---------------------------------------------------------------- slicewise


def test_slicewise_delegates():
    G = random_graph(10, 0.5, 3)
    assert count_scorpions_slicewise(G, lambda k: 1, 6) == count_scorpions(G, 1, 6)
    # 1 > (5 - 4) / 2, so no slicewise property has a 5-vertex slice
    with pytest.raises(ParameterError):
        count_scorpions_slicewise(G, lambda k: 1, 5)


def test_slicewise_sqrt():
    G = random_graph(20, 0.7, 5)
    f = lambda k: math.isqrt(k)
    assert count_scorpions_slicewise(G, f, 16) == count_scorpions(G, 4, 16)
    H = random_graph(10, 0.4, 8)
    assert count_scorpions_slicewise(H, f, 8) == brute_count(H, 8, PropertySpec.scorpion(2))


def test_slicewise_range_error():
    with pytest.raises(ParameterError):
        count_scorpions_slicewise(complete_graph(9), lambda k: 3, 9)
    with pytest.raises(ParameterError):
        count_scorpions_slicewise(complete_graph(9), lambda k: 0, 9)
