import random

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import graphs, naive_alt_enum, naive_scorpion_tuples, naive_vertex_cover
from indsub.basis import (
    WeightSpectrum,
    alt_enum,
    alt_enum_census,
    attained_weights,
    brute_attained_weights,
    property_table,
    tau_slice,
    verify_fossil_characterization,
    vertex_cover_number,
)
from indsub.combinatorics import binomial
from indsub.errors import BudgetExceeded, ParameterError
from indsub.generators import complete_graph, cycle_graph, empty_graph, gen_augmented_biclique, gen_skeleton, random_graph
from indsub.graph import UndirectedGraph
from indsub.recognition import PropertySpec, is_fossil

SCORP1 = PropertySpec.scorpion(1)
ALWAYS = PropertySpec.custom(lambda H: True, "true")


def naive_scorp(ell):
    return lambda H: bool(naive_scorpion_tuples(H, ell))


# ---------------------------------------------------------------- alternating enumerator


def test_alt_enum_edgeless():
    assert alt_enum(SCORP1, empty_graph(5)) == 0


def test_alt_enum_clique():
    K5 = complete_graph(5)
    assert naive_alt_enum(naive_scorp(1), K5) == 0
    assert alt_enum(SCORP1, K5) == 0


def test_alt_enum_skeleton():
    S, _ = gen_skeleton(1, 5)
    want = naive_alt_enum(naive_scorp(1), S)
    assert want == 1
    assert alt_enum(SCORP1, S) == want


def test_alt_enum_budget():
    with pytest.raises(BudgetExceeded):
        alt_enum(SCORP1, complete_graph(9))


@given(graphs(max_n=6))
@settings(max_examples=60, deadline=None)
def test_alt_enum_always_true(H):
    assert alt_enum(ALWAYS, H) == (1 if H.num_edges == 0 else 0)


@given(graphs(min_n=5, max_n=6))
@settings(max_examples=40, deadline=None)
def test_alt_enum_matches_naive(H):
    if H.num_edges > 10:
        return
    assert alt_enum(SCORP1, H) == naive_alt_enum(naive_scorp(1), H)


@given(graphs(max_n=9))
@settings(max_examples=60, deadline=None)
def test_alt_enum_magnitude_bound(H):
    if H.num_edges > 12:
        return
    assert abs(alt_enum(PropertySpec.fossil(1), H)) <= 2**H.num_edges


@pytest.mark.parametrize("ell, k", [(1, 5), (1, 6), (2, 6), (1, 7), (2, 7)])
def test_skeleton_sign_law(ell, k):
    S, _ = gen_skeleton(ell, k)
    value = alt_enum(PropertySpec.scorpion(ell), S)
    assert value != 0
    assert (value > 0) == ((S.num_edges + k - 1) % 2 == 0)


def test_census_matches_direct():
    table = property_table(SCORP1, 5)
    census = alt_enum_census(table)
    for mask in range(1 << 10):
        H = UndirectedGraph.from_edge_mask(5, mask)
        assert census[mask] == alt_enum(SCORP1, H)


def test_census_matches_direct_sample_k6():
    table = property_table(PropertySpec.scorpion(2), 6)
    census = alt_enum_census(table)
    rng = random.Random(0)
    for mask in rng.sample(range(1 << 15), 150):
        H = UndirectedGraph.from_edge_mask(6, mask)
        assert census[mask] == alt_enum(PropertySpec.scorpion(2), H)


def test_census_always_true():
    table = np.ones(1 << 6, dtype=np.int64)
    census = alt_enum_census(table)
    assert census[0] == 1 and not census[1:].any()


# ---------------------------------------------------------------- fossil characterization


@pytest.mark.parametrize("ell, k, graphs_", [(1, 5, 1024), (1, 6, 32768), (2, 6, 32768)])
def test_fossil_characterization(ell, k, graphs_):
    report = verify_fossil_characterization(ell, k)
    assert report.graphs_scanned == graphs_
    assert report.counterexamples == []
    assert report.details["fossils"] == report.details["nonzero"] > 0


def test_fossil_characterization_errors():
    with pytest.raises(ParameterError):
        verify_fossil_characterization(1, 4)
    with pytest.raises(BudgetExceeded):
        verify_fossil_characterization(1, 7)


# ---------------------------------------------------------------- vertex cover


def test_vertex_cover_examples():
    assert vertex_cover_number(empty_graph(5)) == 0
    assert vertex_cover_number(gen_augmented_biclique(3, 4)) == 3
    C5 = cycle_graph(5)
    assert naive_vertex_cover(C5) == 3
    assert vertex_cover_number(C5) == 3


def test_vertex_cover_budget():
    with pytest.raises(BudgetExceeded):
        vertex_cover_number(empty_graph(25))


@given(graphs(max_n=9))
@settings(max_examples=150, deadline=None)
def test_vertex_cover_matches_naive(H):
    assert vertex_cover_number(H) == naive_vertex_cover(H)


def test_vertex_cover_larger_instances():
    assert vertex_cover_number(complete_graph(24)) == 23
    assert vertex_cover_number(cycle_graph(23)) == 12
    G = random_graph(24, 0.2, 1)
    vc = vertex_cover_number(G)
    assert 0 < vc < 24


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_biclique_vertex_cover(ell):
    for k in range(ell + 4, ell + 9):
        H = gen_augmented_biclique(ell + 2, k - ell - 2)
        assert is_fossil(H, ell)
        assert vertex_cover_number(H) == ell + 2


@pytest.mark.parametrize("ell, k", [(1, 5), (1, 6), (2, 6)])
def test_tau_slice(ell, k):
    assert tau_slice(ell, k) == ell + 2


# ---------------------------------------------------------------- weights


def test_attained_weights_1_7():
    spec = attained_weights(1, 7)
    assert len(spec.attained) == binomial(4, 2) + 1 == 7
    # 22 possible weights 0..21, 7 attained
    assert spec.avoided_count == 15


@pytest.mark.parametrize("ell, k", [(1, 5), (1, 6), (2, 6), (1, 9), (3, 10), (2, 12)])
def test_avoided_closed_form(ell, k):
    closed = k * (ell + 2) - ell * (ell + 5) // 2 - 4
    assert binomial(k, 2) - binomial(k - ell - 2, 2) - 1 == closed
    # the closed form measures against C(k,2) candidate weights, not C(k,2)+1
    assert attained_weights(ell, k).avoided_count == closed + 1


def test_attained_weights_examples():
    assert attained_weights(1, 5).attained == {4, 5}
    assert attained_weights(1, 5).avoided_count == 9
    assert attained_weights(2, 6).attained == {5, 6}
    assert attained_weights(2, 6).avoided_count == 14
    with pytest.raises(ParameterError):
        attained_weights(2, 5)


@pytest.mark.parametrize("ell, k", [(1, 5), (1, 6), (2, 6)])
def test_brute_weights_agree(ell, k):
    assert brute_attained_weights(PropertySpec.scorpion(ell), k) == attained_weights(ell, k)


def test_brute_weights_examples():
    assert brute_attained_weights(SCORP1, 5).attained == {4, 5}
    assert brute_attained_weights(PropertySpec.scorpion(2), 6).attained == {5, 6}
    assert brute_attained_weights(ALWAYS, 4).attained == set(range(7))


def test_weight_spectrum_range():
    with pytest.raises(ParameterError):
        WeightSpectrum(4, frozenset({7}))
    assert WeightSpectrum(4, frozenset()).avoided_count == 7
