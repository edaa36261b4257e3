"""Exact induced-subgraph counting for sink and ell-scorpion properties, with brute-force oracles."""

from .basis import (
    VerificationReport,
    WeightSpectrum,
    alt_enum,
    attained_weights,
    brute_attained_weights,
    tau_slice,
    verify_fossil_characterization,
    vertex_cover_number,
)
from .combinatorics import binomial
from .errors import BudgetExceeded, GraphFormatError, GraphKindMismatch, IndSubError, ParameterError
from .fast_count import count_scorpions, count_scorpions_slicewise, count_sinks_slice
from .generators import gen_augmented_biclique, gen_skeleton, random_graph, random_orientation
from .graph import DirectedGraph, UndirectedGraph, edge_subgraph, induced_subgraph
from .io import parse_graph, serialize_graph
from .oracle import are_isomorphic, brute_count, enumerate_labeled_graphs
from .recognition import (
    PropertySpec,
    ScorpionAnatomy,
    evaluate_property,
    find_sink,
    is_fossil,
    is_scorpion,
    is_skeleton,
    locate_anatomy,
)

__version__ = "0.1.0"
