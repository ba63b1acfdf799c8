"""Berge-G saturation for non-uniform hypergraphs.

Constructions of saturated hypergraphs, exact Berge-G containment, saturation
checks and exact saturation numbers by isomorph-rejecting exhaustive search.
"""

from .berge import (
    BergeWitness,
    certificate_condition_iii,
    contains_berge,
    contains_berge_oracle,
    validate_witness,
)
from .constructions import (
    almost_regular_edges,
    construct_hnm,
    construct_hprime,
    construct_ht,
    special_saturated,
)
from .graph import (
    ClassTag,
    Graph,
    GraphClass,
    classify_for_theorem,
    enumerate_graphs,
    has_vertex_cover_le2,
    is_star,
    is_two_star_union,
    max_degree,
    predicted_sat,
)
from .hypergraph import Hypergraph, SetSystem, absent_edges, add_edge, complement_system, degree, remove_edge
from .kernels import BACKEND
from .matching import BipartiteGraph, MatchingResult, MatchKind, max_matching, perfect_or_violator
from .saturation import (
    CapExceeded,
    SatResult,
    SaturationReport,
    lemma_lower_bound_check,
    sat_number,
    saturation_report,
    theorem_check,
)

__version__ = "0.1.0"
