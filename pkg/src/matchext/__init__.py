"""Degree power-sum thresholds for matching extendability in small graphs.

The package computes the vertex-degree power-sum index, decides matching
extendability properties exactly, builds the extremal families of maximal
non-property graphs, evaluates the index thresholds that force each
property, and verifies all of it exhaustively over small graph populations.
"""

from .graphs import (
    Bipartition,
    Graph,
    Graph6Error,
    complete_bipartite,
    complete_graph,
    empty_graph,
    from_edges,
    graph6_decode,
    graph6_encode,
)
from .indices import Alpha, index_delta_for_edge, zeroth_order_randic
from .matching import (
    Matching,
    bipartite_maximum_matching,
    enumerate_k_matchings,
    extends_to_deficiency,
    maximum_matching,
    min_deficiency,
)
from .properties import (
    NKD,
    PM,
    BipExtendable,
    Extendable,
    FactorCritical,
    PropertyKind,
    holds,
    is_k_extendable,
    is_k_factor_critical,
    is_maximal_non_property,
    is_nkd_graph,
    parse_property,
)
from .extremal import (
    BicliqueDeletedSpec,
    HubJoinSpec,
    build_extremal,
    enumerate_family,
)
from .thresholds import (
    BipExtendTheorem,
    ExtendableTheorem,
    FactorCriticalTheorem,
    HypothesisError,
    NKDTheorem,
    PerfectMatchingTheorem,
    ThresholdReport,
    closed_threshold,
    exact_threshold,
    exceptional_graphs,
)
from .harness import (
    GraphClassFilter,
    VerificationReport,
    enumerate_graphs,
    verify_characterization,
    verify_monotonicity,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "Alpha",
    "BicliqueDeletedSpec",
    "BipExtendTheorem",
    "BipExtendable",
    "Bipartition",
    "Extendable",
    "ExtendableTheorem",
    "FactorCritical",
    "FactorCriticalTheorem",
    "Graph",
    "Graph6Error",
    "GraphClassFilter",
    "HubJoinSpec",
    "HypothesisError",
    "Matching",
    "NKD",
    "NKDTheorem",
    "PM",
    "PerfectMatchingTheorem",
    "PropertyKind",
    "ThresholdReport",
    "VerificationReport",
    "bipartite_maximum_matching",
    "build_extremal",
    "closed_threshold",
    "complete_bipartite",
    "complete_graph",
    "empty_graph",
    "enumerate_family",
    "enumerate_graphs",
    "enumerate_k_matchings",
    "exact_threshold",
    "exceptional_graphs",
    "extends_to_deficiency",
    "from_edges",
    "graph6_decode",
    "graph6_encode",
    "holds",
    "index_delta_for_edge",
    "is_k_extendable",
    "is_k_factor_critical",
    "is_maximal_non_property",
    "is_nkd_graph",
    "maximum_matching",
    "min_deficiency",
    "parse_property",
    "verify_characterization",
    "verify_monotonicity",
    "verify_theorem",
    "zeroth_order_randic",
]
