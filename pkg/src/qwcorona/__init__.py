"""Continuous-time walks under the signless Laplacian on corona products."""
from __future__ import annotations

from .algebraic import (
    AmbiguousMatchError,
    InvalidSupportError,
    QuadExt,
    SupportClassification,
    classify_support,
    common_half_form,
    is_perfect_square,
    recognize_quadext,
    square_free_part,
)
from .corona_spectra import (
    CoronaEigenvalue,
    CoronaParams,
    CoronaSpectrum,
    corona_full_q,
    corona_spectrum,
    corona_transition_element,
    pair_radicand,
    top_radicand,
)
from .graphs import (
    CoronaVertex,
    Graph,
    cocktail_party_graph,
    complete_graph,
    cycle_graph,
    diameter,
    distance_matrix,
    empty_graph,
    generate,
    graph_from_edges,
    halved_cube_graph,
    hypercube_graph,
    is_connected,
    is_regular,
    path_graph,
    read_edge_list,
    regular_degree,
    signless_laplacian,
    standard_corona,
    vertex_complemented_corona,
)
from .spectra import (
    Amplitude,
    FidelityScan,
    SpectralDecomposition,
    amplitude,
    antipodal_identity_check,
    decompose,
    decompose_graph,
    eigenvalue_support,
    fidelity_scan,
    strong_cospectrality,
    transition_amplitude,
    transition_matrix,
)
from .state_transfer import (
    K2CoronaVerdict,
    PGSTSearchResult,
    PSTReport,
    PeriodicityReport,
    corona_base_periodicity,
    corona_base_pst_check,
    is_periodic_vertex,
    k2_corona_no_pst,
    periodicity_size_bound,
    pgst_cocktail,
    pgst_time_search,
    pst_certify,
    support_gap_refutation,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousMatchError",
    "Amplitude",
    "CoronaEigenvalue",
    "CoronaParams",
    "CoronaSpectrum",
    "CoronaVertex",
    "FidelityScan",
    "Graph",
    "InvalidSupportError",
    "K2CoronaVerdict",
    "PGSTSearchResult",
    "PSTReport",
    "PeriodicityReport",
    "QuadExt",
    "SpectralDecomposition",
    "SupportClassification",
    "amplitude",
    "antipodal_identity_check",
    "classify_support",
    "cocktail_party_graph",
    "common_half_form",
    "complete_graph",
    "corona_base_periodicity",
    "corona_base_pst_check",
    "corona_full_q",
    "corona_spectrum",
    "corona_transition_element",
    "cycle_graph",
    "decompose",
    "decompose_graph",
    "diameter",
    "distance_matrix",
    "eigenvalue_support",
    "empty_graph",
    "fidelity_scan",
    "generate",
    "graph_from_edges",
    "halved_cube_graph",
    "hypercube_graph",
    "is_connected",
    "is_perfect_square",
    "is_periodic_vertex",
    "is_regular",
    "k2_corona_no_pst",
    "pair_radicand",
    "path_graph",
    "periodicity_size_bound",
    "pgst_cocktail",
    "pgst_time_search",
    "pst_certify",
    "read_edge_list",
    "recognize_quadext",
    "regular_degree",
    "signless_laplacian",
    "square_free_part",
    "standard_corona",
    "strong_cospectrality",
    "support_gap_refutation",
    "top_radicand",
    "transition_amplitude",
    "transition_matrix",
    "vertex_complemented_corona",
]
