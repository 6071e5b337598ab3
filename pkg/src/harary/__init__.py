"""Harary (reciprocal distance) matrix spectra and extremal checks on small graphs."""

from .errors import (
    DisconnectedGraphError,
    EmptyClassError,
    Graph6Error,
    GraphError,
    HypothesisError,
    NonConvergenceError,
    NotABridgeError,
)
from .families import (
    CollapsedSplit,
    Complete,
    CompleteBipartite,
    EmptyComplement,
    PendantClique,
    SplitJoin,
    Star,
    generate,
    parse_family,
)
from .graph import (
    DistanceMatrix,
    Graph,
    apsp,
    contract_cut_edge_with_pendant,
    disjoint_union,
    from_edge_list,
    is_connected,
    join,
)
from .invariants import (
    covering_number,
    cut_edges,
    is_bipartite,
    matching_number,
    odd_components,
    tutte_berge_deficiency,
)
from .io import decode_graph6, encode_graph6, read_graph
from .spectral import (
    HararyMatrix,
    SpectralResult,
    full_spectrum,
    harary_matrix,
    harary_of,
    rho_closed_form,
    spectral_radius,
)

__version__ = "0.1.0"
