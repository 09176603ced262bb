"""Extremal edge counts of K4-minor-free graphs under girth constraints.

Closed-form bounds, the tight constructions attaining them, structural
checks (cycle bridges, cutvertex elimination), and an exhaustive search
that recomputes extremal values and complete lists of extremal graphs up
to isomorphism at desk scale.
"""

from .graphs import (
    Graph,
    MAX_VERTICES,
    UNREACHABLE,
    all_cycles,
    blocks,
    complete_bipartite,
    complete_graph,
    connected_components,
    cutvertices,
    cycle_graph,
    decode_graph6,
    disjoint_union,
    distance,
    edge_count,
    empty_graph,
    encode_graph6,
    is_connected,
    path_graph,
    to_dot,
    two_cuts,
)
from .invariants import (
    ACYCLIC,
    are_isomorphic,
    canonical_form,
    find_k4_minor,
    girth,
    girth_at_least,
    is_k4_minor_free,
)
from .structure import (
    Bridge,
    BridgeCheckReport,
    bridges,
    check_bridges,
    chords,
    crossing,
    cut_reduction,
    make_two_connected,
)
from .construct import (
    GirthClassParams,
    bound_even_girth,
    bound_girth5,
    g5_family,
    h_catalog,
    subdivide,
    theta,
)
from .search import (
    ExtremalResult,
    SearchConfig,
    count_at_edges,
    extremal_search,
    verify_bound,
)

__version__ = "0.1.0"

__all__ = [
    "ACYCLIC",
    "Bridge",
    "BridgeCheckReport",
    "ExtremalResult",
    "GirthClassParams",
    "Graph",
    "MAX_VERTICES",
    "SearchConfig",
    "UNREACHABLE",
    "all_cycles",
    "are_isomorphic",
    "blocks",
    "bound_even_girth",
    "bound_girth5",
    "bridges",
    "canonical_form",
    "check_bridges",
    "chords",
    "complete_bipartite",
    "complete_graph",
    "connected_components",
    "count_at_edges",
    "crossing",
    "cut_reduction",
    "cutvertices",
    "cycle_graph",
    "decode_graph6",
    "disjoint_union",
    "distance",
    "edge_count",
    "empty_graph",
    "encode_graph6",
    "extremal_search",
    "find_k4_minor",
    "g5_family",
    "girth",
    "girth_at_least",
    "h_catalog",
    "is_connected",
    "is_k4_minor_free",
    "make_two_connected",
    "path_graph",
    "subdivide",
    "theta",
    "to_dot",
    "two_cuts",
    "verify_bound",
]
