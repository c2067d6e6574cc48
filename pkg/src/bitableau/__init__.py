"""Graph canonicalization by bitableau standardization.

A bitableau re-encodes a graph's adjacency (or incidence) matrix as
per-vertex rows of labels; ordering the labeled copies of a graph by a
prefix-count key over those rows singles out a canonical one.  This
package provides the greedy standardization heuristics that chase that
canonical form, exhaustive oracles that compute it for real, and a
counterexample-hunting harness that measures where the heuristics fall
short.
"""

from .cliques import (
    CliqueResult,
    CliqueVerdict,
    RestrictedOrderKey,
    RestrictedStandardization,
    RestrictedVab,
    build_restricted_vab,
    compare_restricted_keys,
    find_k_clique,
    leading_clique_check,
    render_restricted,
    restricted_order_key,
    restricted_standardize,
)
from .errors import (
    BitableauError,
    CapExceededError,
    EdgeListParseError,
    Graph6ParseError,
    InternalCheckError,
)
from .graphs import (
    EdgeLabeledGraph,
    Graph,
    Permutation,
    degree_sequence,
    encode_graph6,
    enumerate_labeled_graphs,
    format_edge_list,
    label_edges,
    parse_edge_list,
    parse_graph6,
    permute_edge_labels,
    relabel,
    relabel_edge_labeled,
)
from .oracle import (
    CanonicalForm,
    automorphism_count,
    canonical_form_exhaustive,
    clique_exhaustive,
    distinct_labeled_copies,
    iso_exhaustive,
)
from .standardize import (
    IsoResult,
    IsoVerdict,
    StandardizationResult,
    TraceStep,
    format_trace,
    iso_check_ib,
    iso_check_vab,
    replay_ib_trace,
    replay_vab_trace,
    standardize_ib,
    standardize_vab,
    step_budget,
)
from .tableaux import (
    Ib,
    OrderKey,
    Ordering,
    Vab,
    act_ib_left,
    act_ib_right,
    act_vab,
    act_vab_cycle,
    act_vab_perm,
    build_ib,
    build_vab,
    compare_keys,
    ib_rank,
    order_key_ib,
    order_key_vab,
    render_ib,
    render_vab,
    vab_rank,
)

__version__ = "0.1.0"
