"""wlcheck: color refinement, exact biconnectivity and resistance distance,
and a corpus-based expressivity checking harness."""

from .biconn import (
    BiconnectivityReport,
    BlockCutTree,
    TreeCanonicalForm,
    bce_tree,
    bcv_tree,
    biconnectivity_report,
    brute_force_cut_sets,
    tree_canonical_form,
)
from .distances import (
    UNREACHABLE,
    DistanceRegularProfile,
    RdMatrix,
    SpdMatrix,
    distance_regular_profile,
    hitting_time_matrix,
    rd_from_intersection_array,
    rd_matrix,
    spd_matrix,
)
from .graphs import (
    Graph,
    GraphFormatError,
    Partition,
    brute_force_isomorphic,
    connected_components,
    encode_edge_list,
    encode_graph6,
    induced_subgraph,
    parse_edge_list,
    parse_graph6,
)
from .refine import (
    AlgoResult,
    Coloring,
    InterningContext,
    PairColoring,
    SubgraphPolicy,
    compute_orbits,
    distinguishable,
    graph_representation,
    refine_1wl,
    refine_2fwl,
    refine_dsswl,
    refine_dswl,
    refine_gdwl,
    refine_scwl,
    representations_equal,
    run_algorithm,
)

__all__ = [name for name in dir() if not name.startswith("_")]
