"""Fault-tolerant approximate BFS structures.

Sparse subgraphs that preserve single-source distances under edge
failures within multiplicative/additive stretch, together with hard
instance generators and an exhaustive verification oracle.
"""

from .graph import (
    INF,
    BfsTree,
    FaultSet,
    Graph,
    GraphFormatError,
    Path,
    bfs_distances,
    bfs_tree,
    build_graph,
    dump_graph,
    girth,
    lca,
    load_graph,
    path_from_vertices,
    sensitive,
    tree_path,
)
from .repath import LexCost, compare_cost, path_cost, replacement_path
from .structure import Structure, serialize_structure, structure_as_graph
from .mult_single import build_mult3, first_new_edge, is_new_ending
from .mult_multi import (
    FbfsTable,
    Labeling,
    SparsePathSelection,
    build_multf,
    build_multf_pure,
    fbfs,
    label_components,
    sparsify_path,
)
from .spanner import SpannerResult, ft_spanner, greedy_spanner
from .additive import (
    Add4Result,
    BuyLedger,
    ClusterSet,
    Segmentation,
    add4_pipeline,
    build_add4,
    cluster,
    evaluate_candidate,
    pcons,
    qcons,
    segment,
)
from .lbgen import LbInstance, gen_bipartite_girth, gen_family, gen_lb_additive
from .oracle import (
    NecessityReport,
    SubsetError,
    VerificationReport,
    ft_distance,
    verify_necessity,
    verify_structure,
)
from .limits import DEFAULT_WORK_LIMIT, WorkLimitExceeded

__all__ = [name for name in dir() if not name.startswith("_")]
