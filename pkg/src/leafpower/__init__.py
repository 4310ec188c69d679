"""Leaf powers, tree representations, and the hard family R_n.

The package provides immutable graphs and trees, two kinds of subtree
intersection models (explicit node sets and center/radius balls), the R_n
graph family with its rooted-path and exponential-radius ball models,
k-leaf-root verification and conversion, a brute-force leaf-rank search, an
exact-rational LP certificate for leaf powers, and the machine audit of the
exponential lower bound.
"""

from .audit import (
    AuditReport,
    BranchPoints,
    branch_points,
    check_increasing,
    check_median_cover,
    check_order,
    failed_model_dump,
    lower_bound_certificate,
    report_to_json,
    report_to_text,
)
from .certify import (
    FeasibilityResult,
    FeasibilitySystem,
    WeightedLeafRoot,
    build_feasibility_system,
    certify_leaf_power,
    scale_to_integer_leafroot,
    solve_feasibility,
    system_to_lp_text,
    verify_weighted_leafroot,
    weighted_distance,
    weighted_leafroot_from_json,
    weighted_leafroot_to_json,
)
from .enumtrees import (
    leaf_orbit_representatives,
    leaf_orbits,
    nonisomorphic_trees,
    topology_trees,
    trees_with_leaf_count,
)
from .graphs import (
    Clique,
    Graph,
    components,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    induced_subgraph,
    is_chordal,
    is_cluster_graph,
    is_separator,
    maximal_cliques,
    normalize_edge,
    perfect_elimination_ordering,
)
from .models import (
    RSModel,
    SubtreeModel,
    check_path_cover,
    clique_subtree,
    clique_tree_model,
    cover,
    expand_rs,
    rs_model_from_json,
    rs_model_to_dot,
    rs_model_to_json,
    rs_model_violations,
    subtree_model_from_json,
    subtree_model_to_dot,
    subtree_model_to_json,
    subtree_model_violations,
    verify_rs_model,
    verify_subtree_model,
)
from .rn import (
    MAX_EXPONENTIAL_N,
    RDP_ROOT,
    RnGraph,
    build_exponential_rs_model,
    build_rdp_model,
    build_rn,
    is_rooted_directed_path_model,
)
from .roots import (
    LeafRoot,
    brute_force_leaf_rank,
    leaf_power_graph,
    leafroot_from_json,
    leafroot_to_dot,
    leafroot_to_json,
    leafroot_to_rs,
    rs_to_leafroot,
    verify_leaf_root,
)
from .trees import (
    Tree,
    ball,
    connecting_path,
    connector,
    distance,
    distances_from,
    median,
    tree_from_json,
    tree_path,
    tree_to_dot,
    tree_to_json,
)

__all__ = [
    "AuditReport",
    "BranchPoints",
    "Clique",
    "FeasibilityResult",
    "FeasibilitySystem",
    "Graph",
    "LeafRoot",
    "MAX_EXPONENTIAL_N",
    "RDP_ROOT",
    "RSModel",
    "RnGraph",
    "SubtreeModel",
    "Tree",
    "WeightedLeafRoot",
    "ball",
    "branch_points",
    "brute_force_leaf_rank",
    "build_exponential_rs_model",
    "build_feasibility_system",
    "build_rdp_model",
    "build_rn",
    "certify_leaf_power",
    "check_increasing",
    "check_median_cover",
    "check_order",
    "check_path_cover",
    "clique_subtree",
    "clique_tree_model",
    "components",
    "connecting_path",
    "connector",
    "cover",
    "distance",
    "distances_from",
    "expand_rs",
    "failed_model_dump",
    "graph_from_json",
    "graph_to_dot",
    "graph_to_json",
    "induced_subgraph",
    "is_chordal",
    "is_cluster_graph",
    "is_rooted_directed_path_model",
    "is_separator",
    "leaf_orbit_representatives",
    "leaf_orbits",
    "leaf_power_graph",
    "leafroot_from_json",
    "leafroot_to_dot",
    "leafroot_to_json",
    "leafroot_to_rs",
    "lower_bound_certificate",
    "maximal_cliques",
    "median",
    "nonisomorphic_trees",
    "normalize_edge",
    "perfect_elimination_ordering",
    "report_to_json",
    "report_to_text",
    "rs_model_from_json",
    "rs_model_to_dot",
    "rs_model_to_json",
    "rs_model_violations",
    "rs_to_leafroot",
    "scale_to_integer_leafroot",
    "solve_feasibility",
    "subtree_model_from_json",
    "subtree_model_to_dot",
    "subtree_model_to_json",
    "subtree_model_violations",
    "system_to_lp_text",
    "topology_trees",
    "tree_from_json",
    "tree_path",
    "tree_to_dot",
    "tree_to_json",
    "trees_with_leaf_count",
    "verify_leaf_root",
    "verify_rs_model",
    "verify_subtree_model",
    "verify_weighted_leafroot",
    "weighted_distance",
    "weighted_leafroot_from_json",
    "weighted_leafroot_to_json",
]
