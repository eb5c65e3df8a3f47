"""Single-vertex centrality on directed graphs: exact oracles and
reachability-pruned adaptive sampling estimators for betweenness, coverage,
and k-path scores, with additive error and failure-probability targets.
"""

from .adaptive import Estimate, EstimatorConfig, compute_sample_budget, stopping_terms
from .betweenness import estimate_betweenness, estimate_coverage
from .errors import GraphParseError, GuardError
from .exact import (
    brandes_betweenness,
    brandes_betweenness_all,
    exact_coverage,
    exact_kpath,
    restricted_pair_betweenness,
)
from .generate import hub_digraph, layered_dag, random_digraph
from .graph import DirectedGraph, bfs_distances, dump_edge_list, load_edge_list, loads_edge_list
from .kpath import KPathConfig, WalkSample, compute_walk_budget, estimate_kpath_centrality, sample_walk
from .reachability import ReachabilityInfo, compute_reachability, transitive_closure_oracle
from .shortest_paths import (
    PathSample,
    ShortestPathDag,
    build_shortest_path_dag,
    on_some_shortest_path,
    sample_uniform_path,
    shortest_path_length,
)

__version__ = "0.1.0"

__all__ = [
    "DirectedGraph",
    "Estimate",
    "EstimatorConfig",
    "GraphParseError",
    "GuardError",
    "KPathConfig",
    "PathSample",
    "ReachabilityInfo",
    "ShortestPathDag",
    "WalkSample",
    "bfs_distances",
    "brandes_betweenness",
    "brandes_betweenness_all",
    "build_shortest_path_dag",
    "compute_reachability",
    "compute_sample_budget",
    "compute_walk_budget",
    "dump_edge_list",
    "estimate_betweenness",
    "estimate_coverage",
    "estimate_kpath_centrality",
    "exact_coverage",
    "exact_kpath",
    "hub_digraph",
    "layered_dag",
    "load_edge_list",
    "loads_edge_list",
    "on_some_shortest_path",
    "random_digraph",
    "restricted_pair_betweenness",
    "sample_uniform_path",
    "sample_walk",
    "shortest_path_length",
    "stopping_terms",
    "transitive_closure_oracle",
    "__version__",
]
