"""Influential seed selection on networks.

Node ids are dense integers 0..n-1; Graph.original_id maps them back to the
labels of the input file.
"""

from ._core import (
    ConvergenceError,
    CoverageReport,
    EmptyGraphError,
    Graph,
    ParseError,
    SeedSet,
    SpreadEstimate,
    barabasi_albert,
    collaboration_graph,
    com_percent,
    coverage,
    estimate_spread,
    influence_score,
    pearson,
    run_experiment,
    scores,
    select,
    set_thread_count,
    thread_count,
    unique_influenced_percent,
)

METHODS = (
    "degree", "katz", "closeness", "betweenness", "eigenvector", "pagerank",
    "leaderrank", "kshell", "degreediscount", "greedy", "degreedistance",
    "degreedistance2", "fidd", "sidd", "random",
)

__all__ = [name for name in dir() if not name.startswith("_")]
