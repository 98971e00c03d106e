"""Clique cover width toolkit: apex-grid constructions, chordal + low-width
factorizations, exact small-instance solvers, and balanced separators with
clique-cover certificates."""

from .chordal import (
    ChordalCertificate,
    CliqueTree,
    balanced_clique_separator,
    clique_tree,
    is_chordal,
    lex_bfs,
    maximal_cliques_chordal,
    verify_certificate,
    verify_peo,
)
from .cliquecover import (
    OrderedCliqueCover,
    SearchResult,
    WidthReport,
    bandwidth_exact,
    ccw_exact,
    ccw_upper_greedy,
    cover_width,
    verify_cover,
)
from .constructions import (
    CliqueSumSpec,
    Factorization,
    apex_grid,
    check_factorization,
    clique_sum,
    complete_apex_edges,
    example3_i,
    example3_ii,
    factorize_apex_grid,
    factorize_clique_sum,
    grid,
    verify_factorization,
)
from .graph import (
    Apex,
    Graph,
    GridCell,
    Plain,
    bfs_distances,
    connected_components,
    diameter,
    induced_subgraph,
    intersect_graphs,
    is_clique,
    is_independent,
)
from .measure import Measure
from .separator import AuditReport, SeparatorResult, audit_lower_bound, product_cell_cover, separate

__all__ = [
    "Apex",
    "AuditReport",
    "ChordalCertificate",
    "CliqueSumSpec",
    "CliqueTree",
    "Factorization",
    "Graph",
    "GridCell",
    "Measure",
    "OrderedCliqueCover",
    "Plain",
    "SearchResult",
    "SeparatorResult",
    "WidthReport",
    "apex_grid",
    "audit_lower_bound",
    "balanced_clique_separator",
    "bandwidth_exact",
    "bfs_distances",
    "ccw_exact",
    "ccw_upper_greedy",
    "check_factorization",
    "clique_sum",
    "clique_tree",
    "complete_apex_edges",
    "connected_components",
    "cover_width",
    "diameter",
    "example3_i",
    "example3_ii",
    "factorize_apex_grid",
    "factorize_clique_sum",
    "grid",
    "induced_subgraph",
    "intersect_graphs",
    "is_chordal",
    "is_clique",
    "is_independent",
    "lex_bfs",
    "maximal_cliques_chordal",
    "product_cell_cover",
    "separate",
    "verify_certificate",
    "verify_cover",
    "verify_factorization",
    "verify_peo",
]
