"""Vertex connectivity and super-connectivity with machine-checkable certificates."""

from ._kappa1 import (
    ClaimReport,
    ClaimSweepResult,
    ClassSweepStats,
    CutCertificate,
    EdgePairBound,
    EdgePairTerminals,
    Graph,
    Kappa1Error,
    KappaOracleResult,
    KneserParams,
    LabelSet,
    LowerWitness,
    MinCutAnswer,
    OracleBudget,
    OracleStatus,
    ResidualIdentity,
    Strategy,
    SuperConnectivityResult,
    SuperCutCertificate,
    SuperOracleResult,
    SuperStatus,
    TheoremReport,
    TripleClass,
    TripleKind,
    ValidationReport,
    Verdict,
    VertexConnectivity,
    binomial,
    brute_force_super_connectivity,
    brute_force_vertex_connectivity,
    claim_bound,
    claim_sweep,
    classify_triple,
    conjecture_value,
    constructive_super_cut,
    disjoint_paths,
    edge_pair_lower_bound,
    is_super_connected,
    kneser_graph,
    load_graph_file,
    meeting_count,
    min_vertex_cut,
    parse_graph,
    rank_subset,
    residual_identity,
    save_graph_file,
    super_connectivity,
    super_report_json,
    theorem_report_json,
    unrank_subset,
    validate_super_cut,
    verify_theorem,
    vertex_connectivity,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
