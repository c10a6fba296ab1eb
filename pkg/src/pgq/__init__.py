"""Exact feasibility conditions and concrete-graph verification for
strongly regular graphs of (pseudo-)generalized-quadrangle form."""

from .bounds import (
    BoundChoice,
    BoundResult,
    OptimalBound,
    RuleOut,
    claw_bound_terms,
    claw_inequality_check,
    neumaier_bound,
    optimal_claw_bound,
    pgq_ruled_out,
    quadratic_bound_witness,
    quadratic_claw_bound,
)
from .errors import DomainError, FormatError, InternalInconsistencyError, PgqError
from .graph import (
    ClawCheck,
    CliqueCover,
    CoverCheck,
    Graph,
    LocalGraph,
    PartitionResult,
    SrgCheck,
    claw_lower_bound_check,
    claw_number,
    clique_partition_of_local,
    local_graph,
    parse_pgqgraph,
    verify_clique_cover,
    verify_srg,
    write_pgqgraph,
)
from .incidence import (
    AxiomCheck,
    ExtractionResult,
    IncidenceStructure,
    collinearity_graph,
    dual,
    extract_gq,
    gen_complete_bipartite,
    gen_kneser_6_2,
    gen_rook,
    gen_shrikhande,
    gen_symplectic_w3,
    parse_pgqinc,
    verify_axioms,
    write_pgqinc,
)
from .params import (
    GQParams,
    Spectrum,
    SrgParams,
    Verdict,
    derive_srg,
    gq_possible,
    identify_gq_form,
    krein_check,
    multiplicity_integrality,
    spectrum_of,
)
from .scan import (
    CONDITION_ORDER,
    FeasibilityReport,
    ScanRange,
    check_one,
    emit,
    emit_csv,
    emit_json,
    scan,
)

__version__ = "1.0.0"

__all__ = [
    "AxiomCheck",
    "BoundChoice",
    "BoundResult",
    "CONDITION_ORDER",
    "ClawCheck",
    "CliqueCover",
    "CoverCheck",
    "DomainError",
    "ExtractionResult",
    "FeasibilityReport",
    "FormatError",
    "GQParams",
    "Graph",
    "IncidenceStructure",
    "InternalInconsistencyError",
    "LocalGraph",
    "OptimalBound",
    "PartitionResult",
    "PgqError",
    "RuleOut",
    "ScanRange",
    "Spectrum",
    "SrgCheck",
    "SrgParams",
    "Verdict",
    "check_one",
    "claw_bound_terms",
    "claw_inequality_check",
    "claw_lower_bound_check",
    "claw_number",
    "clique_partition_of_local",
    "collinearity_graph",
    "derive_srg",
    "dual",
    "emit",
    "emit_csv",
    "emit_json",
    "extract_gq",
    "gen_complete_bipartite",
    "gen_kneser_6_2",
    "gen_rook",
    "gen_shrikhande",
    "gen_symplectic_w3",
    "gq_possible",
    "identify_gq_form",
    "krein_check",
    "local_graph",
    "multiplicity_integrality",
    "neumaier_bound",
    "optimal_claw_bound",
    "parse_pgqgraph",
    "parse_pgqinc",
    "pgq_ruled_out",
    "quadratic_bound_witness",
    "quadratic_claw_bound",
    "scan",
    "spectrum_of",
    "verify_axioms",
    "verify_clique_cover",
    "verify_srg",
    "write_pgqgraph",
    "write_pgqinc",
]
