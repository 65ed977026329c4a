//! Exact computation of the chromatic edge-stability number of small
//! graphs, recognition and generation of the structured families of
//! (3,2)-critical graphs, the clique-gluing reduction between chromatic
//! criticality and (k,2)-criticality, and exhaustive small-graph scans that
//! verify the structural theorems behind all of it.
//!
//! Everything is exact and deterministic: complete backtracking solvers,
//! branch and bound with proven bounds, and brute-force canonical forms.
//! Graphs are immutable values, safe to share across the parallel scans.

pub mod canon;
pub mod coloring;
pub mod cycles;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod reduction;
pub mod stability;
pub mod subdivision;

pub use canon::{canonical_copy, canonical_form, CanonError, MAX_CANON_ORDER};
pub use coloring::{chromatic_number, is_k_colorable, Coloring};
pub use cycles::{count_odd_cycles, OddCycleCensus};
pub use families::{
    classify_family, enumerate_family_members, generate, DPattern, FamilyError, FamilyParams,
    FamilyTag,
};
pub use graph::{
    is_bipartite, parse_edge_list, write_edge_list, Bipartiteness, Edge, EdgeListError, Graph,
    GraphError,
};
pub use graph6::{parse_graph6, write_graph6, Graph6Error, MAX_GRAPH6_ORDER};
pub use harness::{
    enumerate_small_graphs, extend_census, scan_graph6_lines, scan_graph6_lines_detailed,
    theorem1_evidence_for_order, verify_theorem1, AnalyzedRow, CriticalEntry, HarnessError,
    LemmaViolation, OrderCounts, ParseFailure, ScanChecks, ScanReport, Theorem1Evidence,
    Theorem1Report, MAX_BUILTIN_ENUMERATION_ORDER,
};
pub use reduction::{bowtie, is_chromatic_critical, verify_reduction, ReductionError, ReductionResult};
pub use stability::{
    analyze, bipartite_edge_frustration, classify_critical, edge_stability,
    is_edge_stability_critical, recognize_32_critical_fast, CriticalityRecord, StabilityError,
    CENSUS_CUTOFF,
};
pub use subdivision::{find_any_pattern, find_subdivision, PatternKind, SubdivisionEmbedding};
