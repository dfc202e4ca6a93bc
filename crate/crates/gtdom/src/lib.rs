//! Grundy total domination: exact and structural solvers.
//!
//! A sequence of distinct vertices is a *legal open-neighborhood sequence* if
//! every entry totally dominates (is adjacent to) at least one vertex not
//! dominated by the earlier entries. The maximum length of such a sequence is
//! the Grundy total domination number of the graph, here written `gamma_gr_t`.
//! On graphs with isolated vertices the extended convention applies: the value
//! is the maximum legal-sequence length, and an edgeless graph has value 0.
//!
//! The crate provides:
//!
//! - [`Graph`] and [`VertexSet`]: immutable simple graphs over dense ids.
//! - [`verify_sequence`] / [`LegalSequence`]: certificates and verdicts.
//! - [`grundy_exact`]: an exhaustive, memoized oracle for small graphs.
//! - [`grundy_tree`], [`grundy_forest`], [`grundy_bdh`], [`grundy_p4tidy`]:
//!   polynomial solvers for trees, forests, bipartite distance-hereditary
//!   graphs and P4-tidy graphs.
//! - [`build_mdt`] / [`solve_via_mdt`]: modular decomposition and the
//!   union/join combination rules that drive the structural solvers.
//! - [`bounds`]: independent enumerators for the invariants that sandwich
//!   `gamma_gr_t` (vertex cover, matchings, `delta_k`, total domination).
//! - [`families`]: generators for named graph families and the split-graph
//!   doubling reduction.

pub mod bdh;
pub mod bounds;
pub mod families;
pub mod graph;
pub mod io;
pub mod mdt;
pub mod oracle;
pub mod p4tidy;
pub mod sequence;
pub mod tree;

pub use bdh::{grundy_bdh, grundy_forest, pruning_sequence, PruneKind, PruningSequence, PruningTriple};
pub use bounds::{
    bound_report, check_all_bounds, delta_k, matching_number, semistrong_matching_number,
    strong_matching_number, total_domination_number, vertex_cover_number, BoundCheck, BoundReport,
};
pub use families::{expected_gamma, generate, spider_graph, split_reduction, FamilySpec, HeadSpec};
pub use graph::{Graph, GraphError, TwinKind, VertexSet};
pub use mdt::{
    build_mdt, combine_union, combine_join, is_modular, solve_via_mdt, LeafSolution, MdTree,
    MdtNode, MdtOp, SolveError,
};
pub use oracle::{grundy_exact, OracleResult, DEFAULT_VERTEX_CAP};
pub use p4tidy::{classify_leaf, grundy_p4tidy, grundy_spider, LeafClass, SpiderKind, SpiderPartition, SpiderSide};
pub use sequence::{concatenate, eta, verify_sequence, LegalSequence, SequenceError, SequenceVerdict};
pub use tree::{grundy_tree, tree_vertex_cover, TreeError, TreeRunTrace};
