//! Global coalitions in graphs.
//!
//! A set of vertices is *globally dominating* when it dominates both `G`
//! and its complement. A gc-partition splits the vertices into classes none
//! of which is globally dominating on its own, while each has a partner
//! class whose union with it is. This crate verifies such partitions,
//! constructs them, computes the largest one exactly, and checks the
//! closed forms known for standard graph families.
//!
//! ```
//! use globcoal::{max_partition, Graph, Kind, SolveOptions};
//!
//! let p5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])?;
//! let r = max_partition(&p5, Kind::Gc, &SolveOptions::default())?;
//! assert_eq!(r.value, 4);
//! # Ok::<(), globcoal::Error>(())
//! ```

pub mod check;
pub mod coalition;
pub mod domination;
pub mod enumerate;
mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod iso;
pub mod partition;
pub mod solver;
pub mod vertex_set;

pub use check::{check_theorem, CheckOptions, Report, Row, Status, TheoremId};
pub use coalition::{
    build_gcg, count_gc_partners, gc_partner_bound, is_c_pair, is_gc_pair, is_pair, is_prc_pair, verify_partition,
    CoalitionGraph, Kind, PartitionVerdict, Reason, Violation,
};
pub use domination::{
    gamma, gamma_g, global_domatic, is_dominating, is_global_dominating, is_perfect_dominating, minimal_gds_within,
    DomaticWitness, DominationReport, MinimumSet,
};
pub use error::{Error, Result};
pub use families::{
    closed_form_gc, enumerate_unicyclic, generate, is_t1_or_t2, proof_partition, Bound, FamilySpec, Membership,
    Unicyclic,
};
pub use graph::{Girth, Graph, Metrics, Structure, SupportLeaves, TreeClass};
pub use iso::{invariant_hash, is_isomorphic, IsoSet};
pub use partition::Partition;
pub use solver::{
    construct_center_partition, construct_gc_from_domatic, max_partition, SolveOptions, SolveResult, DEFAULT_BUDGET,
};
pub use vertex_set::VertexSet;

/// Largest supported order; vertex sets are single machine words.
pub const MAX_VERTICES: usize = 64;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/domination.md")]
    mod domination {}
    #[doc = include_str!("../../../book/src/coalitions.md")]
    mod coalitions {}
    #[doc = include_str!("../../../book/src/solver.md")]
    mod solver {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/checks.md")]
    mod checks {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
