//! Weakly toll convexity on finite simple graphs.
//!
//! The crate computes weakly toll walk membership, the interval and hull
//! operators, extreme vertices, true-twin classes, clique-separator atoms,
//! and the three invariants: interval number ([`wtn`]), hull number
//! ([`wth`]) and convexity number ([`wtc_exact`]). A walk-enumeration
//! [`oracle`] and brute-force solvers exist for cross-checking on small
//! graphs.

pub mod atoms;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod interval;
pub mod numbers;
pub mod oracle;
pub mod twins;
pub mod wtc;

pub use atoms::{decompose, extremal_atoms, is_prime, AtomDecomposition};
pub use error::{Error, Result};
pub use format::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
pub use graph::{connected_components, is_clique, is_complete, max_clique, Graph, Vertex, VertexSet};
pub use interval::{
    blocked_set, extreme_vertices, hull, in_weakly_toll_walk, interval, is_convex, MembershipWitness,
};
pub use numbers::{brute_force_wth, brute_force_wtn, wth, wtn, CaseTag, InvariantResult};
pub use twins::{extreme_twin_classes, representatives, twin_classes, TwinPartition};
pub use wtc::{clique_reduction, wtc_exact, ReductionOutput};
