//! Partitioning interval graphs into induced subgraphs of bounded claw
//! number.
//!
//! Graphs are given as families of open intervals with integer endpoints
//! ([`IntervalFamily`]). The crate provides the basic parameters (ψ, α, ϑ),
//! the closed forms μ(k,v) and κ(n,v), generators for the extremal families,
//! constructive partitions, an exhaustive branch-and-bound search and a
//! layer-peeling approximation.
//!
//! ```
//! use clawpart::{build_a, claw_number, partition_optimal_kappa, verify_partition};
//!
//! let f = build_a(3, 1).unwrap();
//! assert_eq!(claw_number(&f), 4);
//! let p = partition_optimal_kappa(&f, 1);
//! assert_eq!(p.parts_count(), 3);
//! assert_eq!(verify_partition(&f, &p, 1).unwrap(), None);
//! ```
//!
//! The `parallel` feature (on by default) runs the data-parallel helpers in
//! [`par`] on rayon and enables multi-threaded search.

mod approx;
mod claw;
mod constructions;
mod cover;
mod error;
mod format;
mod formula;
mod interval;
pub mod par;
mod partition;
mod search;

pub use approx::{approx_min_partition, partition_claw_v_plus_2, peel_layers, ratio_cap, ApproxReport, PeelResult};
pub use claw::{claw_number, claw_number_seq, find_claw, max_disjoint_properly_contained, ClawWitness};
pub use constructions::{
    build_a, build_gardi_fixture, build_j3, build_j4, build_j5, build_j6, build_random, trim_to_claw_number,
    ConstructionSpec, MAX_GENERATED,
};
pub use cover::{independence_number, sweepline_cover, CliqueCover};
pub use error::{Error, Result};
pub use format::{parse_family, parse_partition, write_family, write_partition};
pub use formula::{kappa_formula, kappa_hat_bounds, kappa_hat_upper_generic, mu_formula, KAPPA_HAT_EXACT};
pub use interval::{intersects, properly_contains, Interval, IntervalFamily, IntervalId};
pub use partition::{
    decompose_2r_plus_1, partition_by_theta, partition_claw_bounded, partition_cluster_mod_w, partition_optimal_kappa,
    partition_w3_to_v2, partition_w5_to_v3, verify_partition, Partition, TwoRPlusOneDecomposition,
};
pub use search::{
    exact_min_partition, exists_good_partition, MinPartitionOutcome, SearchOptions, SearchOutcome, SearchResult,
};
