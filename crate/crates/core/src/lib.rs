//! Inflation-based positive definiteness tests for unidiagonal
//! triangle-integral (uti) matrices.
//!
//! A uti matrix `A` is folded into its triangularisation, the upper-triangular
//! Gram matrix of a loop-free edge-bipartite graph (bigraph). Negative Gram
//! coefficients are solid edges, positive ones dotted edges. Two decision
//! procedures are provided:
//!
//! * [`posdef::pos_def_test_by_inflations`] runs pair inflations until the
//!   bigraph becomes a graph, bounded by [`posdef::igfpos`].
//! * [`posdef::pos_def_test_by_root_inflations`] first moves the bigraph to
//!   one whose form has a positive sincere root, then runs the pair loop
//!   bounded by [`posdef::igfposs`].
//!
//! The input is positive definite iff the final graph is a Dynkin graph; its
//! [`DynkinType`] is reported as a side effect. An exact-rational Gaussian
//! elimination test and a brute-force root search live in [`oracle`] as
//! independent ground truth.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bigraph;
pub mod dynkin;
mod error;
pub mod generators;
pub mod inflation;
pub mod matrix;
pub mod oracle;
pub mod posdef;
pub mod rng;

pub use bigraph::{GramBigraph, IntVector};
pub use dynkin::{recognize_dynkin, DynkinType};
pub use error::{Error, Result};
pub use inflation::{ExecutionLog, InflationStep, Strategy};
pub use matrix::InputMatrix;
pub use posdef::{Algorithm, TestOptions, TestOutcome};
pub use rng::SelectionRng;
