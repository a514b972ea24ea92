//! File formats, the `check` runner and the benchmark harness behind the
//! `pdtest` binary.

pub mod bench;
pub mod check;
pub mod format;
pub mod outcome;
