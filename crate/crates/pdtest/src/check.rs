//! The `check` command: test one matrix file and map the verdict to an exit
//! code.

use std::path::PathBuf;

use pdtest_core::{Algorithm, Strategy, TestOptions, TestOutcome};

use crate::format::{read_matrix, ParseError};
use crate::outcome::run_timed;

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NOT_POSITIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRequest {
    pub path: PathBuf,
    pub algorithm: Algorithm,
    /// `None` keeps the default strategy 0.
    pub strategy: Option<Strategy>,
    pub seed: Option<u64>,
    pub precheck: bool,
    pub early_exit: bool,
}

impl CheckRequest {
    pub fn new(path: impl Into<PathBuf>, algorithm: Algorithm) -> Self {
        Self {
            path: path.into(),
            algorithm,
            strategy: None,
            seed: None,
            precheck: true,
            early_exit: true,
        }
    }

    /// Warnings about options that do not apply to the chosen algorithm.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.algorithm == Algorithm::Gauss {
            if self.strategy.is_some() {
                out.push("--strategy is ignored by the gauss algorithm".to_owned());
            }
            if self.seed.is_some() {
                out.push("--seed is ignored by the gauss algorithm".to_owned());
            }
        } else if self.seed.is_some() && !self.strategy.is_some_and(Strategy::is_randomized) {
            out.push("--seed has no effect with a deterministic strategy".to_owned());
        }
        out
    }

    pub fn options(&self) -> TestOptions {
        TestOptions {
            strategy: self.strategy.unwrap_or(Strategy::First),
            seed: self.seed,
            precheck: self.precheck,
            early_exit: self.early_exit,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CheckError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Test(#[from] pdtest_core::Error),
}

/// Reads the matrix and runs the test. Timing excludes parsing.
pub fn run_check(req: &CheckRequest) -> Result<TestOutcome, CheckError> {
    let a = read_matrix(&req.path)?;
    Ok(run_timed(req.algorithm, &a, &req.options())?)
}

pub fn exit_code(result: &Result<TestOutcome, CheckError>) -> i32 {
    match result {
        Ok(out) if out.positive => EXIT_POSITIVE,
        Ok(_) => EXIT_NOT_POSITIVE,
        Err(_) => EXIT_ERROR,
    }
}
