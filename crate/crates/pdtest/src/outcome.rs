//! Timed test runs and the JSON form of their outcomes.

use std::time::Instant;

use pdtest_core::posdef;
use pdtest_core::{Algorithm, DynkinType, InputMatrix, Strategy, TestOptions, TestOutcome};
use serde::{Deserialize, Serialize};

/// Runs `algorithm` on `a` and records wall time on a monotonic clock. The
/// time covers building `Δ(A)` and the test itself.
pub fn run_timed(
    algorithm: Algorithm,
    a: &InputMatrix,
    options: &TestOptions,
) -> pdtest_core::Result<TestOutcome> {
    let start = Instant::now();
    let mut out = posdef::run(algorithm, a, options)?;
    out.elapsed_ms = round_ms(start.elapsed().as_secs_f64() * 1e3);
    Ok(out)
}

/// Rounds to millisecond resolution, keeping one decimal so sub-millisecond
/// runs do not all report zero.
fn round_ms(ms: f64) -> f64 {
    (ms * 10.0).round() / 10.0
}

/// The JSON result object of `pdtest check --json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutcomeRecord {
    pub positive: bool,
    pub dynkin: Option<String>,
    pub pair_inflations: usize,
    pub vertex_inflations: usize,
    pub algorithm: String,
    pub strategy: Option<u8>,
    pub seed: Option<u64>,
    pub elapsed_ms: f64,
    pub precheck_shortcircuit: bool,
    pub bound_exhausted: bool,
}

impl From<&TestOutcome> for OutcomeRecord {
    fn from(out: &TestOutcome) -> Self {
        Self {
            positive: out.positive,
            dynkin: out.dynkin.map(|t| t.to_string()),
            pair_inflations: out.pair_inflations(),
            vertex_inflations: out.vertex_inflations(),
            algorithm: out.algorithm.name().to_owned(),
            strategy: out.strategy.map(Strategy::tag),
            seed: out.seed,
            elapsed_ms: out.elapsed_ms,
            precheck_shortcircuit: out.precheck_shortcircuit,
            bound_exhausted: out.bound_exhausted,
        }
    }
}

impl OutcomeRecord {
    pub fn dynkin_type(&self) -> Option<DynkinType> {
        self.dynkin.as_deref().and_then(|s| s.parse().ok())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// Human-readable summary of an outcome.
pub fn describe(out: &TestOutcome) -> String {
    let mut s = format!(
        "{}: {}",
        out.algorithm,
        if out.positive { "positive definite" } else { "not positive definite" }
    );
    if let Some(t) = out.dynkin {
        s += &format!(", Dynkin type {t}");
    }
    if out.algorithm != Algorithm::Gauss {
        s += &format!(
            "\n  inflations: {} at a pair, {} at a vertex",
            out.pair_inflations(),
            out.vertex_inflations()
        );
        if let Some(strategy) = out.strategy {
            s += &format!("\n  strategy: {strategy}");
            if let Some(seed) = out.seed {
                s += &format!(", seed {seed}");
            }
        }
    }
    if out.precheck_shortcircuit {
        s += "\n  rejected by the coefficient precheck";
    }
    if out.bound_exhausted {
        s += "\n  inflation bound exhausted with dotted edges left";
    }
    s += &format!("\n  elapsed: {} ms", out.elapsed_ms);
    s
}
