//! The two inflation-based positive definiteness tests.
//!
//! Both tests work on the Gram bigraph `Δ(A)` of a uti matrix `A`. The pair
//! loop is cut off at [`igfpos`] (test 1) or [`igfposs`] (test 2, after the
//! positive-sincere-root phase); for a connected bigraph, reaching a Dynkin
//! graph within the bound is equivalent to positivity, for every strategy.
//!
//! Disconnected inputs are tested componentwise. Component `k` (ordered by
//! smallest vertex) draws from stream `k` of the seed.

use core::fmt;

use crate::bigraph::GramBigraph;
use crate::dynkin::{recognize_dynkin, DynkinType};
use crate::error::Result;
use crate::inflation::{run_pair_loop, run_root_loop, ExecutionLog, InflationStep, LoopExit, Strategy};
use crate::matrix::InputMatrix;
use crate::oracle::gauss_pos_def_test;
use crate::rng::SelectionRng;

/// Maximal number of pair inflations needed to reach a Dynkin graph from a
/// positive connected bigraph on `n` vertices.
pub fn igfpos(n: usize) -> usize {
    match n {
        1..=3 => (n * n - n) / 2,
        6 => 30,
        7 => 56,
        8 => 112,
        _ => n * n - 2 * n,
    }
}

/// As [`igfpos`], for bigraphs whose form admits a positive sincere root.
pub fn igfposs(n: usize) -> usize {
    match n {
        0..=3 => 0,
        6 => 5,
        7 => 10,
        8 => 21,
        _ => n - 3,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Inflations,
    RootInflations,
    Gauss,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] =
        [Algorithm::Inflations, Algorithm::RootInflations, Algorithm::Gauss];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Inflations => "inflations",
            Algorithm::RootInflations => "root-inflations",
            Algorithm::Gauss => "gauss",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.name() == name)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TestOptions {
    pub strategy: Strategy,
    /// Seed for the randomized strategies; `None` runs with seed 0.
    pub seed: Option<u64>,
    /// Reject early when a coefficient leaves `{-1, 0, 1}`, both on the
    /// input and after every pair inflation.
    pub precheck: bool,
    /// Leave the positive-sincere-root phase as soon as no dotted edge is
    /// left (test 2 only).
    pub early_exit: bool,
}

impl Default for TestOptions {
    fn default() -> Self {
        Self { strategy: Strategy::First, seed: None, precheck: true, early_exit: true }
    }
}

impl TestOptions {
    pub fn with_strategy(strategy: Strategy) -> Self {
        Self { strategy, ..Self::default() }
    }

    pub fn seeded(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

/// Inflation counts split by phase, summed over components.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PhaseCounts {
    /// Vertex inflations of the positive-sincere-root phase.
    pub root_vertex: usize,
    /// Pair inflations of the positive-sincere-root phase.
    pub root_pair: usize,
    /// Pair inflations of the bounded pair loop.
    pub pair: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TestOutcome {
    pub positive: bool,
    /// Dynkin type of the form; only for positive connected inputs.
    pub dynkin: Option<DynkinType>,
    /// All inflations performed, labeled by the input's vertices.
    pub log: ExecutionLog,
    pub phases: PhaseCounts,
    pub algorithm: Algorithm,
    pub strategy: Option<Strategy>,
    pub seed: Option<u64>,
    /// Wall time in milliseconds. The core crate has no clock and leaves
    /// this at 0; callers that time the run fill it in.
    pub elapsed_ms: f64,
    /// The input failed the coefficient precheck; nothing was inflated.
    pub precheck_shortcircuit: bool,
    /// The pair loop hit its bound with dotted edges left.
    pub bound_exhausted: bool,
}

impl TestOutcome {
    fn empty(algorithm: Algorithm, options: &TestOptions) -> Self {
        let (strategy, seed) = match algorithm {
            Algorithm::Gauss => (None, None),
            _ => (Some(options.strategy), options.seed),
        };
        Self {
            positive: false,
            dynkin: None,
            log: ExecutionLog::new(),
            phases: PhaseCounts::default(),
            algorithm,
            strategy,
            seed,
            elapsed_ms: 0.0,
            precheck_shortcircuit: false,
            bound_exhausted: false,
        }
    }

    pub fn pair_inflations(&self) -> usize {
        self.log.pair_count()
    }

    pub fn vertex_inflations(&self) -> usize {
        self.log.vertex_count()
    }
}

/// Test 1 on a uti matrix: `Δ(A)` through the pair loop bounded by
/// [`igfpos`], then Dynkin recognition.
pub fn pos_def_test_by_inflations(a: &InputMatrix, options: &TestOptions) -> Result<TestOutcome> {
    let g = a.triangularise()?;
    test_bigraph(Algorithm::Inflations, &g, options)
}

/// Test 2 on a uti matrix: positive-sincere-root phase, then the pair loop
/// bounded by [`igfposs`], then Dynkin recognition.
pub fn pos_def_test_by_root_inflations(
    a: &InputMatrix,
    options: &TestOptions,
) -> Result<TestOutcome> {
    let g = a.triangularise()?;
    test_bigraph(Algorithm::RootInflations, &g, options)
}

/// Runs `algorithm` on a matrix. The Gaussian oracle accepts any square
/// rational matrix; the inflation tests require a uti matrix.
pub fn run(algorithm: Algorithm, a: &InputMatrix, options: &TestOptions) -> Result<TestOutcome> {
    match algorithm {
        Algorithm::Gauss => {
            let mut out = TestOutcome::empty(Algorithm::Gauss, options);
            out.positive = gauss_pos_def_test(a);
            Ok(out)
        }
        _ => test_bigraph(algorithm, &a.triangularise()?, options),
    }
}

/// Runs `algorithm` on the Gram bigraph `g`.
pub fn test_bigraph(
    algorithm: Algorithm,
    g: &GramBigraph,
    options: &TestOptions,
) -> Result<TestOutcome> {
    if algorithm == Algorithm::Gauss {
        return run(algorithm, &InputMatrix::from_gram(g), options);
    }
    let mut out = TestOutcome::empty(algorithm, options);
    if options.precheck && !g.coefficient_precheck() {
        out.precheck_shortcircuit = true;
        return Ok(out);
    }
    let seed = options.seed.unwrap_or(0);
    if g.is_connected() {
        let verdict = test_connected(algorithm, g.clone(), options, seed, 0, &mut out)?;
        out.positive = verdict.is_some();
        out.dynkin = verdict;
        return Ok(out);
    }
    out.positive = true;
    for (k, comp) in g.connected_components().into_iter().enumerate() {
        let mut sub = TestOutcome::empty(algorithm, options);
        let verdict = test_connected(algorithm, comp.bigraph, options, seed, k as u64, &mut sub)?;
        out.log.extend_relabeled(&sub.log, &comp.vertices);
        out.phases.root_vertex += sub.phases.root_vertex;
        out.phases.root_pair += sub.phases.root_pair;
        out.phases.pair += sub.phases.pair;
        out.bound_exhausted |= sub.bound_exhausted;
        if verdict.is_none() {
            out.positive = false;
            break;
        }
    }
    Ok(out)
}

/// Tests one connected bigraph, recording the log and phase counts into
/// `out`. Returns the Dynkin type iff positive.
fn test_connected(
    algorithm: Algorithm,
    mut g: GramBigraph,
    options: &TestOptions,
    seed: u64,
    stream: u64,
    out: &mut TestOutcome,
) -> Result<Option<DynkinType>> {
    let n = g.n();
    let mut rng = SelectionRng::with_stream(seed, stream);
    let bound = match algorithm {
        Algorithm::Inflations => igfpos(n),
        Algorithm::RootInflations => {
            let mut root_log = ExecutionLog::new();
            let survived = run_root_phase(&mut g, options, &mut root_log)?;
            out.phases.root_vertex = root_log.vertex_count();
            out.phases.root_pair = root_log.pair_count();
            out.log.extend(&root_log);
            if !survived {
                return Ok(None);
            }
            igfposs(n)
        }
        Algorithm::Gauss => unreachable!("handled by the caller"),
    };
    let mut pair_log = ExecutionLog::new();
    let exit = run_pair_loop(&mut g, options.strategy, bound, &mut rng, options.precheck, &mut pair_log)?;
    out.phases.pair = pair_log.pair_count();
    out.log.extend(&pair_log);
    match exit {
        LoopExit::Graph => Ok(recognize_dynkin(&g)),
        LoopExit::BoundExhausted => {
            out.bound_exhausted = true;
            Ok(None)
        }
        LoopExit::CoefficientGuard => Ok(None),
    }
}

/// The positive-sincere-root phase with the optional coefficient guard.
/// Returns `false` if the guard ruled out positivity.
fn run_root_phase(g: &mut GramBigraph, options: &TestOptions, log: &mut ExecutionLog) -> Result<bool> {
    run_root_loop(g, options.early_exit, options.precheck, log)
}

/// Replays `log` on `g`, checking every step is defined.
pub fn replay(g: &GramBigraph, log: &ExecutionLog) -> Result<GramBigraph> {
    let mut out = g.clone();
    for step in log.steps() {
        match *step {
            InflationStep::AtVertex(a) => crate::inflation::inflate_at_vertex_mut(&mut out, a)?,
            InflationStep::AtPair(a, b) => crate::inflation::inflate_at_pair_mut(&mut out, a, b)?,
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_nakayama;

    #[test]
    fn igfpos_values() {
        let expected = [(1, 0), (2, 1), (3, 3), (4, 8), (5, 15), (6, 30), (7, 56), (8, 112), (9, 63), (10, 80)];
        for (n, v) in expected {
            assert_eq!(igfpos(n), v, "igfpos({n})");
        }
        assert_eq!(igfpos(400), 159_200);
    }

    #[test]
    fn igfposs_values() {
        let expected = [(1, 0), (2, 0), (3, 0), (4, 1), (5, 2), (6, 5), (7, 10), (8, 21), (9, 6), (12, 9)];
        for (n, v) in expected {
            assert_eq!(igfposs(n), v, "igfposs({n})");
        }
    }

    #[test]
    fn nakayama_four_both_tests() {
        let a = gen_nakayama(4);
        let opts = TestOptions::default();
        for out in [
            pos_def_test_by_inflations(&a, &opts).unwrap(),
            pos_def_test_by_root_inflations(&a, &opts).unwrap(),
        ] {
            assert!(out.positive);
            assert_eq!(out.dynkin, Some(DynkinType::A(4)));
        }
    }

    #[test]
    fn example_with_double_edges() {
        let g = GramBigraph::from_upper(4, alloc::vec![-2, 1, -1, 1, 0, 2]).unwrap();
        let a = InputMatrix::from_gram(&g);
        let out = pos_def_test_by_inflations(&a, &TestOptions::default()).unwrap();
        assert!(!out.positive);
        assert!(out.precheck_shortcircuit);
        let out = pos_def_test_by_root_inflations(&a, &TestOptions::default()).unwrap();
        assert!(!out.positive);
        assert!(out.precheck_shortcircuit);
        assert!(out.log.is_empty());
    }

    #[test]
    fn example_without_precheck() {
        let g = GramBigraph::from_upper(4, alloc::vec![-2, 1, -1, 1, 0, 2]).unwrap();
        let opts = TestOptions { precheck: false, ..TestOptions::default() };
        for alg in [Algorithm::Inflations, Algorithm::RootInflations] {
            let out = test_bigraph(alg, &g, &opts).unwrap();
            assert!(!out.positive, "{alg}");
            assert!(!out.precheck_shortcircuit);
        }
    }

    #[test]
    fn identity_is_positive_without_type() {
        let out = pos_def_test_by_inflations(&InputMatrix::identity(3), &TestOptions::default()).unwrap();
        assert!(out.positive);
        assert_eq!(out.dynkin, None);
        assert!(out.log.is_empty());
    }

    #[test]
    fn one_by_one() {
        let a = InputMatrix::identity(1);
        let out = pos_def_test_by_root_inflations(&a, &TestOptions::default()).unwrap();
        assert!(out.positive);
        assert_eq!(out.dynkin, Some(DynkinType::A(1)));
    }

    #[test]
    fn disconnected_with_negative_component() {
        // A(2) on {1, 3} and a dotted double edge on {2, 4}.
        let g = GramBigraph::from_edges(4, &[(1, 3, -1), (2, 4, 2)]).unwrap();
        let opts = TestOptions { precheck: false, ..TestOptions::default() };
        for alg in [Algorithm::Inflations, Algorithm::RootInflations] {
            let out = test_bigraph(alg, &g, &opts).unwrap();
            assert!(!out.positive);
            assert_eq!(out.dynkin, None);
        }
    }

    #[test]
    fn errors_propagate() {
        let a = InputMatrix::from_integers(2, &[2, 0, 0, 1]).unwrap();
        assert!(pos_def_test_by_inflations(&a, &TestOptions::default()).is_err());
        // The oracle takes any square matrix.
        assert!(run(Algorithm::Gauss, &a, &TestOptions::default()).unwrap().positive);
    }

    #[test]
    fn replay_reproduces_final_bigraph() {
        let g = gen_nakayama(9).triangularise().unwrap();
        let out = test_bigraph(Algorithm::Inflations, &g, &TestOptions::default()).unwrap();
        let h = replay(&g, &out.log).unwrap();
        assert_eq!(recognize_dynkin(&h), Some(DynkinType::A(9)));
    }

    #[test]
    fn algorithm_names() {
        for a in Algorithm::ALL {
            assert_eq!(Algorithm::from_name(a.name()), Some(a));
        }
    }
}
