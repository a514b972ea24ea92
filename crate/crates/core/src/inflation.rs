//! Inflations at a vertex and at a pair, dotted-edge selection strategies,
//! and the two execution procedures built from them.
//!
//! Both inflations are integral congruences of the Gram form, so they keep
//! connectivity and positivity of a bigraph. An inflation at a pair `(a, b)`
//! touches only coefficients incident with `b`, hence costs `O(n)`.

use alloc::vec::Vec;
use core::fmt;

use crate::bigraph::GramBigraph;
use crate::error::{Error, Result};
use crate::rng::SelectionRng;

/// Dotted-edge selection policy of the pair-inflation loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strategy {
    /// Lexicographically smallest dotted pair.
    First = 0,
    /// Lexicographically greatest dotted pair.
    Last = 1,
    /// First or last, by a fair coin.
    FirstOrLast = 2,
    /// Uniform over all dotted pairs.
    UniformRandom = 3,
}

impl Strategy {
    pub const ALL: [Strategy; 4] =
        [Strategy::First, Strategy::Last, Strategy::FirstOrLast, Strategy::UniformRandom];

    pub fn from_tag(tag: u8) -> Option<Self> {
        Self::ALL.get(usize::from(tag)).copied()
    }

    pub fn tag(self) -> u8 {
        self as u8
    }

    pub fn is_randomized(self) -> bool {
        matches!(self, Strategy::FirstOrLast | Strategy::UniformRandom)
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// One inflation, with 1-based vertex labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InflationStep {
    AtVertex(usize),
    AtPair(usize, usize),
}

impl InflationStep {
    fn relabel(self, map: &[usize]) -> Self {
        match self {
            InflationStep::AtVertex(a) => InflationStep::AtVertex(map[a - 1]),
            InflationStep::AtPair(a, b) => InflationStep::AtPair(map[a - 1], map[b - 1]),
        }
    }
}

impl fmt::Display for InflationStep {
    /// Trace line: `V a` or `P a b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            InflationStep::AtVertex(a) => write!(f, "V {a}"),
            InflationStep::AtPair(a, b) => write!(f, "P {a} {b}"),
        }
    }
}

/// An execution: the ordered inflations applied to a bigraph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ExecutionLog {
    steps: Vec<InflationStep>,
    pair_count: usize,
    vertex_count: usize,
}

impl ExecutionLog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, step: InflationStep) {
        match step {
            InflationStep::AtVertex(_) => self.vertex_count += 1,
            InflationStep::AtPair(..) => self.pair_count += 1,
        }
        self.steps.push(step);
    }

    pub fn steps(&self) -> &[InflationStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn pair_count(&self) -> usize {
        self.pair_count
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Appends `other`, mapping its vertex `k` to `map[k - 1]`.
    pub fn extend_relabeled(&mut self, other: &ExecutionLog, map: &[usize]) {
        for step in &other.steps {
            self.push(step.relabel(map));
        }
    }

    pub fn extend(&mut self, other: &ExecutionLog) {
        for &step in &other.steps {
            self.push(step);
        }
    }
}

impl fmt::Display for ExecutionLog {
    /// Line-oriented trace, one step per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

/// Negates every coefficient incident with `a`, in place.
pub fn inflate_at_vertex_mut(g: &mut GramBigraph, a: usize) -> Result<()> {
    g.check_vertex(a)?;
    let a0 = a - 1;
    for c in 0..g.n() {
        if c != a0 {
            let d = g.d0(a0, c);
            if d != 0 {
                g.set0(a0, c, d.checked_neg().ok_or(Error::Overflow)?);
            }
        }
    }
    Ok(())
}

/// Inflation at the vertex `a`: every solid edge at `a` becomes dotted and
/// vice versa.
pub fn inflate_at_vertex(g: &GramBigraph, a: usize) -> Result<GramBigraph> {
    let mut out = g.clone();
    inflate_at_vertex_mut(&mut out, a)?;
    Ok(out)
}

/// Inflation at the pair `(a, b)`, in place. Requires `d_ab > 0`.
///
/// Sets `d_ab := -d_ab` and `d_bc := d_bc - d_ac * d_ab` for every other `c`.
/// On error the bigraph is left unchanged.
pub fn inflate_at_pair_mut(g: &mut GramBigraph, a: usize, b: usize) -> Result<()> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(Error::NotDefined(a, b));
    }
    let (a0, b0) = (a - 1, b - 1);
    let dab = g.d0(a0, b0);
    if dab <= 0 {
        return Err(Error::NotDefined(a, b));
    }
    let n = g.n();
    // Compute first so an overflow leaves `g` untouched.
    let mut updates = Vec::new();
    for c in 0..n {
        if c == a0 || c == b0 {
            continue;
        }
        let dac = g.d0(a0, c);
        if dac != 0 {
            let prod = dac.checked_mul(dab).ok_or(Error::Overflow)?;
            let next = g.d0(b0, c).checked_sub(prod).ok_or(Error::Overflow)?;
            updates.push((c, next));
        }
    }
    for (c, next) in updates {
        g.set0(b0, c, next);
    }
    g.set0(a0, b0, -dab);
    Ok(())
}

/// Inflation at the pair `(a, b)`; `infl_{a,b}` and `infl_{b,a}` differ in
/// general.
pub fn inflate_at_pair(g: &GramBigraph, a: usize, b: usize) -> Result<GramBigraph> {
    let mut out = g.clone();
    inflate_at_pair_mut(&mut out, a, b)?;
    Ok(out)
}

/// Picks a dotted pair `(a, b)`, `a < b`, according to `strategy`. Returns
/// `None` iff the bigraph has no dotted edge. Pairs are sampled, not
/// parallel edges.
pub fn select_dotted_edge(
    g: &GramBigraph,
    strategy: Strategy,
    rng: &mut SelectionRng,
) -> Option<(usize, usize)> {
    if !g.has_dotted() {
        return None;
    }
    match strategy {
        Strategy::First => first_dotted(g),
        Strategy::Last => last_dotted(g),
        Strategy::FirstOrLast => {
            if rng.coin() {
                first_dotted(g)
            } else {
                last_dotted(g)
            }
        }
        Strategy::UniformRandom => {
            let k = rng.index(g.dotted_pairs());
            nth_dotted(g, k)
        }
    }
}

/// Converts a flat upper-triangle position back to 1-based `(i, j)`.
fn pair_at(n: usize, mut pos: usize) -> (usize, usize) {
    let mut i = 0;
    loop {
        let row_len = n - i - 1;
        if pos < row_len {
            return (i + 1, i + pos + 2);
        }
        pos -= row_len;
        i += 1;
    }
}

fn first_dotted(g: &GramBigraph) -> Option<(usize, usize)> {
    g.upper().iter().position(|&d| d > 0).map(|p| pair_at(g.n(), p))
}

fn last_dotted(g: &GramBigraph) -> Option<(usize, usize)> {
    g.upper().iter().rposition(|&d| d > 0).map(|p| pair_at(g.n(), p))
}

fn nth_dotted(g: &GramBigraph, k: usize) -> Option<(usize, usize)> {
    g.upper()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > 0)
        .nth(k)
        .map(|(p, _)| pair_at(g.n(), p))
}

/// Why the pair-inflation loop stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoopExit {
    /// No dotted edge is left.
    Graph,
    /// `bound` inflations were performed with dotted edges remaining.
    BoundExhausted,
    /// A coefficient outside `{-1, 0, 1}` appeared (only with the guard on).
    CoefficientGuard,
}

/// The pair-inflation loop: while a dotted pair exists, select one by
/// `strategy` and inflate at it as `infl_{a,b}` with `a < b`. Stops after
/// `bound` inflations.
pub fn inflations_at_pair_bounded(
    g: &GramBigraph,
    strategy: Strategy,
    bound: usize,
    rng: &mut SelectionRng,
) -> Result<(GramBigraph, ExecutionLog)> {
    let mut out = g.clone();
    let mut log = ExecutionLog::new();
    run_pair_loop(&mut out, strategy, bound, rng, false, &mut log)?;
    Ok((out, log))
}

/// The loop behind [`inflations_at_pair_bounded`]. With `guard` set it also
/// stops as soon as an inflation produces a coefficient of absolute value at
/// least 2, which rules out positivity.
pub(crate) fn run_pair_loop(
    g: &mut GramBigraph,
    strategy: Strategy,
    bound: usize,
    rng: &mut SelectionRng,
    guard: bool,
    log: &mut ExecutionLog,
) -> Result<LoopExit> {
    let mut performed = 0;
    loop {
        if !g.has_dotted() {
            return Ok(LoopExit::Graph);
        }
        if performed == bound {
            return Ok(LoopExit::BoundExhausted);
        }
        let (a, b) = select_dotted_edge(g, strategy, rng).expect("dotted pair exists");
        inflate_at_pair_mut(g, a, b)?;
        log.push(InflationStep::AtPair(a, b));
        performed += 1;
        if guard && !row_within_unit(g, b) {
            return Ok(LoopExit::CoefficientGuard);
        }
    }
}

fn row_within_unit(g: &GramBigraph, b: usize) -> bool {
    let b0 = b - 1;
    (0..g.n()).all(|c| c == b0 || (-1..=1).contains(&g.d0(b0, c)))
}

/// Moves a connected bigraph to one whose form admits a positive sincere
/// root, growing a vertex set `S` from `{1}`.
///
/// Each round takes the lexicographically smallest `(a, b)` with `a` in `S`,
/// `b` outside and `d_ab != 0`. If the edge is solid, `b` is inflated first;
/// then `infl_{b,a}` is applied and `b` joins `S`. With `early_exit`, the
/// procedure stops at the start of any round where no dotted edge is left.
pub fn inflations_to_pos_sincere_root(
    g: &GramBigraph,
    early_exit: bool,
) -> Result<(GramBigraph, ExecutionLog)> {
    let mut out = g.clone();
    let mut log = ExecutionLog::new();
    run_root_loop(&mut out, early_exit, false, &mut log)?;
    Ok((out, log))
}

/// The loop behind [`inflations_to_pos_sincere_root`]. With `guard` set it
/// returns `Ok(false)` as soon as a coefficient of absolute value at least 2
/// appears.
pub(crate) fn run_root_loop(
    g: &mut GramBigraph,
    early_exit: bool,
    guard: bool,
    log: &mut ExecutionLog,
) -> Result<bool> {
    let n = g.n();
    let mut in_s = alloc::vec![false; n];
    in_s[0] = true;
    for _ in 1..n {
        if early_exit && !g.has_dotted() {
            break;
        }
        let (a0, b0) = (0..n)
            .filter(|&a| in_s[a])
            .find_map(|a| (0..n).find(|&b| !in_s[b] && g.d0(a, b) != 0).map(|b| (a, b)))
            .ok_or(Error::Disconnected)?;
        let (a, b) = (a0 + 1, b0 + 1);
        if g.d0(a0, b0) < 0 {
            inflate_at_vertex_mut(g, b)?;
            log.push(InflationStep::AtVertex(b));
        }
        inflate_at_pair_mut(g, b, a)?;
        log.push(InflationStep::AtPair(b, a));
        in_s[b0] = true;
        if guard && !row_within_unit(g, a) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn g3() -> GramBigraph {
        GramBigraph::from_edges(3, &[(1, 2, 1), (1, 3, -1)]).unwrap()
    }

    #[test]
    fn vertex_inflation_flips_signs() {
        let nak2 = GramBigraph::from_upper(2, vec![-1]).unwrap();
        let h = inflate_at_vertex(&nak2, 2).unwrap();
        assert_eq!(h.d(1, 2), 1);
        assert_eq!(inflate_at_vertex(&h, 2).unwrap(), nak2);
    }

    #[test]
    fn vertex_inflation_isolated_vertex() {
        let g = GramBigraph::from_edges(3, &[(1, 2, -1)]).unwrap();
        assert_eq!(inflate_at_vertex(&g, 3).unwrap(), g);
        assert_eq!(
            inflate_at_vertex(&g, 4),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
    }

    #[test]
    fn pair_inflation_formula() {
        let h = inflate_at_pair(&g3(), 1, 2).unwrap();
        assert_eq!((h.d(1, 2), h.d(1, 3), h.d(2, 3)), (-1, -1, 1));
    }

    #[test]
    fn pair_inflation_orientation_matters() {
        let h = inflate_at_pair(&g3(), 2, 1).unwrap();
        assert_eq!((h.d(1, 2), h.d(1, 3), h.d(2, 3)), (-1, -1, 0));
        assert_ne!(h, inflate_at_pair(&g3(), 1, 2).unwrap());
    }

    #[test]
    fn pair_inflation_needs_dotted_edge() {
        let g = g3();
        assert_eq!(inflate_at_pair(&g, 2, 3), Err(Error::NotDefined(2, 3)));
        assert_eq!(inflate_at_pair(&g, 1, 3), Err(Error::NotDefined(1, 3)));
        assert_eq!(inflate_at_pair(&g, 1, 1), Err(Error::NotDefined(1, 1)));
    }

    #[test]
    fn pair_inflation_overflow_is_an_error() {
        let mut g = GramBigraph::from_edges(3, &[(1, 2, i64::MAX), (1, 3, 2)]).unwrap();
        let before = g.clone();
        assert_eq!(inflate_at_pair_mut(&mut g, 1, 2), Err(Error::Overflow));
        assert_eq!(g, before);
    }

    #[test]
    fn pair_at_roundtrip() {
        let n = 6;
        let mut p = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                assert_eq!(pair_at(n, p), (i, j));
                p += 1;
            }
        }
    }

    #[test]
    fn selection() {
        let g = GramBigraph::from_edges(4, &[(1, 3, 1), (2, 4, 1), (1, 2, -1)]).unwrap();
        let mut rng = SelectionRng::new(0);
        assert_eq!(select_dotted_edge(&g, Strategy::First, &mut rng), Some((1, 3)));
        assert_eq!(select_dotted_edge(&g, Strategy::Last, &mut rng), Some((2, 4)));
        for s in [Strategy::FirstOrLast, Strategy::UniformRandom] {
            for _ in 0..20 {
                let p = select_dotted_edge(&g, s, &mut rng).unwrap();
                assert!(p == (1, 3) || p == (2, 4));
            }
        }
        let solid = GramBigraph::from_edges(3, &[(1, 2, -1)]).unwrap();
        for s in Strategy::ALL {
            assert_eq!(select_dotted_edge(&solid, s, &mut rng), None);
        }
    }

    #[test]
    fn uniform_selection_hits_every_pair() {
        let g = GramBigraph::from_edges(4, &[(1, 2, 1), (1, 4, 3), (2, 3, 1), (3, 4, 1)]).unwrap();
        let mut rng = SelectionRng::new(9);
        let mut seen = alloc::collections::BTreeSet::new();
        for _ in 0..200 {
            seen.insert(select_dotted_edge(&g, Strategy::UniformRandom, &mut rng).unwrap());
        }
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn bounded_loop() {
        let solid = GramBigraph::from_edges(3, &[(1, 2, -1)]).unwrap();
        let mut rng = SelectionRng::new(0);
        let (h, log) = inflations_at_pair_bounded(&solid, Strategy::First, 10, &mut rng).unwrap();
        assert_eq!(h, solid);
        assert!(log.is_empty());

        // Hand trace: infl_{1,2} leaves d = (-1, -1, 1); d_23 = 1 is dotted
        // again, infl_{2,3} gives d_23 = -1 and d_13 = -1 - d_12 * d_23 = 0.
        let (h, log) = inflations_at_pair_bounded(&g3(), Strategy::First, 10, &mut rng).unwrap();
        assert!(!h.has_dotted());
        assert_eq!(log.steps(), &[InflationStep::AtPair(1, 2), InflationStep::AtPair(2, 3)]);
        assert_eq!((h.d(1, 2), h.d(1, 3), h.d(2, 3)), (-1, 0, -1));

        let (h, log) = inflations_at_pair_bounded(&g3(), Strategy::First, 1, &mut rng).unwrap();
        assert_eq!(log.len(), 1);
        assert!(h.has_dotted());
    }

    #[test]
    fn root_loop_on_a2() {
        let a2 = GramBigraph::from_upper(2, vec![-1]).unwrap();
        let (h, log) = inflations_to_pos_sincere_root(&a2, false).unwrap();
        assert_eq!(h.d(1, 2), -1);
        assert_eq!(log.steps(), &[InflationStep::AtVertex(2), InflationStep::AtPair(2, 1)]);
        assert_eq!((log.vertex_count(), log.pair_count()), (1, 1));
    }

    #[test]
    fn root_loop_early_exit_on_graph() {
        let a2 = GramBigraph::from_upper(2, vec![-1]).unwrap();
        let (h, log) = inflations_to_pos_sincere_root(&a2, true).unwrap();
        assert_eq!(h, a2);
        assert!(log.is_empty());
    }

    #[test]
    fn root_loop_trivial_and_disconnected() {
        let one = GramBigraph::empty(1);
        let (h, log) = inflations_to_pos_sincere_root(&one, false).unwrap();
        assert_eq!(h, one);
        assert!(log.is_empty());
        let split = GramBigraph::from_edges(3, &[(1, 2, 1)]).unwrap();
        assert_eq!(inflations_to_pos_sincere_root(&split, false), Err(Error::Disconnected));
    }

    #[test]
    fn trace_format() {
        let mut log = ExecutionLog::new();
        log.push(InflationStep::AtVertex(3));
        log.push(InflationStep::AtPair(3, 1));
        assert_eq!(alloc::format!("{log}"), "V 3\nP 3 1\n");
        let mut merged = ExecutionLog::new();
        merged.extend_relabeled(&log, &[2, 5, 7]);
        assert_eq!(merged.steps(), &[InflationStep::AtVertex(7), InflationStep::AtPair(7, 2)]);
    }

    #[test]
    fn strategy_tags() {
        for (k, s) in Strategy::ALL.iter().enumerate() {
            assert_eq!(Strategy::from_tag(k as u8), Some(*s));
            assert_eq!(usize::from(s.tag()), k);
        }
        assert_eq!(Strategy::from_tag(4), None);
    }
}
