//! Ground truth independent of inflations: an exact Gaussian elimination
//! test of positive definiteness, and brute-force root enumeration.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_rational::{BigRational, Ratio};
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, Signed, ToPrimitive, Zero};

use crate::bigraph::{GramBigraph, IntVector};
use crate::error::{Error, Result};
use crate::matrix::InputMatrix;

/// Coordinate bound that contains every root of a positive unit form.
pub const DEFAULT_ROOT_BOX: i64 = 6;

/// Maximal number of vectors a brute-force search may visit.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Positive definiteness of `sym A` by row reduction without pivoting.
///
/// Only row operations `row_i -= c * row_k` are used; the first pivot that
/// is not strictly positive decides `false`. The Schur complements stay
/// symmetric, so only their upper triangles are updated. Arithmetic runs on
/// `i128` fractions and restarts on big rationals if anything overflows.
pub fn gauss_pos_def_test(a: &InputMatrix) -> bool {
    let sym = a.symmetrize();
    let small: Option<Vec<Ratio<i128>>> = sym
        .entries()
        .iter()
        .map(|x| Some(Ratio::new_raw(x.numer().to_i128()?, x.denom().to_i128()?)))
        .collect();
    if let Some(entries) = small {
        if let Some(verdict) = eliminate(a.n(), entries) {
            return verdict;
        }
    }
    eliminate(a.n(), sym.entries().to_vec()).expect("big rationals do not overflow")
}

/// Exact field operations that may fail on overflow.
trait ExactField: Clone + Zero {
    fn is_pos(&self) -> bool;
    fn div(&self, rhs: &Self) -> Option<Self>;
    fn mul_sub(&self, factor: &Self, x: &Self) -> Option<Self>;
}

impl ExactField for Ratio<i128> {
    fn is_pos(&self) -> bool {
        Signed::is_positive(self)
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs)
    }

    fn mul_sub(&self, factor: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(&factor.checked_mul(x)?)
    }
}

impl ExactField for BigRational {
    fn is_pos(&self) -> bool {
        Signed::is_positive(self)
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        Some(self / rhs)
    }

    fn mul_sub(&self, factor: &Self, x: &Self) -> Option<Self> {
        Some(self - factor * x)
    }
}

/// Returns `None` on overflow.
fn eliminate<T: ExactField>(n: usize, mut m: Vec<T>) -> Option<bool> {
    for k in 0..n {
        let pivot = m[k * n + k].clone();
        if !pivot.is_pos() {
            return Some(false);
        }
        for i in k + 1..n {
            let below = &m[k * n + i];
            if below.is_zero() {
                continue;
            }
            let factor = below.div(&pivot)?;
            for j in i..n {
                let x = &m[k * n + j];
                if !x.is_zero() {
                    let next = m[i * n + j].mul_sub(&factor, x)?;
                    m[i * n + j] = next;
                }
            }
        }
    }
    Some(true)
}

/// Visits every vector of `[lo, hi]^n` in odometer order, keeping `q(v)`
/// up to date in `O(n)` per step. Stops when `visit` returns `true`.
fn enumerate_box<F>(g: &GramBigraph, lo: i64, hi: i64, budget: u128, mut visit: F) -> Result<()>
where
    F: FnMut(&[i64], i128) -> bool,
{
    let n = g.n();
    let width = (hi - lo + 1) as u128;
    let size = width.checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > budget {
        return Err(Error::BudgetExceeded { size, budget });
    }
    let mut v = alloc::vec![lo; n];
    let mut q = i128::from(g.eval_form(&v)?);
    // Change of q when v_i moves by `delta`.
    let shift = |v: &[i64], i: usize, delta: i64| -> i128 {
        let (vi, dl) = (i128::from(v[i]), i128::from(delta));
        let cross: i128 =
            (0..n).filter(|&j| j != i).map(|j| i128::from(g.d0(i, j)) * i128::from(v[j])).sum();
        dl * (2 * vi + dl) + dl * cross
    };
    loop {
        if visit(&v, q) {
            return Ok(());
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(());
            }
            if v[i] < hi {
                q += shift(&v, i, 1);
                v[i] += 1;
                break;
            }
            q += shift(&v, i, lo - hi);
            v[i] = lo;
            i += 1;
        }
    }
}

/// All roots `q(v) = 1` with coordinates in `[-bound, bound]`.
pub fn brute_force_roots(g: &GramBigraph, bound: i64) -> Result<BTreeSet<IntVector>> {
    brute_force_roots_with_budget(g, bound, DEFAULT_BUDGET)
}

pub fn brute_force_roots_with_budget(
    g: &GramBigraph,
    bound: i64,
    budget: u128,
) -> Result<BTreeSet<IntVector>> {
    let mut roots = BTreeSet::new();
    enumerate_box(g, -bound, bound, budget, |v, q| {
        if q == 1 {
            roots.insert(IntVector(v.to_vec()));
        }
        false
    })?;
    Ok(roots)
}

/// Whether some root has all coordinates in `[1, bound]`.
pub fn has_positive_sincere_root(g: &GramBigraph, bound: i64) -> Result<bool> {
    Ok(find_positive_sincere_root(g, bound)?.is_some())
}

/// A root with all coordinates in `[1, bound]`, if any.
pub fn find_positive_sincere_root(g: &GramBigraph, bound: i64) -> Result<Option<IntVector>> {
    let mut found = None;
    enumerate_box(g, 1, bound, DEFAULT_BUDGET, |v, q| {
        if q == 1 {
            found = Some(IntVector(v.to_vec()));
            true
        } else {
            false
        }
    })?;
    Ok(found)
}
