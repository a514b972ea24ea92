//! Loop-free bigraphs stored as the strictly upper part of their Gram matrix.
//!
//! Vertices are labeled `1..=n` throughout the public API. A coefficient
//! `d_ij < 0` encodes `|d_ij|` solid edges between `i` and `j`, `d_ij > 0`
//! encodes `d_ij` dotted edges. The diagonal is implicitly 1, and `d_ij` for
//! `i > j` reads `d_ji`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use crate::error::{Error, Result};

/// An integer vector, e.g. a root of a unit form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVector(pub Vec<i64>);

impl Deref for IntVector {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GramBigraph {
    n: usize,
    upper: Vec<i64>,
    /// Number of pairs with `d_ij > 0`.
    dotted: usize,
}

/// A connected component together with its induced bigraph. Vertex `k` of
/// `bigraph` is `vertices[k - 1]` of the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub bigraph: GramBigraph,
}

#[inline]
fn flat_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl GramBigraph {
    /// The bigraph without edges on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "a bigraph needs at least one vertex");
        Self { n, upper: alloc::vec![0; n * (n - 1) / 2], dotted: 0 }
    }

    /// Builds a bigraph from the row-major strictly upper triangle
    /// `d_12, d_13, ..., d_1n, d_23, ..., d_(n-1)n`.
    pub fn from_upper(n: usize, upper: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let expected = n * (n - 1) / 2;
        if upper.len() != expected {
            return Err(Error::DimensionMismatch { expected, got: upper.len() });
        }
        let dotted = upper.iter().filter(|&&d| d > 0).count();
        Ok(Self { n, upper, dotted })
    }

    /// Builds a bigraph from `(i, j, d_ij)` triples with 1-based labels.
    pub fn from_edges(n: usize, edges: &[(usize, usize, i64)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut g = Self::empty(n);
        for &(i, j, d) in edges {
            g.check_vertex(i)?;
            g.check_vertex(j)?;
            if i == j {
                return Err(Error::NotDefined(i, j));
            }
            g.set(i, j, d);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The row-major strictly upper triangle.
    pub fn upper(&self) -> &[i64] {
        &self.upper
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// `d_ij` for distinct 1-based vertices, in either order.
    ///
    /// # Panics
    ///
    /// Panics if `i == j` or a label is out of range.
    #[inline]
    pub fn d(&self, i: usize, j: usize) -> i64 {
        self.d0(i - 1, j - 1)
    }

    /// Sets `d_ij` for distinct 1-based vertices, in either order.
    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.set0(i - 1, j - 1, value);
    }

    #[inline]
    pub(crate) fn d0(&self, i: usize, j: usize) -> i64 {
        assert!(i != j, "no loops: d_ii is not a coefficient");
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        self.upper[flat_index(self.n, lo, hi)]
    }

    #[inline]
    pub(crate) fn set0(&mut self, i: usize, j: usize, value: i64) {
        assert!(i != j, "no loops: d_ii is not a coefficient");
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        let slot = &mut self.upper[flat_index(self.n, lo, hi)];
        match (*slot > 0, value > 0) {
            (false, true) => self.dotted += 1,
            (true, false) => self.dotted -= 1,
            _ => {}
        }
        *slot = value;
    }

    /// Iterates `(i, j, d_ij)` over all pairs `i < j` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        let n = self.n;
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j, self.d(i, j))))
    }

    /// Number of pairs joined by dotted edges.
    pub fn dotted_pairs(&self) -> usize {
        self.dotted
    }

    pub fn has_dotted(&self) -> bool {
        self.dotted > 0
    }

    /// 1-based neighbours of `v` in the underlying graph.
    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).filter(move |&u| u != v && self.d(u, v) != 0)
    }

    /// `q(v) = sum v_i^2 + sum_{i<j} d_ij v_i v_j`.
    pub fn eval_form(&self, v: &[i64]) -> Result<i64> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: v.len() });
        }
        let mut acc: i128 = v.iter().map(|&x| i128::from(x) * i128::from(x)).sum();
        for i in 0..self.n {
            if v[i] == 0 {
                continue;
            }
            for j in i + 1..self.n {
                let d = self.upper[flat_index(self.n, i, j)];
                if d != 0 {
                    let term = i128::from(d)
                        .checked_mul(i128::from(v[i]) * i128::from(v[j]))
                        .ok_or(Error::Overflow)?;
                    acc = acc.checked_add(term).ok_or(Error::Overflow)?;
                }
            }
        }
        i64::try_from(acc).map_err(|_| Error::Overflow)
    }

    /// True iff the underlying simple graph is connected.
    pub fn is_connected(&self) -> bool {
        self.component_labels().1 == 1
    }

    /// 0-based component id per vertex (numbered by smallest member) and the
    /// number of components.
    fn component_labels(&self) -> (Vec<usize>, usize) {
        let n = self.n;
        let mut label = alloc::vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for (w, lw) in label.iter_mut().enumerate() {
                    if w != u && *lw == usize::MAX && self.d0(u, w) != 0 {
                        *lw = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Splits the bigraph into connected components, ordered by smallest
    /// vertex; each keeps the original relative order of its vertices.
    pub fn connected_components(&self) -> Vec<Component> {
        let (label, count) = self.component_labels();
        let mut groups: Vec<Vec<usize>> = alloc::vec![Vec::new(); count];
        for (v, &c) in label.iter().enumerate() {
            groups[c].push(v + 1);
        }
        groups
            .into_iter()
            .map(|vertices| {
                let bigraph = self.induced(&vertices);
                Component { vertices, bigraph }
            })
            .collect()
    }

    /// The sub-bigraph on the given 1-based vertices, relabeled `1..=k` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> GramBigraph {
        let k = vertices.len();
        let mut upper = Vec::with_capacity(k * (k.saturating_sub(1)) / 2);
        for (a, &i) in vertices.iter().enumerate() {
            for &j in &vertices[a + 1..] {
                upper.push(self.d(i, j));
            }
        }
        GramBigraph::from_upper(k, upper).expect("induced bigraph on a non-empty vertex set")
    }

    /// Necessary condition for positivity: every `d_ij` lies in `{-1, 0, 1}`.
    pub fn coefficient_precheck(&self) -> bool {
        self.upper.iter().all(|d| (-1..=1).contains(d))
    }

    /// True iff the bigraph is a graph with only simple solid edges.
    pub fn is_simple_solid(&self) -> bool {
        self.upper.iter().all(|&d| d == 0 || d == -1)
    }
}

impl fmt::Display for GramBigraph {
    /// Prints the upper-triangular Gram matrix, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            for j in 1..=self.n {
                if j > 1 {
                    f.write_str(" ")?;
                }
                let v = match j.cmp(&i) {
                    core::cmp::Ordering::Less => 0,
                    core::cmp::Ordering::Equal => 1,
                    core::cmp::Ordering::Greater => self.d(i, j),
                };
                write!(f, "{v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
