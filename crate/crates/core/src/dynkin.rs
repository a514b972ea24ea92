//! Dynkin graphs: types, templates and an `O(n^2)` recognizer.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bigraph::GramBigraph;

/// A simply-laced Dynkin graph: `A(n)` for `n >= 1`, `D(n)` for `n >= 4`,
/// `E6`, `E7` or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl DynkinType {
    /// Number of vertices.
    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::D(n) => n,
            DynkinType::E6 => 6,
            DynkinType::E7 => 7,
            DynkinType::E8 => 8,
        }
    }

    /// All Dynkin types on `n` vertices.
    pub fn all_of_rank(n: usize) -> Vec<DynkinType> {
        let mut out = Vec::new();
        if n >= 1 {
            out.push(DynkinType::A(n));
        }
        if n >= 4 {
            out.push(DynkinType::D(n));
        }
        match n {
            6 => out.push(DynkinType::E6),
            7 => out.push(DynkinType::E7),
            8 => out.push(DynkinType::E8),
            _ => {}
        }
        out
    }

    /// Arm lengths of the branch vertex, sorted; `None` for `A(n)`.
    fn arms(self) -> Option<[usize; 3]> {
        match self {
            DynkinType::A(_) => None,
            DynkinType::D(n) => Some([1, 1, n - 3]),
            DynkinType::E6 => Some([1, 2, 2]),
            DynkinType::E7 => Some([1, 2, 3]),
            DynkinType::E8 => Some([1, 2, 4]),
        }
    }

    /// The Gram bigraph of the Dynkin graph with a fixed labeling: `A(n)` is
    /// the path `1 - 2 - ... - n`; star types put the branch vertex at 1
    /// and lay the arms out consecutively, shortest first.
    pub fn template(self) -> GramBigraph {
        let n = self.rank();
        let mut g = GramBigraph::empty(n);
        match self.arms() {
            None => {
                for i in 1..n {
                    g.set(i, i + 1, -1);
                }
            }
            Some(arms) => {
                let mut next = 2;
                for len in arms {
                    let mut prev = 1;
                    for _ in 0..len {
                        g.set(prev, next, -1);
                        prev = next;
                        next += 1;
                    }
                }
            }
        }
        g
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E6 => f.write_str("E6"),
            DynkinType::E7 => f.write_str("E7"),
            DynkinType::E8 => f.write_str("E8"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDynkinError;

impl fmt::Display for ParseDynkinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected a Dynkin type such as A4, D5 or E6")
    }
}

impl FromStr for DynkinType {
    type Err = ParseDynkinError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (family, rank) = s.split_at(s.len().min(1));
        let n: usize = rank.parse().map_err(|_| ParseDynkinError)?;
        match (family, n) {
            ("A", n) if n >= 1 => Ok(DynkinType::A(n)),
            ("D", n) if n >= 4 => Ok(DynkinType::D(n)),
            ("E", 6) => Ok(DynkinType::E6),
            ("E", 7) => Ok(DynkinType::E7),
            ("E", 8) => Ok(DynkinType::E8),
            _ => Err(ParseDynkinError),
        }
    }
}

/// Decides whether `g` is a Dynkin graph and returns its type.
pub fn recognize_dynkin(g: &GramBigraph) -> Option<DynkinType> {
    let n = g.n();
    // Simple graph with solid edges only.
    if !g.is_simple_solid() {
        return None;
    }
    // A tree has exactly n - 1 edges.
    let edges = g.upper().iter().filter(|&&d| d != 0).count();
    if edges != n - 1 {
        return None;
    }
    if !g.is_connected() {
        return None;
    }
    let adjacency: Vec<Vec<usize>> = (1..=n).map(|v| g.neighbours(v).collect()).collect();
    let ramifications: Vec<usize> = (1..=n).filter(|&v| adjacency[v - 1].len() >= 3).collect();
    let s = match ramifications.as_slice() {
        [] => return Some(DynkinType::A(n)),
        [s] if adjacency[s - 1].len() == 3 => *s,
        _ => return None,
    };
    // Star with three arms; walk each arm to its leaf.
    let mut arms = [0usize; 3];
    for (slot, &start) in arms.iter_mut().zip(&adjacency[s - 1]) {
        let (mut prev, mut cur, mut len) = (s, start, 1);
        loop {
            let next = adjacency[cur - 1].iter().copied().find(|&w| w != prev);
            match next {
                Some(w) => {
                    prev = cur;
                    cur = w;
                    len += 1;
                }
                None => break,
            }
        }
        *slot = len;
    }
    arms.sort_unstable();
    match arms {
        [1, 1, k] if k == n - 3 => Some(DynkinType::D(n)),
        [1, 2, 2] => Some(DynkinType::E6),
        [1, 2, 3] => Some(DynkinType::E7),
        [1, 2, 4] => Some(DynkinType::E8),
        _ => None,
    }
}
