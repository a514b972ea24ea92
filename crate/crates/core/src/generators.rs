//! Test-matrix generators: Nakayama matrices, random positive uti matrices
//! obtained by inflating Dynkin graphs, and random uti matrices.

use alloc::vec::Vec;

use crate::bigraph::GramBigraph;
use crate::dynkin::DynkinType;
use crate::inflation::{inflate_at_pair_mut, inflate_at_vertex_mut, select_dotted_edge, Strategy};
use crate::matrix::InputMatrix;
use crate::rng::SelectionRng;

/// The upper-triangular unidiagonal Nakayama matrix with
/// `a_{i,i+s} = (-1)^s`.
pub fn gen_nakayama(n: usize) -> InputMatrix {
    assert!(n >= 1);
    let mut entries = alloc::vec![0i64; n * n];
    for i in 0..n {
        for j in i..n {
            entries[i * n + j] = if (j - i) % 2 == 0 { 1 } else { -1 };
        }
    }
    InputMatrix::from_integers(n, &entries).expect("n >= 1")
}

/// Knobs of [`gen_random_positive_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositiveGenOptions {
    /// Start from this type instead of a uniformly chosen one of rank `n`.
    pub start: Option<DynkinType>,
    /// Relabel the template's vertices by a random permutation first.
    pub relabel: bool,
}

impl Default for PositiveGenOptions {
    fn default() -> Self {
        Self { start: None, relabel: true }
    }
}

/// A random connected positive definite uti matrix on `n` vertices.
pub fn gen_random_positive(n: usize, seed: u64, steps: usize) -> InputMatrix {
    InputMatrix::from_gram(&random_positive_bigraph(n, seed, steps, &PositiveGenOptions::default()))
}

pub fn gen_random_positive_with(
    n: usize,
    seed: u64,
    steps: usize,
    options: &PositiveGenOptions,
) -> InputMatrix {
    InputMatrix::from_gram(&random_positive_bigraph(n, seed, steps, options))
}

/// Starts from a Dynkin graph and applies `steps` random inflations. Every
/// step is a vertex inflation or, with probability 1/2 when a dotted pair
/// exists, a pair inflation at a random dotted pair in random orientation.
pub fn random_positive_bigraph(
    n: usize,
    seed: u64,
    steps: usize,
    options: &PositiveGenOptions,
) -> GramBigraph {
    assert!(n >= 1);
    let mut rng = SelectionRng::new(seed);
    let start = options.start.unwrap_or_else(|| {
        let types = DynkinType::all_of_rank(n);
        types[rng.index(types.len())]
    });
    assert_eq!(start.rank(), n, "start type must have rank n");
    let template = start.template();
    let mut g = if options.relabel {
        let mut perm: Vec<usize> = (1..=n).collect();
        rng.shuffle(&mut perm);
        let mut g = GramBigraph::empty(n);
        for (i, j, d) in template.entries() {
            if d != 0 {
                g.set(perm[i - 1], perm[j - 1], d);
            }
        }
        g
    } else {
        template
    };
    for _ in 0..steps {
        let pair = if g.has_dotted() && rng.coin() {
            select_dotted_edge(&g, Strategy::UniformRandom, &mut rng)
        } else {
            None
        };
        match pair {
            Some((a, b)) => {
                let (a, b) = if rng.coin() { (a, b) } else { (b, a) };
                inflate_at_pair_mut(&mut g, a, b).expect("positive bigraphs keep unit coefficients");
            }
            None => {
                let v = rng.index(n) + 1;
                inflate_at_vertex_mut(&mut g, v).expect("vertex in range");
            }
        }
    }
    g
}

/// A random upper-triangular unidiagonal integer matrix: each entry above
/// the diagonal is nonzero with probability `density`, uniform in
/// `[-range, range] \ {0}`.
///
/// # Panics
///
/// Panics unless `n >= 1`, `range >= 1` and `0 < density <= 1`.
pub fn gen_random_uti(n: usize, seed: u64, range: i64, density: f64) -> InputMatrix {
    assert!(n >= 1 && range >= 1);
    assert!(density > 0.0 && density <= 1.0, "density must lie in (0, 1]");
    let mut rng = SelectionRng::new(seed);
    let mut entries = alloc::vec![0i64; n * n];
    for i in 0..n {
        entries[i * n + i] = 1;
        for j in i + 1..n {
            if rng.chance(density) {
                let mut x = rng.range_inclusive(-range, range - 1);
                if x >= 0 {
                    x += 1;
                }
                entries[i * n + j] = x;
            }
        }
    }
    InputMatrix::from_integers(n, &entries).expect("n >= 1")
}
