//! Square matrices with exact rational entries and their triangularisation.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::bigraph::GramBigraph;
use crate::error::{Error, Result};

/// An `n x n` matrix of exact rationals, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl InputMatrix {
    pub fn new(n: usize, entries: Vec<BigRational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, got: entries.len() });
        }
        Ok(Self { n, entries })
    }

    pub fn from_integers(n: usize, entries: &[i64]) -> Result<Self> {
        Self::new(n, entries.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
    }

    /// Builds a matrix from `(numerator, denominator)` pairs.
    ///
    /// # Panics
    ///
    /// Panics if a denominator is zero.
    pub fn from_fractions(n: usize, entries: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            n,
            entries
                .iter()
                .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = alloc::vec![BigRational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigRational::one();
        }
        Self { n, entries }
    }

    /// The upper-triangular unidiagonal matrix whose strictly upper part is
    /// the Gram coefficients of `g`.
    pub fn from_gram(g: &GramBigraph) -> Self {
        let n = g.n();
        let mut m = Self::identity(n);
        for (i, j, d) in g.entries() {
            m.entries[(i - 1) * n + (j - 1)] = BigRational::from_integer(BigInt::from(d));
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.n + j] = value;
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(j, i).clone());
            }
        }
        Self { n, entries }
    }

    /// `sym A = (A^T + A) / 2`.
    pub fn symmetrize(&self) -> Self {
        let n = self.n;
        let two = BigRational::from_integer(BigInt::from(2));
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push((self.get(i, j) + self.get(j, i)) / &two);
            }
        }
        Self { n, entries }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `x^T A x` in exact arithmetic.
    pub fn quadratic_form(&self, x: &[i64]) -> Result<BigRational> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: x.len() });
        }
        let mut acc = BigRational::zero();
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.n {
                if x[j] == 0 {
                    continue;
                }
                let xi_xj = BigInt::from(x[i]) * BigInt::from(x[j]);
                acc += self.get(i, j) * BigRational::from_integer(xi_xj);
            }
        }
        Ok(acc)
    }

    /// Folds `A` into the Gram bigraph with `d_ij = a_ij + a_ji` for `i < j`.
    ///
    /// Fails unless `A` is unidiagonal and triangle-integral.
    pub fn triangularise(&self) -> Result<GramBigraph> {
        let n = self.n;
        for i in 0..n {
            if !self.get(i, i).is_one() {
                return Err(Error::NotUnidiagonal(i + 1));
            }
        }
        let mut coeffs = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let sum = self.get(i, j) + self.get(j, i);
                if !sum.is_integer() {
                    return Err(Error::NotTriangleIntegral(i + 1, j + 1));
                }
                coeffs.push(sum.to_integer().to_i64().ok_or(Error::Overflow)?);
            }
        }
        GramBigraph::from_upper(n, coeffs)
    }
}
