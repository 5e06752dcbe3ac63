use alloc::vec;
use alloc::vec::Vec;

use super::matrix::Matrix;
use crate::error::{invalid, Result};
use crate::gf::factor;

/// Conjugation-invariant fingerprint of an invertible matrix: one
/// `(degree, multiplicity)` pair for each distinct monic irreducible factor of
/// its characteristic polynomial. Entries are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharShape {
    entries: Vec<(u32, u32)>,
}

impl CharShape {
    pub fn new(mut entries: Vec<(u32, u32)>) -> Result<Self> {
        if entries.iter().any(|&(d, m)| d == 0 || m == 0) {
            return Err(invalid("shape entries need degree and multiplicity >= 1"));
        }
        entries.sort_unstable();
        Ok(Self { entries })
    }

    /// One multiplicity-one entry per degree, as for a block-diagonal matrix
    /// with irreducible blocks whose characteristic polynomials are distinct.
    pub fn from_block_degrees(degrees: &[u32]) -> Result<Self> {
        Self::new(degrees.iter().map(|&d| (d, 1)).collect())
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    /// Dimension of the underlying space.
    pub fn total(&self) -> u32 {
        self.entries.iter().map(|&(d, m)| d * m).sum()
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.iter().map(|&(d, _)| d)
    }

    /// Degrees of all monic divisors of the characteristic polynomial, as a
    /// membership table indexed by dimension.
    pub fn invariant_dim_table(&self) -> Vec<bool> {
        let n = self.total() as usize;
        let mut table = vec![false; n + 1];
        table[0] = true;
        for &(d, m) in &self.entries {
            let d = d as usize;
            let prev = table.clone();
            for k in 0..=n {
                if !prev[k] {
                    continue;
                }
                for j in 1..=m as usize {
                    let t = k + j * d;
                    if t > n {
                        break;
                    }
                    table[t] = true;
                }
            }
        }
        table
    }

    /// The set `{ sum j_i d_i : 0 <= j_i <= m_i }`, in increasing order.
    pub fn invariant_dims(&self) -> Vec<u32> {
        self.invariant_dim_table()
            .into_iter()
            .enumerate()
            .filter_map(|(k, b)| b.then_some(k as u32))
            .collect()
    }

    pub fn has_invariant_dim(&self, k: u32) -> bool {
        self.invariant_dim_table()
            .get(k as usize)
            .copied()
            .unwrap_or(false)
    }
}

/// Free-function form of [`CharShape::invariant_dims`].
pub fn invariant_dims(shape: &CharShape) -> Vec<u32> {
    shape.invariant_dims()
}

/// Shape of a matrix, from the factorisation of its characteristic polynomial.
pub fn char_shape(m: &Matrix) -> Result<CharShape> {
    let factors = factor(&m.char_poly())?;
    CharShape::new(
        factors
            .iter()
            .map(|(g, mult)| (g.deg() as u32, *mult))
            .collect(),
    )
}
