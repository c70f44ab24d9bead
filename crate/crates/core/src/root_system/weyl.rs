use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::root_system::Weight;
use crate::scalar::Scalar;

/// An element of the Weyl group, stored as its integer matrix on the root
/// lattice in the simple-root basis. Column `j` is the image of `α_{j+1}`.
///
/// Matrices are a canonical form: two elements are equal iff their matrices
/// are.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: usize,
    matrix: Vec<i64>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut matrix = vec![0; rank * rank];
        for k in 0..rank {
            matrix[k * rank + k] = 1;
        }
        Self { rank, matrix }
    }

    pub(crate) fn from_matrix(rank: usize, matrix: Vec<i64>) -> Self {
        debug_assert_eq!(matrix.len(), rank * rank);
        Self { rank, matrix }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank)
    }

    /// Entry in row `row`, column `col` (both 0-based).
    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.matrix[row * self.rank + col]
    }

    /// Rows of the matrix, for display.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.matrix.chunks(self.rank.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn apply<C: Scalar>(&self, lam: &Weight<C>) -> Result<Weight<C>> {
        if lam.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: lam.rank() });
        }
        let coords = (0..self.rank)
            .map(|row| {
                lam.coords().iter().enumerate().fold(C::zero(), |acc, (col, c)| {
                    let m = self.entry(row, col);
                    if m == 0 {
                        acc
                    } else {
                        acc + C::from_int(m) * c.clone()
                    }
                })
            })
            .collect();
        Ok(Weight::new(coords))
    }

    /// Integer action on root-lattice vectors; the hot path for gallery
    /// enumeration.
    pub(crate) fn apply_ints(&self, lam: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|row| self.matrix[row * self.rank..(row + 1) * self.rank].iter().zip(lam).map(|(m, x)| m * x).sum())
            .collect()
    }

    pub fn compose(&self, rhs: &WeylElement) -> WeylElement {
        assert_eq!(self.rank, rhs.rank, "Weyl element rank mismatch");
        let r = self.rank;
        let mut matrix = vec![0; r * r];
        for i in 0..r {
            for k in 0..r {
                let a = self.matrix[i * r + k];
                if a == 0 {
                    continue;
                }
                for j in 0..r {
                    matrix[i * r + j] += a * rhs.matrix[k * r + j];
                }
            }
        }
        WeylElement { rank: r, matrix }
    }
}

impl Mul for &WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        self.compose(rhs)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
