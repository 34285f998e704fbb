//! Linear codes given by a canonical (RREF) generator matrix, and the rank
//! based ground truth for duals, hulls and minimum distance.

mod distance;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::Matrix;

pub use distance::{naive_min_distance, DEFAULT_BUDGET};

/// An `[n, k]` linear code over GF(q). `gen` is the RREF basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    n: usize,
    gen: Matrix,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// Row space of `rows` (which may be rank deficient).
    pub fn from_rows(rows: &Matrix) -> Result<LinearCode> {
        if rows.rows() == 0 || rows.cols() == 0 {
            return Err(Error::EmptyMatrix);
        }
        let r = rows.rref();
        Ok(LinearCode {
            n: rows.cols(),
            gen: r.matrix.top_rows(r.rank),
            pivots: r.pivot_cols,
        })
    }

    /// The zero code of length `n`.
    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode {
            n,
            gen: Matrix::zeros(field, 0, n),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, n: usize) -> LinearCode {
        LinearCode {
            n,
            gen: Matrix::identity(field, n),
            pivots: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn field(&self) -> &Field {
        self.gen.field()
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Euclidean dual, from the RREF: each non-pivot column `j` yields the
    /// vector with 1 at `j` and `-gen[i][j]` at pivot `i`.
    pub fn dual(&self) -> LinearCode {
        let f = self.field();
        let k = self.k();
        let n = self.n;
        if k == 0 {
            return LinearCode::full(f, n);
        }
        if k == n {
            return LinearCode::zero(f, n);
        }
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        let mut h = Matrix::zeros(f, free.len(), n);
        for (r, &j) in free.iter().enumerate() {
            h.set(r, j, 1);
            for (i, &p) in self.pivots.iter().enumerate() {
                h.set(r, p, f.neg(self.gen.get(i, j)));
            }
        }
        LinearCode::from_rows(&h).expect("nonempty")
    }

    /// Whether `other` spans the same space (same field and length).
    pub fn same_space(&self, other: &LinearCode) -> bool {
        self.n == other.n && self.gen == other.gen
    }

    /// `h(C) = k - rank(G G^T)`.
    pub fn hull_dim(&self) -> usize {
        if self.k() == 0 {
            return 0;
        }
        let ggt = self.gen.mul(&self.gen.transpose()).expect("conformable");
        self.k() - ggt.rank()
    }

    /// `dim(C ∩ C^⊥)` computed as `k + (n - k) - rank [G; H]`.
    pub fn hull_dim_by_intersection(&self) -> usize {
        let d = self.dual();
        self.intersection_dim(&d)
    }

    pub fn intersection_dim(&self, other: &LinearCode) -> usize {
        let stacked = self.gen.vstack(&other.gen).expect("same field");
        self.k() + other.k() - stacked.rank()
    }

    /// `h_h(C) = k - rank(G conj(G)^T)`; needs a square field order.
    pub fn hermitian_hull_dim(&self) -> Result<usize> {
        if !self.field().is_square_order() {
            return Err(Error::NotSquare(self.field().q()));
        }
        if self.k() == 0 {
            return Ok(0);
        }
        let ggt = self.gen.mul(&self.gen.conjugate_transpose()?)?;
        Ok(self.k() - ggt.rank())
    }

    pub fn is_lcd(&self) -> bool {
        self.hull_dim() == 0
    }

    /// Whether `(self, other)` is a linear complementary pair.
    pub fn is_complementary(&self, other: &LinearCode) -> bool {
        self.n == other.n
            && self.k() + other.k() == self.n
            && self.gen.vstack(&other.gen).expect("same field").rank() == self.n
    }

    /// Exact minimum distance, enumerating one message per scalar class.
    pub fn min_distance(&self, budget: u64) -> Result<usize> {
        distance::min_distance(self, budget)
    }

    /// Like [`LinearCode::min_distance`] but gives up with `Ok(None)` as soon
    /// as a nonzero codeword of weight below `floor` turns up.
    pub fn min_distance_at_least(&self, budget: u64, floor: usize) -> Result<Option<usize>> {
        distance::min_distance_at_least(self, budget, floor)
    }
}

/// `min{d(C), d(D^⊥)}`.
pub fn security_parameter(c: &LinearCode, d: &LinearCode, budget: u64) -> Result<usize> {
    let dc = c.min_distance(budget)?;
    let dd = d.dual().min_distance(budget)?;
    Ok(dc.min(dd))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Field {
        Field::with_order(q).unwrap()
    }

    #[test]
    fn from_rows_examples() {
        let f = gf(3);
        let c = LinearCode::from_rows(&Matrix::identity(&f, 4)).unwrap();
        assert_eq!(c.k(), 4);
        let z = LinearCode::from_rows(&Matrix::zeros(&f, 2, 4)).unwrap();
        assert_eq!(z.k(), 0);
        assert_eq!(
            LinearCode::from_rows(&Matrix::zeros(&f, 0, 0)),
            Err(Error::EmptyMatrix)
        );
    }

    #[test]
    fn dual_examples() {
        let f = gf(2);
        let full = LinearCode::full(&f, 3);
        assert_eq!(full.dual().k(), 0);
        let rep = LinearCode::from_rows(&Matrix::from_ints(&f, &[&[1, 1]])).unwrap();
        assert!(rep.dual().same_space(&rep));
        let f5 = gf(5);
        let c = LinearCode::from_rows(&Matrix::from_ints(
            &f5,
            &[&[1, 2, 0, 3, 4], &[0, 1, 1, 1, 0]],
        ))
        .unwrap();
        let d = c.dual();
        assert_eq!(d.k(), 3);
        assert!(c
            .generator()
            .mul(&d.generator().transpose())
            .unwrap()
            .is_zero());
        assert!(d.dual().same_space(&c));
    }

    #[test]
    fn hull_examples() {
        let f = gf(2);
        assert_eq!(LinearCode::zero(&f, 4).hull_dim(), 0);
        let rep = LinearCode::from_rows(&Matrix::from_ints(&f, &[&[1, 1]])).unwrap();
        assert_eq!(rep.hull_dim(), 1);
        assert_eq!(rep.hull_dim_by_intersection(), 1);
    }

    #[test]
    fn hermitian_hull_examples() {
        let f4 = gf(4);
        assert_eq!(LinearCode::zero(&f4, 2).hermitian_hull_dim(), Ok(0));
        let c = LinearCode::from_rows(&Matrix::from_rows(&f4, &[vec![1, 1]]).unwrap()).unwrap();
        assert_eq!(c.hermitian_hull_dim(), Ok(1));
        let a = f4.generator().unwrap();
        let c = LinearCode::from_rows(&Matrix::from_rows(&f4, &[vec![1, a]]).unwrap()).unwrap();
        assert_eq!(c.hermitian_hull_dim(), Ok(1));
        // Euclidean: 1 + a^2 != 0
        assert_eq!(c.hull_dim(), 0);
        let f3 = gf(3);
        assert_eq!(
            LinearCode::full(&f3, 2).hermitian_hull_dim(),
            Err(Error::NotSquare(3))
        );
    }

    #[test]
    fn distance_examples() {
        let f = gf(3);
        assert_eq!(LinearCode::full(&f, 5).min_distance(DEFAULT_BUDGET), Ok(1));
        assert_eq!(
            LinearCode::zero(&f, 5).min_distance(DEFAULT_BUDGET),
            Err(Error::ZeroCode)
        );
        // ternary [4,2,3] tetracode
        let c =
            LinearCode::from_rows(&Matrix::from_ints(&f, &[&[1, 0, 1, 1], &[0, 1, 1, 2]])).unwrap();
        assert_eq!(c.min_distance(DEFAULT_BUDGET), Ok(3));
    }

    #[test]
    fn security_parameter_of_dual_pair() {
        let f = gf(2);
        let c = LinearCode::from_rows(&Matrix::from_ints(
            &f,
            &[
                &[1, 0, 0, 0, 1, 1, 0],
                &[0, 1, 0, 0, 1, 0, 1],
                &[0, 0, 1, 0, 0, 1, 1],
                &[0, 0, 0, 1, 1, 1, 1],
            ],
        ))
        .unwrap();
        let d = c.min_distance(DEFAULT_BUDGET).unwrap();
        assert_eq!(d, 3);
        assert_eq!(security_parameter(&c, &c.dual(), DEFAULT_BUDGET), Ok(d));
        let full = LinearCode::full(&f, 7);
        assert_eq!(security_parameter(&full, &c, DEFAULT_BUDGET), Ok(1));
    }
}
