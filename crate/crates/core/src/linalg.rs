//! Exact dense matrices over GF(q).

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::poly::RingElement;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
    field: Field,
}

/// Result of Gauss-Jordan elimination.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
            field: field.clone(),
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        if rows.iter().flatten().any(|&e| e as u32 >= field.q()) {
            return Err(Error::Parse("matrix entry outside the field".into()));
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            entries: rows.concat(),
            field: field.clone(),
        })
    }

    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Matrix {
        let rows: Vec<Vec<Elem>> = rows
            .iter()
            .map(|r| r.iter().map(|&c| field.from_int(c)).collect())
            .collect();
        Matrix::from_rows(field, &rows).expect("rectangular input")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Entrywise `x -> x^(sqrt q)`.
    pub fn conjugate(&self) -> Result<Matrix> {
        let f = &self.field;
        let entries = self
            .entries
            .iter()
            .map(|&e| f.frobenius_sqrt_q(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            entries,
            ..self.clone()
        })
    }

    pub fn conjugate_transpose(&self) -> Result<Matrix> {
        Ok(self.conjugate()?.transpose())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(t, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::DimensionMismatch("vstack column counts".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols,
            entries,
            field: self.field.clone(),
        })
    }

    /// Places `blocks[i][j]` (all of equal shape) in a block grid.
    pub fn block(field: &Field, blocks: &[Vec<Matrix>]) -> Result<Matrix> {
        let br = blocks.len();
        let bc = blocks.first().map_or(0, |r| r.len());
        let (h, w) = blocks
            .first()
            .and_then(|r| r.first())
            .map_or((0, 0), |m| (m.rows, m.cols));
        let mut out = Matrix::zeros(field, br * h, bc * w);
        for (i, row) in blocks.iter().enumerate() {
            if row.len() != bc {
                return Err(Error::DimensionMismatch("ragged block grid".into()));
            }
            for (j, b) in row.iter().enumerate() {
                if b.rows != h || b.cols != w {
                    return Err(Error::DimensionMismatch("unequal block shapes".into()));
                }
                if b.field != *field {
                    return Err(Error::FieldMismatch);
                }
                for r in 0..h {
                    let dst = (i * h + r) * out.cols + j * w;
                    out.entries[dst..dst + w].copy_from_slice(b.row(r));
                }
            }
        }
        Ok(out)
    }

    /// Reduced row-echelon form. Pivots are chosen left to right, taking the
    /// first row with a nonzero entry in the pivot column.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.entries.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).unwrap();
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The first `n` rows.
    pub fn top_rows(&self, n: usize) -> Matrix {
        Matrix {
            rows: n,
            cols: self.cols,
            entries: self.entries[..n * self.cols].to_vec(),
            field: self.field.clone(),
        }
    }

    /// Circulant matrix of `a`: row i holds the coefficients of `x^i a(x)`.
    pub fn circulant(a: &RingElement) -> Matrix {
        let m = a.m();
        let base = a.dense();
        let mut out = Matrix::zeros(a.field(), m, m);
        for i in 0..m {
            for j in 0..m {
                out.set(i, (i + j) % m, base[j]);
            }
        }
        out
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        let f = &self.field;
        Matrix {
            entries: self.entries.iter().map(|&e| f.mul(e, c)).collect(),
            ..self.clone()
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let row: Vec<String> = self
                .row(r)
                .iter()
                .map(|&e| self.field.format_elem(e))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    #[test]
    fn products() {
        let f = Field::prime(2).unwrap();
        let a = Matrix::from_ints(&f, &[&[1, 1], &[0, 1]]);
        let aat = a.mul(&a.transpose()).unwrap();
        assert_eq!(aat, Matrix::from_ints(&f, &[&[0, 1], &[1, 1]]));
        assert_eq!(Matrix::identity(&f, 2).mul(&a).unwrap(), a);
        assert_eq!(a.transpose().transpose(), a);
        assert!(matches!(
            a.mul(&Matrix::zeros(&f, 3, 1)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn conjugate_transpose_involution() {
        let f = Field::with_order(4).unwrap();
        let a = Matrix::from_rows(&f, &[vec![0, 1, 2], vec![3, 2, 1]]).unwrap();
        let twice = a
            .conjugate_transpose()
            .unwrap()
            .conjugate_transpose()
            .unwrap();
        assert_eq!(twice, a);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(
            Matrix::identity(&f3, 2).conjugate_transpose(),
            Err(Error::NotSquare(3))
        );
    }

    #[test]
    fn rref_examples() {
        let f = Field::prime(3).unwrap();
        assert_eq!(Matrix::zeros(&f, 3, 4).rank(), 0);
        assert_eq!(Matrix::identity(&f, 5).rank(), 5);
        // det = 1*1 - 2*2 = -3 = 0 mod 3
        let a = Matrix::from_ints(&f, &[&[1, 2], &[2, 1]]);
        let det = f.sub(
            f.mul(a.get(0, 0), a.get(1, 1)),
            f.mul(a.get(0, 1), a.get(1, 0)),
        );
        assert_eq!(det, 0);
        let r = a.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);
        assert_eq!(r.matrix, Matrix::from_ints(&f, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn circulant_examples() {
        let f = Field::prime(2).unwrap();
        let one = RingElement::one(&f, 3).unwrap();
        assert_eq!(Matrix::circulant(&one), Matrix::identity(&f, 3));
        let x = RingElement::new(&Poly::monomial(&f, 1, 1), 3).unwrap();
        assert_eq!(
            Matrix::circulant(&x),
            Matrix::from_ints(&f, &[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])
        );
        let a = RingElement::new(&Poly::from_ints(&f, &[0, 1, 1]), 3).unwrap();
        assert_eq!(
            Matrix::circulant(&a),
            Matrix::from_ints(&f, &[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])
        );
    }

    #[test]
    fn block_and_stack() {
        let f = Field::prime(5).unwrap();
        let i = Matrix::identity(&f, 2);
        let z = Matrix::zeros(&f, 2, 2);
        let b = Matrix::block(&f, &[vec![i.clone(), z.clone()], vec![z, i]]).unwrap();
        assert_eq!(b, Matrix::identity(&f, 4));
        let s = Matrix::identity(&f, 2)
            .vstack(&Matrix::identity(&f, 2))
            .unwrap();
        assert_eq!(s.rows(), 4);
        assert_eq!(s.rank(), 2);
    }
}
