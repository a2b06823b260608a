//! Dense exact matrices and Gauss-Jordan elimination.
//!
//! A matrix of a linear map stores the image of the `c`-th domain basis
//! vector in column `c`, so `f(v) = M v`.

use std::fmt;

use super::scalar::{Field, Scalar};
use super::subspace::Subspace;
use super::vector::{self, Vector};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>, cols: usize) -> Result<Matrix> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            crate::error::check_len(cols, row.len())?;
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(columns: &[Vector], rows: usize) -> Result<Matrix> {
        let mut m = Matrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            crate::error::check_len(rows, col.len())?;
            for (r, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m.set(r, c, x.clone());
                }
            }
        }
        Ok(m)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn add_to(&mut self, r: usize, c: usize, value: &Scalar) {
        self.data[r * self.cols + c] += value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = vector::zeros(self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.add_to(r, c, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: vector::add(&self.data, &other.data) }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix difference shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: vector::sub(&self.data, &other.data) }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: vector::scale(c, &self.data) }
    }

    /// Kronecker product; as linear maps, `(A ⊗ B)(x ⊗ y) = Ax ⊗ By` in row-major tensor order.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Stacks columns: `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Stacks rows: `[self; other]`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// The unique reduced row-echelon form.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(found, pivot_row);
            let inv = m.get(pivot_row, col).inverse().expect("nonzero pivot");
            for c in col..m.cols {
                let x = m.get(pivot_row, c);
                if !x.is_zero() {
                    let scaled = x * &inv;
                    m.set(pivot_row, c, scaled);
                }
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let p = m.get(pivot_row, c);
                    if !p.is_zero() {
                        let delta = &factor * p;
                        m.data[r * m.cols + c] -= &delta;
                    }
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        Echelon { reduced: m, rank: pivot_cols.len(), pivot_cols }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Null space `{v : Mv = 0}` as a subspace of the domain.
    pub fn kernel(&self) -> Subspace {
        let Echelon { reduced, pivot_cols, .. } = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivot_cols {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vector::zeros(self.cols);
            v[free] = one_like(&reduced, &pivot_cols);
            for (row, &p) in pivot_cols.iter().enumerate() {
                let x = reduced.get(row, free);
                if !x.is_zero() {
                    v[p] = -x;
                }
            }
            basis.push(v);
        }
        Subspace::span(&basis, self.cols).expect("kernel vectors have domain length")
    }

    /// Column space as a subspace of the codomain.
    pub fn image(&self) -> Subspace {
        Subspace::span(&self.columns(), self.rows).expect("columns have codomain length")
    }

    /// Two-sided inverse of a square matrix.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let field = self.field();
        let Echelon { reduced, rank, .. } = self.hstack(&Matrix::identity(field, n)).rref();
        let left = Matrix::from_fn(n, n, |r, c| reduced.get(r, c).clone());
        if rank < n || left != Matrix::identity(field, n) {
            return Err(Error::SingularMatrix { rank: self.rank(), size: n });
        }
        Ok(Matrix::from_fn(n, n, |r, c| reduced.get(r, n + c).clone()))
    }

    /// Some solution of `Mx = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(self.rows, b.len(), "right-hand side length mismatch");
        let augmented = self.hstack(&Matrix::from_columns(&[b.to_vec()], self.rows).ok()?);
        let Echelon { reduced, pivot_cols, .. } = augmented.rref();
        if pivot_cols.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vector::zeros(self.cols);
        for (row, &p) in pivot_cols.iter().enumerate() {
            x[p] = reduced.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// The field of the first nonzero entry, `Rational` for a zero matrix.
    pub fn field(&self) -> Field {
        self.data
            .iter()
            .find(|x| !x.is_zero())
            .map(Scalar::field)
            .unwrap_or(Field::Rational)
    }
}

/// A `1` living in the same field as the pivots of `m` (pivots are 1 after reduction).
fn one_like(m: &Matrix, pivot_cols: &[usize]) -> Scalar {
    match pivot_cols.first() {
        Some(&p) => m.get(0, p).clone(),
        None => m.field().one(),
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rational;
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect(), cols)
            .unwrap()
    }

    #[test]
    fn rref_proportional_rows() {
        let e = q(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(e.reduced, q(&[&[1, 2], &[0, 0]]));
        assert_eq!(e.rank, 1);
        assert_eq!(e.pivot_cols, vec![0]);
    }

    #[test]
    fn rref_identity_and_permutation() {
        let id = Matrix::identity(Field::Rational, 3);
        let e = id.rref();
        assert_eq!(e.reduced, id);
        assert_eq!(e.rank, 3);
        let e = q(&[&[0, 1], &[1, 0]]).rref();
        assert_eq!(e.reduced, q(&[&[1, 0], &[0, 1]]));
        assert_eq!(e.rank, 2);
    }

    #[test]
    fn inverse_of_involution() {
        let swap = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.inverse().unwrap(), swap);
        let id = Matrix::identity(Field::Rational, 4);
        assert_eq!(id.inverse().unwrap(), id);
    }

    #[test]
    fn singular_is_reported() {
        let err = q(&[&[1, 2], &[2, 4]]).inverse().unwrap_err();
        assert_eq!(err, Error::SingularMatrix { rank: 1, size: 2 });
    }

    #[test]
    fn kernel_and_solve() {
        let m = q(&[&[1, 1, 0], &[0, 0, 1]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert!(vector::is_zero(&m.mul_vec(&k.basis()[0])));
        let f = Field::Rational;
        let x = m.solve(&[f.from_int(3), f.from_int(5)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![f.from_int(3), f.from_int(5)]);
        let rank_deficient = q(&[&[1, 1], &[1, 1]]);
        assert!(rank_deficient.solve(&[f.from_int(1), f.from_int(2)]).is_none());
    }

    #[test]
    fn prime_field_elimination() {
        let f = Field::prime(3).unwrap();
        // [[1, 1], [1, 4]] is singular mod 3
        let m = Matrix::from_rows(
            vec![vec![f.from_int(1), f.from_int(1)], vec![f.from_int(1), f.from_int(4)]],
            2,
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
        assert!(m.inverse().is_err());
    }

    #[test]
    fn kron_matches_vector_kron() {
        let a = q(&[&[1, 2], &[3, 4]]);
        let b = q(&[&[0, 1], &[1, 0]]);
        let f = Field::Rational;
        let x = vec![f.from_int(1), f.from_int(-1)];
        let y = vec![f.from_int(2), f.from_int(7)];
        let lhs = a.kron(&b).mul_vec(&vector::kron(&x, &y));
        let rhs = vector::kron(&a.mul_vec(&x), &b.mul_vec(&y));
        assert_eq!(lhs, rhs);
    }
}
