//! Subspaces of `F^n` in canonical reduced row-echelon form.
//!
//! Two equal subspaces have identical basis grids, so subspace equality is
//! plain structural equality.

use super::matrix::Matrix;
use super::scalar::Scalar;
use super::vector::{self, Vector};
use crate::error::{check_len, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Subspace {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: super::Field, ambient_dim: usize) -> Subspace {
        let basis = (0..ambient_dim).map(|i| vector::unit_vector(field, ambient_dim, i)).collect();
        Subspace { ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    /// Canonical span of `vectors`, all of length `ambient_dim`.
    pub fn span(vectors: &[Vector], ambient_dim: usize) -> Result<Subspace> {
        for v in vectors {
            check_len(ambient_dim, v.len())?;
        }
        let nonzero: Vec<Vector> = vectors.iter().filter(|v| !vector::is_zero(v)).cloned().collect();
        if nonzero.is_empty() {
            return Ok(Subspace::zero(ambient_dim));
        }
        let echelon = Matrix::from_rows(nonzero, ambient_dim)?.rref();
        let basis = (0..echelon.rank).map(|r| echelon.reduced.row(r).to_vec()).collect();
        Ok(Subspace { ambient_dim, basis, pivots: echelon.pivot_cols })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Matrix whose columns are the basis vectors: the inclusion map into the ambient space.
    pub fn inclusion(&self) -> Matrix {
        Matrix::from_columns(&self.basis, self.ambient_dim).expect("basis vectors have ambient length")
    }

    fn residual(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !c.is_zero() {
                vector::axpy(&mut r, &-&c, b);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        check_len(self.ambient_dim, v.len())?;
        Ok(vector::is_zero(&self.residual(v)))
    }

    /// Coordinates of `v` in the canonical basis, `None` when `v` is outside.
    ///
    /// For an rref basis these are just the entries of `v` at the pivot columns.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if v.len() != self.ambient_dim || !vector::is_zero(&self.residual(v)) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Element with the given coordinates.
    pub fn element(&self, coords: &[Scalar]) -> Vector {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let mut out = vector::zeros(self.ambient_dim);
        for (c, b) in coords.iter().zip(&self.basis) {
            vector::axpy(&mut out, c, b);
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        check_len(other.ambient_dim, self.ambient_dim)?;
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_len(self.ambient_dim, other.ambient_dim)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(&all, self.ambient_dim)
    }

    /// Intersection via the kernel of `[U | -W]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        check_len(self.ambient_dim, other.ambient_dim)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let neg_w: Vec<Vector> = other.basis.iter().map(|w| w.iter().map(|x| -x).collect()).collect();
        let stacked = self.inclusion().hstack(&Matrix::from_columns(&neg_w, self.ambient_dim)?);
        let kernel = stacked.kernel();
        let vectors: Vec<Vector> = kernel
            .basis()
            .iter()
            .map(|k| self.element(&k[..self.dim()]))
            .collect();
        Subspace::span(&vectors, self.ambient_dim)
    }

    /// Image of this subspace under a linear map.
    pub fn map(&self, m: &Matrix) -> Result<Subspace> {
        check_len(m.cols(), self.ambient_dim)?;
        let images: Vec<Vector> = self.basis.iter().map(|b| m.mul_vec(b)).collect();
        Subspace::span(&images, m.rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Field::Rational.from_int(x)).collect()
    }

    #[test]
    fn span_examples() {
        assert_eq!(Subspace::span(&[v(&[1, 0]), v(&[0, 1]), v(&[1, 1])], 2).unwrap().dim(), 2);
        assert!(Subspace::span(&[], 3).unwrap().is_zero());
        let s = Subspace::span(&[v(&[2, 4])], 2).unwrap();
        assert_eq!(s.basis(), &[v(&[1, 2])]);
        assert!(Subspace::span(&[v(&[1, 2, 3])], 2).is_err());
    }

    #[test]
    fn lattice_operations() {
        let x = Subspace::span(&[v(&[1, 0])], 2).unwrap();
        let y = Subspace::span(&[v(&[0, 1])], 2).unwrap();
        assert!(x.intersect(&y).unwrap().is_zero());
        assert_eq!(x.sum(&y).unwrap(), Subspace::full(Field::Rational, 2));
        let line = Subspace::span(&[v(&[1, 2])], 2).unwrap();
        assert!(line.contains(&v(&[2, 4])).unwrap());
        assert!(!line.contains(&v(&[2, 3])).unwrap());
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(&[v(&[1, 0, 0]), v(&[0, 1, 0])], 3).unwrap();
        let b = Subspace::span(&[v(&[0, 1, 0]), v(&[0, 0, 1])], 3).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), Subspace::span(&[v(&[0, 5, 0])], 3).unwrap());
    }

    #[test]
    fn coordinates_roundtrip() {
        let s = Subspace::span(&[v(&[1, 1, 0]), v(&[0, 1, 1])], 3).unwrap();
        let w = v(&[2, 5, 3]);
        let c = s.coordinates(&w).unwrap();
        assert_eq!(s.element(&c), w);
        assert!(s.coordinates(&v(&[1, 0, 0])).is_none());
    }
}
