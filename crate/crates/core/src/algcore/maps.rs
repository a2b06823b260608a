//! Linear maps between algebras and morphism checks.

use crate::error::{check_len, Result};
use crate::exactlin::{Matrix, Scalar, Vector};
use crate::report::VerificationReport;

use super::algebra::AlgebraData;

/// A linear map given by its matrix; column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMapData {
    matrix: Matrix,
}

impl LinearMapData {
    pub fn new(matrix: Matrix) -> LinearMapData {
        LinearMapData { matrix }
    }

    pub fn from_images(images: &[Vector], codomain_dim: usize) -> Result<LinearMapData> {
        Ok(LinearMapData { matrix: Matrix::from_columns(images, codomain_dim)? })
    }

    pub fn identity(a: &AlgebraData) -> LinearMapData {
        LinearMapData { matrix: Matrix::identity(a.field(), a.dim()) }
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMapData) -> Result<LinearMapData> {
        check_len(self.domain_dim(), other.codomain_dim())?;
        Ok(LinearMapData { matrix: self.matrix.mul(&other.matrix) })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// Multiplicativity on all basis pairs and unit preservation.
///
/// Unit preservation is only checked when both algebras are unital.
pub fn check_algebra_morphism(f: &LinearMapData, a: &AlgebraData, b: &AlgebraData) -> VerificationReport {
    let mut report = VerificationReport::new();
    if f.domain_dim() != a.dim() || f.codomain_dim() != b.dim() {
        report.fail(
            "shape",
            format!(
                "map is {}x{}, algebras have dims {} and {}",
                f.codomain_dim(),
                f.domain_dim(),
                a.dim(),
                b.dim()
            ),
        );
        return report;
    }
    let images: Vec<Vector> = (0..a.dim()).map(|i| f.matrix().column(i)).collect();
    let mut bad = None;
    'outer: for i in 0..a.dim() {
        for j in 0..a.dim() {
            if f.apply(&a.mul_basis(i, j)) != b.mul(&images[i], &images[j]) {
                bad = Some((i, j));
                break 'outer;
            }
        }
    }
    report.record(
        "multiplicative",
        match bad {
            None => Ok(()),
            Some((i, j)) => Err(format!("f(xy) != f(x)f(y) at ({}, {})", a.labels()[i], a.labels()[j])),
        },
    );
    if let (Some(ua), Some(ub)) = (a.unit(), b.unit()) {
        report.expect("unit", &f.apply(ua) == ub, || format!("f(1) = {}", b.format(&f.apply(ua))));
    }
    report
}

/// [`check_algebra_morphism`] plus bijectivity.
pub fn check_isomorphism(f: &LinearMapData, a: &AlgebraData, b: &AlgebraData) -> VerificationReport {
    let mut report = check_algebra_morphism(f, a, b);
    if report.passed("shape") || report.get("shape").is_none() {
        let rank = f.rank();
        report.expect("bijective", rank == a.dim() && rank == b.dim(), || {
            format!("rank {rank}, dims {} and {}", a.dim(), b.dim())
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::end_algebra;
    use crate::exactlin::Field;

    #[test]
    fn identity_is_isomorphism() {
        let e = end_algebra(Field::Rational, 2);
        assert!(check_isomorphism(&LinearMapData::identity(&e), &e, &e).all_passed());
    }

    #[test]
    fn transpose_is_not_multiplicative() {
        let e = end_algebra(Field::Rational, 2);
        let n = 2;
        let t = Matrix::from_fn(4, 4, |r, c| {
            if r == (c % n) * n + c / n {
                Field::Rational.one()
            } else {
                Scalar::zero()
            }
        });
        let r = check_isomorphism(&LinearMapData::new(t), &e, &e);
        assert!(!r.passed("multiplicative"));
        assert!(r.passed("bijective"));
    }
}
