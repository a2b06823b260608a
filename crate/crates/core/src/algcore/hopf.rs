//! Coalgebras and Hopf algebras by structure constants.

use crate::error::{check_len, Error, Result};
use crate::exactlin::{vector, Field, Matrix, Scalar, StructureTensor, Vector};
use crate::report::VerificationReport;

use super::algebra::{tensor_product_algebra, AlgebraData};

/// Comultiplication as an `n² × n` matrix (column `i` is `Δ(b_i)` in the
/// row-major basis of `H ⊗ H`) and the counit as a row vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    comult: Matrix,
    counit: Vector,
}

impl CoalgebraData {
    pub fn new(comult: Matrix, counit: Vector) -> Result<CoalgebraData> {
        let n = counit.len();
        check_len(n * n, comult.rows())?;
        check_len(n, comult.cols())?;
        Ok(CoalgebraData { comult, counit })
    }

    /// Builds the comultiplication from `(j, k, c)` terms of each `Δ(b_i)`.
    pub fn from_terms(counit: Vector, mut terms: impl FnMut(usize) -> Vec<(usize, usize, Scalar)>) -> Result<CoalgebraData> {
        let n = counit.len();
        let mut comult = Matrix::zeros(n * n, n);
        for i in 0..n {
            for (j, k, c) in terms(i) {
                if j >= n || k >= n {
                    return Err(Error::Shape(format!("comultiplication term ({j}, {k}) outside dimension {n}")));
                }
                comult.add_to(j * n + k, i, &c);
            }
        }
        CoalgebraData::new(comult, counit)
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    /// `Δ(v)` in the row-major basis of `H ⊗ H`.
    pub fn coproduct(&self, v: &[Scalar]) -> Vector {
        self.comult.mul_vec(v)
    }

    /// Nonzero Sweedler terms `(j, k, c)` of `Δ(b_i) = Σ c b_j ⊗ b_k`.
    pub fn terms(&self, i: usize) -> Vec<(usize, usize, Scalar)> {
        let n = self.dim();
        (0..n * n)
            .filter(|&r| !self.comult.get(r, i).is_zero())
            .map(|r| (r / n, r % n, self.comult.get(r, i).clone()))
            .collect()
    }

    pub fn epsilon(&self, v: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (a, b) in self.counit.iter().zip(v) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    /// Coassociativity and counit laws on every basis element.
    pub fn verify(&self, labels: &[String]) -> VerificationReport {
        let n = self.dim();
        let mut report = VerificationReport::new();
        let mut bad = None;
        for i in 0..n {
            let mut left = vector::zeros(n * n * n);
            let mut right = vector::zeros(n * n * n);
            for (j, k, c) in self.terms(i) {
                for (j1, j2, d) in self.terms(j) {
                    left[(j1 * n + j2) * n + k] += &(&c * &d);
                }
                for (k1, k2, d) in self.terms(k) {
                    right[(j * n + k1) * n + k2] += &(&c * &d);
                }
            }
            if left != right {
                bad = Some(i);
                break;
            }
        }
        report.record(
            "coassociativity",
            match bad {
                None => Ok(()),
                Some(i) => Err(format!("(Δ⊗I)Δ != (I⊗Δ)Δ at {}", labels[i])),
            },
        );
        let bad = (0..n).find(|&i| {
            let mut left = vector::zeros(n);
            let mut right = vector::zeros(n);
            for (j, k, c) in self.terms(i) {
                left[k] += &(&self.counit[j] * &c);
                right[j] += &(&self.counit[k] * &c);
            }
            let target = self.comult.field().one();
            let expected: Vector = (0..n).map(|r| if r == i { target.clone() } else { Scalar::zero() }).collect();
            left != expected || right != expected
        });
        report.record(
            "counit",
            match bad {
                None => Ok(()),
                Some(i) => Err(format!("(ε⊗I)Δ or (I⊗ε)Δ differs from id at {}", labels[i])),
            },
        );
        report
    }
}

/// A finite-dimensional Hopf algebra. The antipode uses the column
/// convention: column `i` of `antipode` holds `S(b_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData {
    algebra: AlgebraData,
    coalgebra: CoalgebraData,
    antipode: Matrix,
    antipode_inverse: Matrix,
}

impl HopfAlgebraData {
    /// Assembles the parts and inverts the antipode. Axioms are not checked here.
    pub fn from_parts(algebra: AlgebraData, coalgebra: CoalgebraData, antipode: Matrix) -> Result<HopfAlgebraData> {
        let n = algebra.dim();
        check_len(n, coalgebra.dim())?;
        check_len(n, antipode.rows())?;
        check_len(n, antipode.cols())?;
        algebra.require_unit()?;
        let antipode_inverse = antipode.inverse()?;
        Ok(HopfAlgebraData { algebra, coalgebra, antipode, antipode_inverse })
    }

    /// [`HopfAlgebraData::from_parts`] followed by [`verify_structure`].
    pub fn verified(algebra: AlgebraData, coalgebra: CoalgebraData, antipode: Matrix) -> Result<HopfAlgebraData> {
        let h = HopfAlgebraData::from_parts(algebra, coalgebra, antipode)?;
        verify_structure(&h).into_result("Hopf algebra")?;
        Ok(h)
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalgebra
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inverse(&self) -> &Matrix {
        &self.antipode_inverse
    }

    pub fn unit(&self) -> &Vector {
        self.algebra.unit().expect("Hopf algebras are unital")
    }

    /// Index of the basis element equal to `1_H`, when the unit is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        let u = self.unit();
        let i = vector::first_nonzero(u)?;
        (u[i].is_one() && u.iter().enumerate().all(|(j, c)| j == i || c.is_zero())).then_some(i)
    }

    pub fn counit(&self) -> &Vector {
        self.coalgebra.counit()
    }

    pub fn epsilon(&self, v: &[Scalar]) -> Scalar {
        self.coalgebra.epsilon(v)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.algebra.mul(x, y)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vector {
        self.algebra.mul_basis(i, j)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.algebra.basis_vector(i)
    }

    /// Sweedler terms `(j, k, c)` of `Δ(b_i)`.
    pub fn comult_terms(&self, i: usize) -> Vec<(usize, usize, Scalar)> {
        self.coalgebra.terms(i)
    }

    pub fn format(&self, v: &[Scalar]) -> String {
        self.algebra.format(v)
    }

    /// Equality of all structure tensors, ignoring labels.
    pub fn same_structure(&self, other: &HopfAlgebraData) -> bool {
        self.algebra.mult() == other.algebra.mult()
            && self.algebra.unit() == other.algebra.unit()
            && self.coalgebra == other.coalgebra
            && self.antipode == other.antipode
    }
}

/// One report entry per axiom group: associativity, unit, coassociativity,
/// counit, bialgebra, antipode.
pub fn verify_structure(h: &HopfAlgebraData) -> VerificationReport {
    let mut report = verify_hopf_axioms(&h.algebra, &h.coalgebra, &h.antipode);
    let n = h.dim();
    report.expect(
        "antipode_inverse",
        h.antipode_inverse.mul(&h.antipode) == Matrix::identity(h.field(), n),
        || "S⁻¹S != id".to_string(),
    );
    report
}

/// Axiom checks on unassembled parts, usable when the antipode is singular.
pub fn verify_hopf_axioms(algebra: &AlgebraData, coalgebra: &CoalgebraData, antipode: &Matrix) -> VerificationReport {
    let mut report = VerificationReport::new();
    let n = algebra.dim();
    if coalgebra.dim() != n || antipode.rows() != n || antipode.cols() != n {
        report.fail("shape", format!("algebra dim {n}, coalgebra dim {}, antipode {}x{}", coalgebra.dim(), antipode.rows(), antipode.cols()));
        return report;
    }
    let labels = algebra.labels();
    let alg = algebra.verify();
    for c in alg.checks {
        report.checks.push(c);
    }
    let Some(unit) = algebra.unit() else {
        report.fail("unit", "algebra has no unit");
        return report;
    };
    for c in coalgebra.verify(labels).checks {
        report.checks.push(c);
    }

    let hh = tensor_product_algebra(algebra, algebra);
    let mut bad: Option<String> = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let prod = algebra.mul_basis(i, j);
            let di = coalgebra.coproduct(&algebra.basis_vector(i));
            let dj = coalgebra.coproduct(&algebra.basis_vector(j));
            if coalgebra.coproduct(&prod) != hh.mul(&di, &dj) {
                bad = Some(format!("Δ(xy) != Δ(x)Δ(y) at ({}, {})", labels[i], labels[j]));
                break 'outer;
            }
            let ei = coalgebra.epsilon(&algebra.basis_vector(i));
            let ej = coalgebra.epsilon(&algebra.basis_vector(j));
            if coalgebra.epsilon(&prod) != &ei * &ej {
                bad = Some(format!("ε(xy) != ε(x)ε(y) at ({}, {})", labels[i], labels[j]));
                break 'outer;
            }
        }
    }
    if bad.is_none() && coalgebra.coproduct(unit) != vector::kron(unit, unit) {
        bad = Some("Δ(1) != 1⊗1".into());
    }
    if bad.is_none() && !coalgebra.epsilon(unit).is_one() {
        bad = Some("ε(1) != 1".into());
    }
    report.record("bialgebra", bad.map_or(Ok(()), Err));

    let bad = (0..n).find(|&i| {
        let target = vector::scale(&coalgebra.epsilon(&algebra.basis_vector(i)), unit);
        let mut left = vector::zeros(n);
        let mut right = vector::zeros(n);
        for (j, k, c) in coalgebra.terms(i) {
            let sj = antipode.column(j);
            let sk = antipode.column(k);
            vector::axpy(&mut left, &c, &algebra.mul(&sj, &algebra.basis_vector(k)));
            vector::axpy(&mut right, &c, &algebra.mul(&algebra.basis_vector(j), &sk));
        }
        left != target || right != target
    });
    report.record(
        "antipode",
        match bad {
            None => Ok(()),
            Some(i) => Err(format!("m(S⊗I)Δ or m(I⊗S)Δ differs from uε at {}", labels[i])),
        },
    );
    report
}

/// `H*` on the dual basis `h_i*`.
pub fn dual_hopf(h: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    verify_structure(h).into_result("Hopf algebra")?;
    let n = h.dim();
    let labels: Vec<String> = h.labels().iter().map(|l| format!("{l}*")).collect();
    let mut mult = StructureTensor::new(n, n, n);
    for k in 0..n {
        for (i, j, c) in h.comult_terms(k) {
            mult.add_coefficient(i, j, k, &c)?;
        }
    }
    let algebra = AlgebraData::new(h.field(), labels, mult, Some(h.counit().clone()))?;
    let mut comult = Matrix::zeros(n * n, n);
    for (i, j, k, c) in h.algebra().mult().quadruples() {
        comult.set(i * n + j, k, c);
    }
    let coalgebra = CoalgebraData::new(comult, h.unit().clone())?;
    HopfAlgebraData::from_parts(algebra, coalgebra, h.antipode().transpose())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    /// kZ₂ on {1, g}.
    fn kz2() -> HopfAlgebraData {
        let f = q();
        let alg = AlgebraData::from_fn(f, vec!["1".into(), "g".into()], Some(vector::unit_vector(f, 2, 0)), |i, j| {
            vector::unit_vector(f, 2, (i + j) % 2)
        })
        .unwrap();
        let co = CoalgebraData::from_terms(vec![f.one(), f.one()], |i| vec![(i, i, f.one())]).unwrap();
        HopfAlgebraData::from_parts(alg, co, Matrix::identity(f, 2)).unwrap()
    }

    #[test]
    fn kz2_passes() {
        let r = verify_structure(&kz2());
        assert!(r.all_passed(), "{r}");
        for name in ["associativity", "unit", "coassociativity", "counit", "bialgebra", "antipode"] {
            assert!(r.get(name).is_some(), "{name}");
        }
    }

    #[test]
    fn dual_of_kz2_is_function_algebra() {
        let d = dual_hopf(&kz2()).unwrap();
        assert!(verify_structure(&d).all_passed());
        assert_eq!(d.unit(), &vec![q().one(), q().one()]);
        assert!(vector::is_zero(&d.mul_basis(0, 1)));
        assert_eq!(d.mul_basis(1, 1), vector::unit_vector(q(), 2, 1));
        let dd = dual_hopf(&d).unwrap();
        assert_eq!(dd.algebra().mult(), kz2().algebra().mult());
        assert_eq!(dd.coalgebra(), kz2().coalgebra());
    }

    #[test]
    fn singular_antipode_is_an_error() {
        let h = kz2();
        let err = HopfAlgebraData::from_parts(h.algebra().clone(), h.coalgebra().clone(), Matrix::zeros(2, 2));
        assert!(matches!(err, Err(Error::SingularMatrix { .. })));
    }
}
