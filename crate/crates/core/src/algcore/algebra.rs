//! Finite-dimensional associative algebras by structure constants.

use crate::error::{check_len, Error, Result};
use crate::exactlin::{closure_bilinear, is_closed, vector, Field, Matrix, Scalar, StructureTensor, Subspace, Vector};
use crate::report::VerificationReport;

/// An algebra on basis `b_0..b_{n-1}`; `mult.entry(i, j)` holds `b_i b_j`.
/// The unit is optional so that non-unital enveloping algebras can be represented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    field: Field,
    labels: Vec<String>,
    mult: StructureTensor,
    unit: Option<Vector>,
}

impl AlgebraData {
    pub fn new(field: Field, labels: Vec<String>, mult: StructureTensor, unit: Option<Vector>) -> Result<AlgebraData> {
        let n = labels.len();
        check_len(n, mult.left_dim())?;
        check_len(n, mult.right_dim())?;
        check_len(n, mult.out_dim())?;
        if let Some(u) = &unit {
            check_len(n, u.len())?;
        }
        Ok(AlgebraData { field, labels, mult, unit })
    }

    /// Builds an algebra from a dense product of basis elements.
    pub fn from_fn(
        field: Field,
        labels: Vec<String>,
        unit: Option<Vector>,
        f: impl FnMut(usize, usize) -> Vector,
    ) -> Result<AlgebraData> {
        let n = labels.len();
        AlgebraData::new(field, labels, StructureTensor::from_fn(n, n, n, f), unit)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<AlgebraData> {
        check_len(self.dim(), labels.len())?;
        self.labels = labels;
        Ok(self)
    }

    pub fn mult(&self) -> &StructureTensor {
        &self.mult
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn require_unit(&self) -> Result<&Vector> {
        self.unit.as_ref().ok_or(Error::NonUnital)
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        vector::unit_vector(self.field, self.dim(), i)
    }

    pub fn zero(&self) -> Vector {
        vector::zeros(self.dim())
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.mult.apply(x, y)
    }

    /// Product of basis elements `b_i b_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> Vector {
        self.mult.dense(i, j)
    }

    pub fn format(&self, v: &[Scalar]) -> String {
        vector::format_with_labels(v, &self.labels)
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(&cols, self.dim()).expect("square")
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(&cols, self.dim()).expect("square")
    }

    /// The multiplication `A ⊗ A → A` as a `dim × dim²` matrix.
    pub fn multiplication_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n * n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.mult.entry(i, j) {
                    m.set(*k, i * n + j, c.clone());
                }
            }
        }
        m
    }

    pub fn is_idempotent(&self, x: &[Scalar]) -> bool {
        self.mul(x, x) == x
    }

    pub fn is_central(&self, x: &[Scalar]) -> bool {
        (0..self.dim()).all(|i| {
            let b = self.basis_vector(i);
            self.mul(x, &b) == self.mul(&b, x)
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    /// Associativity on all basis triples and, when a unit is present, the unit laws.
    pub fn verify(&self) -> VerificationReport {
        let mut report = VerificationReport::new();
        report.record("associativity", self.first_non_associative());
        if let Some(u) = &self.unit {
            let bad = (0..self.dim()).find(|&i| {
                let b = self.basis_vector(i);
                self.mul(u, &b) != b || self.mul(&b, u) != b
            });
            report.record(
                "unit",
                match bad {
                    None => Ok(()),
                    Some(i) => Err(format!("1*b != b or b*1 != b at b = {}", self.labels[i])),
                },
            );
        }
        report
    }

    fn first_non_associative(&self) -> std::result::Result<(), String> {
        let n = self.dim();
        let products: Vec<Vec<Vector>> = (0..n).map(|i| (0..n).map(|j| self.mul_basis(i, j)).collect()).collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.mul(&products[i][j], &self.basis_vector(k));
                    let right = self.mul(&self.basis_vector(i), &products[j][k]);
                    if left != right {
                        return Err(format!(
                            "(b_i b_j) b_k != b_i (b_j b_k) at ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Solves for a two-sided unit.
    pub fn find_unit(&self) -> Option<Vector> {
        let n = self.dim();
        if n == 0 {
            return Some(Vector::new());
        }
        // Unknown u; equations u b_i = b_i and b_i u = b_i, stacked.
        let mut rows: Vec<Vector> = Vec::new();
        let mut rhs: Vector = Vec::new();
        for i in 0..n {
            let target = self.basis_vector(i);
            for (side, k) in (0..2).flat_map(|s| (0..n).map(move |k| (s, k))) {
                let row: Vector = (0..n)
                    .map(|u| {
                        let prod = if side == 0 { self.mul_basis(u, i) } else { self.mul_basis(i, u) };
                        prod[k].clone()
                    })
                    .collect();
                rows.push(row);
                rhs.push(target[k].clone());
            }
        }
        let m = Matrix::from_rows(rows, n).ok()?;
        m.solve(&rhs)
    }

    /// Subalgebra generated by `seed` (optionally with the unit).
    pub fn subalgebra_generated(&self, seed: &Subspace, include_unit: bool) -> Result<Subspace> {
        check_len(self.dim(), seed.ambient_dim())?;
        let unit = if include_unit { Some(self.require_unit()?.as_slice()) } else { None };
        closure_bilinear(seed.basis(), &self.mult, unit)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim() && is_closed(s, &self.mult)
    }

    /// Structure constants of a product-closed subspace on its canonical basis.
    /// The unit is whatever two-sided unit the subalgebra has (possibly none).
    pub fn restrict(&self, s: &Subspace, labels: Vec<String>) -> Result<AlgebraData> {
        check_len(self.dim(), s.ambient_dim())?;
        check_len(s.dim(), labels.len())?;
        let d = s.dim();
        let basis = s.basis();
        let mut mult = StructureTensor::new(d, d, d);
        for i in 0..d {
            for j in 0..d {
                let prod = self.mul(&basis[i], &basis[j]);
                let coords = s
                    .coordinates(&prod)
                    .ok_or_else(|| Error::Precondition("subspace is not closed under multiplication".into()))?;
                mult.set_dense(i, j, &coords);
            }
        }
        let mut sub = AlgebraData::new(self.field, labels, mult, None)?;
        sub.unit = sub.find_unit();
        Ok(sub)
    }

    /// The same space with `x ∘ y = y x`.
    pub fn opposite(&self) -> AlgebraData {
        let n = self.dim();
        let mut mult = StructureTensor::new(n, n, n);
        for i in 0..n {
            for j in 0..n {
                mult.set_dense(i, j, &self.mult.dense(j, i));
            }
        }
        AlgebraData { field: self.field, labels: self.labels.clone(), mult, unit: self.unit.clone() }
    }

    /// Right-ideal test: `s · A ⊆ s`.
    pub fn is_right_ideal(&self, s: &Subspace) -> bool {
        s.basis()
            .iter()
            .all(|x| (0..self.dim()).all(|i| s.contains(&self.mul(x, &self.basis_vector(i))).unwrap_or(false)))
    }

    pub fn is_left_ideal(&self, s: &Subspace) -> bool {
        s.basis()
            .iter()
            .all(|x| (0..self.dim()).all(|i| s.contains(&self.mul(&self.basis_vector(i), x)).unwrap_or(false)))
    }

    /// `span{x b_i}`.
    pub fn left_multiple_span(&self, x: &[Scalar]) -> Subspace {
        let vs: Vec<Vector> = (0..self.dim()).map(|i| self.mul(x, &self.basis_vector(i))).collect();
        Subspace::span(&vs, self.dim()).expect("vectors have algebra length")
    }

    /// `span{b_i x}`.
    pub fn right_multiple_span(&self, x: &[Scalar]) -> Subspace {
        let vs: Vec<Vector> = (0..self.dim()).map(|i| self.mul(&self.basis_vector(i), x)).collect();
        Subspace::span(&vs, self.dim()).expect("vectors have algebra length")
    }

    /// `span{s t}` for `s ∈ S`, `t ∈ T`.
    pub fn product_span(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in s.basis() {
            for y in t.basis() {
                vs.push(self.mul(x, y));
            }
        }
        Subspace::span(&vs, self.dim()).expect("vectors have algebra length")
    }
}

/// `A ⊗ B` with componentwise product on basis pairs `(i, j) ↦ i·dim(B) + j`.
pub fn tensor_product_algebra(a: &AlgebraData, b: &AlgebraData) -> AlgebraData {
    let (m, n) = (a.dim(), b.dim());
    let mut labels = Vec::with_capacity(m * n);
    for la in a.labels() {
        for lb in b.labels() {
            labels.push(format!("{la}⊗{lb}"));
        }
    }
    let mut mult = StructureTensor::new(m * n, m * n, m * n);
    for i1 in 0..m {
        for j1 in 0..n {
            for i2 in 0..m {
                for j2 in 0..n {
                    let mut v = Vec::new();
                    for (ka, ca) in a.mult().entry(i1, i2) {
                        for (kb, cb) in b.mult().entry(j1, j2) {
                            v.push((ka * n + kb, ca * cb));
                        }
                    }
                    let mut dense = vector::zeros(m * n);
                    for (k, c) in v {
                        dense[k] = c;
                    }
                    mult.set_dense(i1 * n + j1, i2 * n + j2, &dense);
                }
            }
        }
    }
    let unit = match (a.unit(), b.unit()) {
        (Some(ua), Some(ub)) => Some(vector::kron(ua, ub)),
        _ => None,
    };
    AlgebraData::new(a.field(), labels, mult, unit).expect("tensor shapes agree")
}

/// `End_k(k^n)` on matrix units `e_{i,j}` (index `i·n + j`), `e_{i,j} e_{k,l} = δ_{j,k} e_{i,l}`.
///
/// `e_{i,j}` is the operator sending basis vector `j` to basis vector `i`, so
/// the product is composition of operators and coordinates are matrix entries.
pub fn end_algebra(field: Field, n: usize) -> AlgebraData {
    let labels = (0..n).flat_map(|i| (0..n).map(move |j| format!("e{i}{j}"))).collect();
    let mut unit = vector::zeros(n * n);
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    AlgebraData::from_fn(field, labels, Some(unit), |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        let mut v = vector::zeros(n * n);
        if j == k {
            v[i * n + l] = field.one();
        }
        v
    })
    .expect("end algebra shapes agree")
}

/// `M_n(B) = B ⊗ End(k^n)` on basis `b_s E_{i,j}` (index `s·n² + i·n + j`).
pub fn matrix_algebra(b: &AlgebraData, n: usize) -> AlgebraData {
    tensor_product_algebra(b, &end_algebra(b.field(), n))
}

/// Operator matrix of an element of `End(k^n)` given in matrix-unit coordinates.
pub fn end_element_to_matrix(v: &[Scalar], n: usize) -> Matrix {
    assert_eq!(v.len(), n * n, "End(k^n) element has wrong length");
    Matrix::from_fn(n, n, |r, c| v[r * n + c].clone())
}

pub fn matrix_to_end_element(m: &Matrix) -> Vector {
    let n = m.rows();
    (0..n * n).map(|i| m.get(i / n, i % n).clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn end_algebra_units() {
        let e = end_algebra(q(), 2);
        assert_eq!(e.dim(), 4);
        assert_eq!(e.unit().unwrap(), &vec![q().one(), q().zero(), q().zero(), q().one()]);
        // e12 e21 = e11, e12 e12 = 0 (0-based: e01 e10 = e00)
        assert_eq!(e.mul_basis(1, 2), e.basis_vector(0));
        assert!(vector::is_zero(&e.mul_basis(1, 1)));
        assert!(e.verify().all_passed());
    }

    #[test]
    fn end_unit_trace() {
        for n in 1..4 {
            let e = end_algebra(q(), n);
            let l = e.left_mult(e.unit().unwrap());
            let trace = (0..l.rows()).fold(Scalar::zero(), |acc, i| &acc + l.get(i, i));
            assert_eq!(trace, q().from_int((n * n) as i64));
        }
    }

    #[test]
    fn matrix_algebra_dimension() {
        let two = AlgebraData::from_fn(q(), vec!["p0".into(), "p1".into()], Some(vec![q().one(), q().one()]), |i, j| {
            let mut v = vector::zeros(2);
            if i == j {
                v[i] = q().one();
            }
            v
        })
        .unwrap();
        let m = matrix_algebra(&two, 2);
        assert_eq!(m.dim(), 8);
        assert!(m.verify().all_passed());
    }

    #[test]
    fn find_unit_and_restrict() {
        let e = end_algebra(q(), 2);
        assert_eq!(e.find_unit().as_ref(), e.unit());
        // diagonal subalgebra
        let s = Subspace::span(&[e.basis_vector(0), e.basis_vector(3)], 4).unwrap();
        let d = e.restrict(&s, vec!["d0".into(), "d1".into()]).unwrap();
        assert_eq!(d.unit().unwrap(), &vec![q().one(), q().one()]);
        // strictly upper triangular: non-unital
        let s = Subspace::span(&[e.basis_vector(1)], 4).unwrap();
        let n = e.restrict(&s, vec!["n".into()]).unwrap();
        assert!(n.unit().is_none());
    }

    #[test]
    fn associativity_failure_names_triple() {
        // deliberately broken: b0 b0 = b1, b1 b0 = b0, others zero
        let a = AlgebraData::from_fn(q(), vec!["u".into(), "v".into()], None, |i, j| {
            let mut v = vector::zeros(2);
            match (i, j) {
                (0, 0) => v[1] = q().one(),
                (1, 0) => v[0] = q().one(),
                _ => {}
            }
            v
        })
        .unwrap();
        let r = a.verify();
        assert!(!r.all_passed());
        assert!(r.get("associativity").unwrap().detail.as_ref().unwrap().contains("(u, u, u)"));
    }
}
