//! Partial and global right coactions `A → A ⊗ H`.

use std::fmt;
use std::marker::PhantomData;

use crate::algcore::{tensor_product_algebra, AlgebraData, HopfAlgebraData};
use crate::error::{check_len, Error, Result};
use crate::exactlin::{vector, Matrix, Scalar, Subspace, Vector};
use crate::report::VerificationReport;

use super::kind::{Global, Kind, Partial};

/// A coaction matrix: column `i` is `ρ(a_i)` in the row-major basis
/// `a_j ⊗ h_k ↦ j·dim(H) + k`.
#[derive(Clone, PartialEq, Eq)]
pub struct CoactionData<K: Kind> {
    hopf: HopfAlgebraData,
    carrier: AlgebraData,
    coaction: Matrix,
    kind: PhantomData<K>,
}

/// `ρ̄` satisfying the three partial-comodule-algebra axioms.
pub type PartialCoactionData = CoactionData<Partial>;
/// `ρ` making the carrier an `H`-comodule algebra.
pub type GlobalCoactionData = CoactionData<Global>;

impl<K: Kind> fmt::Debug for CoactionData<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct(K::COACTION_NAME)
            .field("hopf_dim", &self.hopf.dim())
            .field("carrier_dim", &self.carrier.dim())
            .field("coaction", &self.coaction)
            .finish()
    }
}

/// `(I ⊗ h_k*)` applied to an element of `A ⊗ H`.
pub fn contract_right(v: &[Scalar], a_dim: usize, h_dim: usize, k: usize) -> Vector {
    (0..a_dim).map(|j| v[j * h_dim + k].clone()).collect()
}

impl<K: Kind> CoactionData<K> {
    pub fn new(hopf: HopfAlgebraData, carrier: AlgebraData, coaction: Matrix) -> Result<CoactionData<K>> {
        check_len(carrier.dim() * hopf.dim(), coaction.rows())?;
        check_len(carrier.dim(), coaction.cols())?;
        if K::CARRIER_UNITAL {
            carrier.require_unit()?;
        }
        Ok(CoactionData { hopf, carrier, coaction, kind: PhantomData })
    }

    /// Builds the coaction from `ρ(a_i)` given as vectors in `A ⊗ H`.
    pub fn from_fn(hopf: HopfAlgebraData, carrier: AlgebraData, f: impl FnMut(usize) -> Vector) -> Result<CoactionData<K>> {
        let images: Vec<Vector> = (0..carrier.dim()).map(f).collect();
        let coaction = Matrix::from_columns(&images, carrier.dim() * hopf.dim())?;
        CoactionData::new(hopf, carrier, coaction)
    }

    pub fn verified(hopf: HopfAlgebraData, carrier: AlgebraData, coaction: Matrix) -> Result<CoactionData<K>> {
        let data = CoactionData::new(hopf, carrier, coaction)?;
        data.verify().into_result(K::COACTION_NAME)?;
        Ok(data)
    }

    pub fn hopf(&self) -> &HopfAlgebraData {
        &self.hopf
    }

    pub fn carrier(&self) -> &AlgebraData {
        &self.carrier
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    pub fn rho(&self, a: &[Scalar]) -> Vector {
        self.coaction.mul_vec(a)
    }

    pub fn rho_basis(&self, i: usize) -> Vector {
        self.coaction.column(i)
    }

    /// The algebra `A ⊗ H`.
    pub fn tensor_algebra(&self) -> AlgebraData {
        tensor_product_algebra(&self.carrier, self.hopf.algebra())
    }

    pub fn verify(&self) -> VerificationReport {
        K::verify_coaction(self)
    }

    pub fn reinterpret<L: Kind>(&self) -> Result<CoactionData<L>> {
        CoactionData::verified(self.hopf.clone(), self.carrier.clone(), self.coaction.clone())
    }

    /// `h* ⇀ a = (I ⊗ h_k*) ρ(a)` for the dual basis functional `h_k*`.
    pub fn hit(&self, k: usize, a: &[Scalar]) -> Vector {
        contract_right(&self.rho(a), self.carrier.dim(), self.hopf.dim(), k)
    }

    /// `(ρ ⊗ I)(v)` for `v ∈ A ⊗ H`, in `A ⊗ H ⊗ H`.
    fn rho_on_left(&self, v: &[Scalar]) -> Vector {
        let (a, n) = (self.carrier.dim(), self.hopf.dim());
        let mut out = vector::zeros(a * n * n);
        for j in 0..a {
            for k in 0..n {
                let c = &v[j * n + k];
                if c.is_zero() {
                    continue;
                }
                let r = self.rho_basis(j);
                for (idx, d) in r.iter().enumerate() {
                    if !d.is_zero() {
                        out[idx * n + k] += &(c * d);
                    }
                }
            }
        }
        out
    }

    /// `(I ⊗ Δ)(v)` for `v ∈ A ⊗ H`.
    fn delta_on_right(&self, v: &[Scalar]) -> Vector {
        let (a, n) = (self.carrier.dim(), self.hopf.dim());
        let mut out = vector::zeros(a * n * n);
        for j in 0..a {
            for k in 0..n {
                let c = &v[j * n + k];
                if c.is_zero() {
                    continue;
                }
                for (p, q, d) in self.hopf.comult_terms(k) {
                    out[(j * n + p) * n + q] += &(c * &d);
                }
            }
        }
        out
    }

    fn check_multiplicative(&self) -> std::result::Result<(), String> {
        let t = self.tensor_algebra();
        let a = self.carrier.dim();
        for i in 0..a {
            for j in 0..a {
                let left = self.rho(&self.carrier.mul_basis(i, j));
                let right = t.mul(&self.rho_basis(i), &self.rho_basis(j));
                if left != right {
                    return Err(format!(
                        "ρ(ab) != ρ(a)ρ(b) at ({}, {})",
                        self.carrier.labels()[i],
                        self.carrier.labels()[j]
                    ));
                }
            }
        }
        Ok(())
    }

    fn check_counit(&self) -> std::result::Result<(), String> {
        let (a, n) = (self.carrier.dim(), self.hopf.dim());
        for i in 0..a {
            let r = self.rho_basis(i);
            let mut back = vector::zeros(a);
            for j in 0..a {
                for k in 0..n {
                    let c = &r[j * n + k];
                    if !c.is_zero() {
                        back[j] += &(c * &self.hopf.counit()[k]);
                    }
                }
            }
            if back != self.carrier.basis_vector(i) {
                return Err(format!("(I⊗ε)ρ(a) != a at a = {}", self.carrier.labels()[i]));
            }
        }
        Ok(())
    }
}

impl PartialCoactionData {
    /// `(ρ̄ ⊗ I)ρ̄(a) = (ρ̄(1_A) ⊗ 1_H)((I ⊗ Δ)ρ̄(a))`.
    fn check_partial_coassociativity(&self) -> std::result::Result<(), String> {
        let one = self.carrier.require_unit().map_err(|e| e.to_string())?;
        let t3 = tensor_product_algebra(&self.tensor_algebra(), self.hopf.algebra());
        let left_factor = vector::kron(&self.rho(one), self.hopf.unit());
        for i in 0..self.carrier.dim() {
            let r = self.rho_basis(i);
            let left = self.rho_on_left(&r);
            let right = t3.mul(&left_factor, &self.delta_on_right(&r));
            if left != right {
                return Err(format!(
                    "(ρ⊗I)ρ(a) != (ρ(1)⊗1)(I⊗Δ)ρ(a) at a = {}",
                    self.carrier.labels()[i]
                ));
            }
        }
        Ok(())
    }
}

impl GlobalCoactionData {
    fn check_global_coassociativity(&self) -> std::result::Result<(), String> {
        for i in 0..self.carrier.dim() {
            let r = self.rho_basis(i);
            if self.rho_on_left(&r) != self.delta_on_right(&r) {
                return Err(format!("(ρ⊗I)ρ(a) != (I⊗Δ)ρ(a) at a = {}", self.carrier.labels()[i]));
            }
        }
        Ok(())
    }

    /// The trivial coaction `I ⊗ Δ` on `A ⊗ H`.
    pub fn trivial_on_tensor(carrier: &AlgebraData, hopf: &HopfAlgebraData) -> GlobalCoactionData {
        let ambient = tensor_product_algebra(carrier, hopf.algebra());
        let (a, n) = (carrier.dim(), hopf.dim());
        let mut coaction = Matrix::zeros(a * n * n, a * n);
        for j in 0..a {
            for k in 0..n {
                for (p, q, c) in hopf.comult_terms(k) {
                    coaction.set(((j * n) + p) * n + q, j * n + k, c);
                }
            }
        }
        CoactionData::new(hopf.clone(), ambient, coaction).expect("tensor shapes agree")
    }

    /// True when `ρ(s) ∈ S ⊗ H` for every basis vector of `s`.
    pub fn is_stable(&self, s: &Subspace) -> bool {
        let (a, n) = (self.carrier.dim(), self.hopf.dim());
        s.basis().iter().all(|b| {
            let r = self.rho(b);
            (0..n).all(|k| s.contains(&contract_right(&r, a, n, k)).unwrap_or(false))
        })
    }

    /// Restriction to a coaction-stable subalgebra given on its canonical basis.
    pub fn restrict(&self, sub: &Subspace, labels: Vec<String>) -> Result<GlobalCoactionData> {
        let (a, n) = (self.carrier.dim(), self.hopf.dim());
        let carrier = self.carrier.restrict(sub, labels)?;
        let d = sub.dim();
        let mut images = Vec::with_capacity(d);
        for b in sub.basis() {
            let r = self.rho(b);
            let mut image = vector::zeros(d * n);
            for k in 0..n {
                let coords = sub
                    .coordinates(&contract_right(&r, a, n, k))
                    .ok_or_else(|| Error::Precondition("subspace is not coaction-stable".into()))?;
                for (j, c) in coords.into_iter().enumerate() {
                    image[j * n + k] = c;
                }
            }
            images.push(image);
        }
        CoactionData::new(self.hopf.clone(), carrier, Matrix::from_columns(&images, d * n)?)
    }

    pub(crate) fn check_unit_preserved(&self) -> Option<std::result::Result<(), String>> {
        let one = self.carrier.unit()?;
        Some(if self.rho(one) == vector::kron(one, self.hopf.unit()) {
            Ok(())
        } else {
            Err("ρ(1) != 1⊗1".to_string())
        })
    }
}

/// Partial-comodule-algebra axioms 1)–3) plus the carrier's algebra axioms.
pub fn verify_partial_coaction(p: &PartialCoactionData) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.merge("carrier", p.carrier.verify());
    report.record("multiplicativity", p.check_multiplicative());
    report.record("counit", p.check_counit());
    report.record("coassociativity", p.check_partial_coassociativity());
    report
}

/// Comodule-algebra axioms plus the carrier's algebra axioms.
pub fn verify_global_coaction(b: &GlobalCoactionData) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.merge("carrier", b.carrier.verify());
    report.record("coassociativity", b.check_global_coassociativity());
    report.record("counit", b.check_counit());
    report.record("multiplicativity", b.check_multiplicative());
    if let Some(outcome) = b.check_unit_preserved() {
        report.record("unit_preserved", outcome);
    }
    report
}
