//! Hopf pairings and the canonical conversion between coactions of `H`
//! and actions of `H*`.

use crate::algcore::{dual_hopf, HopfAlgebraData};
use crate::error::{Error, Result};
use crate::exactlin::{vector, Matrix, Scalar, StructureTensor};
use crate::report::VerificationReport;

use super::action::ActionData;
use super::coaction::CoactionData;
use super::kind::Kind;

/// A bilinear form `⟨h1_i, h2_j⟩ = form[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingData {
    pub h1: HopfAlgebraData,
    pub h2: HopfAlgebraData,
    pub form: Matrix,
}

impl PairingData {
    fn value(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let fy = self.form.mul_vec(y);
        let mut acc = Scalar::zero();
        for (a, b) in x.iter().zip(&fy) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    /// `⟨x ⊗ y, u ⊗ v⟩ = ⟨x, u⟩⟨y, v⟩` for tensors in `H1 ⊗ H1` and `H2 ⊗ H2`.
    fn value2(&self, left: &[Scalar], right: &[Scalar]) -> Scalar {
        let (n1, n2) = (self.h1.dim(), self.h2.dim());
        let mut acc = Scalar::zero();
        for (a, x) in left.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in right.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let f1 = self.form.get(a / n1, b / n2);
                let f2 = self.form.get(a % n1, b % n2);
                if !f1.is_zero() && !f2.is_zero() {
                    acc += &(&(x * y) * &(f1 * f2));
                }
            }
        }
        acc
    }

    /// Both one-sided kernels vanish.
    pub fn is_nondegenerate(&self) -> bool {
        let r = self.form.rank();
        r == self.h1.dim() && r == self.h2.dim()
    }
}

/// Pairing axioms (i)–(iv) and nondegeneracy.
pub fn verify_pairing(p: &PairingData) -> VerificationReport {
    let mut report = VerificationReport::new();
    let (n1, n2) = (p.h1.dim(), p.h2.dim());
    if p.form.rows() != n1 || p.form.cols() != n2 {
        report.fail("shape", format!("form is {}x{}, expected {n1}x{n2}", p.form.rows(), p.form.cols()));
        return report;
    }
    let mut bad = None;
    'i: for i in 0..n1 {
        for j in 0..n1 {
            for l in 0..n2 {
                let f = p.h2.basis_vector(l);
                let left = p.value(&p.h1.mul_basis(i, j), &f);
                let right = p.value2(&vector::kron(&p.h1.basis_vector(i), &p.h1.basis_vector(j)), &p.h2.coalgebra().coproduct(&f));
                if left != right {
                    bad = Some(format!("⟨hk, f⟩ at ({}, {}, {})", p.h1.labels()[i], p.h1.labels()[j], p.h2.labels()[l]));
                    break 'i;
                }
            }
        }
    }
    report.record("product_vs_coproduct", bad.map_or(Ok(()), Err));
    let mut bad = None;
    'ii: for i in 0..n1 {
        for j in 0..n2 {
            for l in 0..n2 {
                let h = p.h1.basis_vector(i);
                let left = p.value(&h, &p.h2.mul_basis(j, l));
                let right = p.value2(&p.h1.coalgebra().coproduct(&h), &vector::kron(&p.h2.basis_vector(j), &p.h2.basis_vector(l)));
                if left != right {
                    bad = Some(format!("⟨h, fg⟩ at ({}, {}, {})", p.h1.labels()[i], p.h2.labels()[j], p.h2.labels()[l]));
                    break 'ii;
                }
            }
        }
    }
    report.record("coproduct_vs_product", bad.map_or(Ok(()), Err));
    let bad = (0..n1).find(|&i| {
        let h = p.h1.basis_vector(i);
        p.value(&h, p.h2.unit()) != p.h1.epsilon(&h)
    });
    report.record("unit_right", bad.map_or(Ok(()), |i| Err(format!("⟨h, 1⟩ != ε(h) at {}", p.h1.labels()[i]))));
    let bad = (0..n2).find(|&l| {
        let f = p.h2.basis_vector(l);
        p.value(p.h1.unit(), &f) != p.h2.epsilon(&f)
    });
    report.record("unit_left", bad.map_or(Ok(()), |l| Err(format!("⟨1, f⟩ != ε(f) at {}", p.h2.labels()[l]))));
    report.expect("nondegenerate", p.is_nondegenerate(), || format!("form has rank {}", p.form.rank()));
    report
}

/// `⟨h*, k⟩ = h*(k)` between `H*` and `H`; the form is the identity.
pub fn canonical_pairing(h: &HopfAlgebraData) -> Result<PairingData> {
    let dual = dual_hopf(h)?;
    let pairing = PairingData { h1: dual, h2: h.clone(), form: Matrix::identity(h.field(), h.dim()) };
    verify_pairing(&pairing).into_result("canonical pairing")?;
    Ok(pairing)
}

/// `h_i* · a = Σ a^[0] h_i*(a^[1])`: a coaction of `H` becomes an action of `H*`.
pub fn coaction_to_action<K: Kind>(x: &CoactionData<K>) -> Result<ActionData<K>> {
    let dual = dual_hopf(x.hopf())?;
    let (a, n) = (x.carrier().dim(), x.hopf().dim());
    let action = StructureTensor::from_fn(n, a, a, |i, j| {
        let r = x.rho_basis(j);
        (0..a).map(|row| r[row * n + i].clone()).collect()
    });
    ActionData::verified(dual, x.carrier().clone(), action)
}

/// Inverse of [`coaction_to_action`]: `ρ(a) = Σ_i (h_i* · a) ⊗ h_i`, where the
/// acting algebra must be `H*` for the given `h`.
pub fn action_to_coaction<K: Kind>(p: &ActionData<K>, h: &HopfAlgebraData) -> Result<CoactionData<K>> {
    let dual = dual_hopf(h)?;
    if !dual.same_structure(p.hopf()) {
        return Err(Error::Precondition("acting Hopf algebra is not the dual of the coacting one".into()));
    }
    let (a, n) = (p.carrier().dim(), h.dim());
    let mut coaction = Matrix::zeros(a * n, a);
    for j in 0..a {
        for i in 0..n {
            for (row, c) in p.action().entry(i, j) {
                coaction.set(row * n + i, j, c.clone());
            }
        }
    }
    CoactionData::verified(h.clone(), p.carrier().clone(), coaction)
}
