//! Partial and global actions `H ⊗ A → A`.

use std::fmt;
use std::marker::PhantomData;

use crate::algcore::{AlgebraData, HopfAlgebraData};
use crate::error::{check_len, Error, Result};
use crate::exactlin::{vector, Scalar, StructureTensor, Vector};
use crate::report::VerificationReport;

use super::kind::{Global, Kind, Partial};

/// An action tensor with `action.entry(i, j)` holding `h_i · a_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct ActionData<K: Kind> {
    hopf: HopfAlgebraData,
    carrier: AlgebraData,
    action: StructureTensor,
    kind: PhantomData<K>,
}

/// `h · a` satisfying the three partial-action axioms; the carrier is unital.
pub type PartialActionData = ActionData<Partial>;
/// `h ▷ b` making the carrier an `H`-module algebra; the carrier may be non-unital.
pub type GlobalActionData = ActionData<Global>;

impl<K: Kind> fmt::Debug for ActionData<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct(K::ACTION_NAME)
            .field("hopf_dim", &self.hopf.dim())
            .field("carrier_dim", &self.carrier.dim())
            .field("action", &self.action)
            .finish()
    }
}

impl<K: Kind> ActionData<K> {
    /// Shape checks only; see [`ActionData::verified`].
    pub fn new(hopf: HopfAlgebraData, carrier: AlgebraData, action: StructureTensor) -> Result<ActionData<K>> {
        check_len(hopf.dim(), action.left_dim())?;
        check_len(carrier.dim(), action.right_dim())?;
        check_len(carrier.dim(), action.out_dim())?;
        if K::CARRIER_UNITAL {
            carrier.require_unit()?;
        }
        Ok(ActionData { hopf, carrier, action, kind: PhantomData })
    }

    pub fn from_fn(
        hopf: HopfAlgebraData,
        carrier: AlgebraData,
        f: impl FnMut(usize, usize) -> Vector,
    ) -> Result<ActionData<K>> {
        let action = StructureTensor::from_fn(hopf.dim(), carrier.dim(), carrier.dim(), f);
        ActionData::new(hopf, carrier, action)
    }

    /// Construction that fails unless every axiom holds.
    pub fn verified(hopf: HopfAlgebraData, carrier: AlgebraData, action: StructureTensor) -> Result<ActionData<K>> {
        let data = ActionData::new(hopf, carrier, action)?;
        data.verify().into_result(K::ACTION_NAME)?;
        Ok(data)
    }

    pub fn hopf(&self) -> &HopfAlgebraData {
        &self.hopf
    }

    pub fn carrier(&self) -> &AlgebraData {
        &self.carrier
    }

    pub fn action(&self) -> &StructureTensor {
        &self.action
    }

    pub fn act(&self, h: &[Scalar], a: &[Scalar]) -> Vector {
        self.action.apply(h, a)
    }

    /// `h_i · a`.
    pub fn act_basis(&self, i: usize, a: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.carrier.dim());
        for (j, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, d) in self.action.entry(i, j) {
                out[*k] += &(c * d);
            }
        }
        out
    }

    /// The action of `h_i` as a matrix on the carrier.
    pub fn operator(&self, i: usize) -> crate::exactlin::Matrix {
        let cols: Vec<Vector> = (0..self.carrier.dim()).map(|j| self.action.dense(i, j)).collect();
        crate::exactlin::Matrix::from_columns(&cols, self.carrier.dim()).expect("square")
    }

    pub fn verify(&self) -> VerificationReport {
        K::verify_action(self)
    }

    /// Reinterprets the same tensors under another kind, re-verifying.
    pub fn reinterpret<L: Kind>(&self) -> Result<ActionData<L>> {
        ActionData::verified(self.hopf.clone(), self.carrier.clone(), self.action.clone())
    }

    /// `h · 1_A = ε(h) 1_A` for every basis `h`: the partial action is global.
    pub fn fixes_unit(&self) -> Result<bool> {
        let one = self.carrier.require_unit()?;
        Ok((0..self.hopf.dim()).all(|i| {
            let eps = self.hopf.epsilon(&self.hopf.basis_vector(i));
            self.act_basis(i, one) == vector::scale(&eps, one)
        }))
    }

    fn first_failure(&self, mut bad: impl FnMut(usize, usize, usize) -> bool, hs: usize, others: usize) -> Option<(usize, usize, usize)> {
        let a = self.carrier.dim();
        for i in 0..hs {
            for j in 0..others {
                for k in 0..a {
                    if bad(i, j, k) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// `h · (ab) = Σ (h₁·a)(h₂·b)` on basis triples.
    pub(crate) fn check_multiplicative(&self) -> std::result::Result<(), String> {
        let n = self.hopf.dim();
        let a = self.carrier.dim();
        let bad = self.first_failure(
            |i, j, k| {
                let left = self.act_basis(i, &self.carrier.mul_basis(j, k));
                let mut right = vector::zeros(a);
                for (p, q, c) in self.hopf.comult_terms(i) {
                    let x = self.act_basis(p, &self.carrier.basis_vector(j));
                    let y = self.act_basis(q, &self.carrier.basis_vector(k));
                    vector::axpy(&mut right, &c, &self.carrier.mul(&x, &y));
                }
                left != right
            },
            n,
            a,
        );
        bad.map_or(Ok(()), |(i, j, k)| {
            Err(format!(
                "h(ab) != Σ(h1 a)(h2 b) at (h, a, b) = ({}, {}, {})",
                self.hopf.labels()[i],
                self.carrier.labels()[j],
                self.carrier.labels()[k]
            ))
        })
    }

    /// `1_H · a = a`.
    pub(crate) fn check_unit_acts_trivially(&self) -> std::result::Result<(), String> {
        let one = self.hopf.unit();
        match (0..self.carrier.dim()).find(|&j| {
            let a = self.carrier.basis_vector(j);
            self.act(one, &a) != a
        }) {
            None => Ok(()),
            Some(j) => Err(format!("1_H a != a at a = {}", self.carrier.labels()[j])),
        }
    }
}

impl PartialActionData {
    /// `h · (g · a) = Σ (h₁ · 1_A)((h₂ g) · a)` on basis triples.
    pub(crate) fn check_partial_composition(&self) -> std::result::Result<(), String> {
        let n = self.hopf.dim();
        let a = self.carrier.dim();
        let one = self.carrier.require_unit().map_err(|e| e.to_string())?.clone();
        let bad = self.first_failure(
            |i, m, j| {
                let aj = self.carrier.basis_vector(j);
                let left = self.act_basis(i, &self.act_basis(m, &aj));
                let mut right = vector::zeros(a);
                for (p, q, c) in self.hopf.comult_terms(i) {
                    let x = self.act_basis(p, &one);
                    let y = self.act(&self.hopf.mul_basis(q, m), &aj);
                    vector::axpy(&mut right, &c, &self.carrier.mul(&x, &y));
                }
                left != right
            },
            n,
            n,
        );
        bad.map_or(Ok(()), |(i, m, j)| {
            Err(format!(
                "h(g a) != Σ(h1 1)((h2 g) a) at (h, g, a) = ({}, {}, {})",
                self.hopf.labels()[i],
                self.hopf.labels()[m],
                self.carrier.labels()[j]
            ))
        })
    }
}

impl GlobalActionData {
    /// `(hg) ▷ a = h ▷ (g ▷ a)`.
    pub(crate) fn check_global_composition(&self) -> std::result::Result<(), String> {
        let n = self.hopf.dim();
        let bad = self.first_failure(
            |i, m, j| {
                let aj = self.carrier.basis_vector(j);
                self.act(&self.hopf.mul_basis(i, m), &aj) != self.act_basis(i, &self.act_basis(m, &aj))
            },
            n,
            n,
        );
        bad.map_or(Ok(()), |(i, m, j)| {
            Err(format!(
                "(hg)a != h(g a) at (h, g, a) = ({}, {}, {})",
                self.hopf.labels()[i],
                self.hopf.labels()[m],
                self.carrier.labels()[j]
            ))
        })
    }

    /// `h ▷ 1_B = ε(h) 1_B` when the carrier is unital.
    pub(crate) fn check_unit_preserved(&self) -> Option<std::result::Result<(), String>> {
        let one = self.carrier.unit()?;
        let bad = (0..self.hopf.dim()).find(|&i| {
            let eps = self.hopf.epsilon(&self.hopf.basis_vector(i));
            self.act_basis(i, one) != vector::scale(&eps, one)
        });
        Some(bad.map_or(Ok(()), |i| Err(format!("h 1 != ε(h) 1 at h = {}", self.hopf.labels()[i]))))
    }

    /// Restriction to an `H`-stable subalgebra given on its canonical basis.
    pub fn restrict(&self, sub: &crate::exactlin::Subspace, labels: Vec<String>) -> Result<GlobalActionData> {
        let carrier = self.carrier.restrict(sub, labels)?;
        let mut action = StructureTensor::new(self.hopf.dim(), sub.dim(), sub.dim());
        for i in 0..self.hopf.dim() {
            for (j, b) in sub.basis().iter().enumerate() {
                let image = self.act_basis(i, b);
                let coords = sub
                    .coordinates(&image)
                    .ok_or_else(|| Error::Precondition(format!("subspace is not stable under {}", self.hopf.labels()[i])))?;
                action.set_dense(i, j, &coords);
            }
        }
        ActionData::new(self.hopf.clone(), carrier, action)
    }
}

/// Partial-action axioms 1)–3) plus the carrier's algebra axioms.
pub fn verify_partial_action(p: &PartialActionData) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.merge("carrier", p.carrier.verify());
    report.record("multiplicativity", p.check_multiplicative());
    report.record("unit", p.check_unit_acts_trivially());
    report.record("composition", p.check_partial_composition());
    report
}

/// Module-algebra axioms plus the carrier's algebra axioms.
pub fn verify_global_action(b: &GlobalActionData) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.merge("carrier", b.carrier.verify());
    report.record("composition", b.check_global_composition());
    report.record("unit", b.check_unit_acts_trivially());
    report.record("multiplicativity", b.check_multiplicative());
    if let Some(outcome) = b.check_unit_preserved() {
        report.record("unit_preserved", outcome);
    }
    report
}
