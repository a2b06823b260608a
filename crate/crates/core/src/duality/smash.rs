//! Global and partial smash products.

use crate::algcore::{dual_hopf, AlgebraData, HopfAlgebraData};
use crate::error::{Error, Result};
use crate::exactlin::{vector, Scalar, StructureTensor, Subspace, Vector};
use crate::partial::{verify_partial_action, GlobalActionData, PartialActionData};

/// `B # H` on the basis `b_s # h_i` (index `s·n + i`).
#[derive(Clone, Debug)]
pub struct SmashProductData {
    pub carrier: AlgebraData,
    pub source: GlobalActionData,
}

impl SmashProductData {
    pub fn hopf(&self) -> &HopfAlgebraData {
        self.source.hopf()
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// `b # h` as a vector.
    pub fn element(&self, b: &[Scalar], h: &[Scalar]) -> Vector {
        vector::kron(b, h)
    }
}

/// `Σ a(h₁ · b) ⊗ h₂k` on the basis pairs of `A ⊗ H`, for any action tensor.
fn smash_tensor(hopf: &HopfAlgebraData, algebra: &AlgebraData, act: impl Fn(usize, &[Scalar]) -> Vector) -> StructureTensor {
    let n = hopf.dim();
    let d = algebra.dim();
    let mut mult = StructureTensor::new(d * n, d * n, d * n);
    for s in 0..d {
        for i in 0..n {
            let terms = hopf.comult_terms(i);
            for t in 0..d {
                let bt = algebra.basis_vector(t);
                for j in 0..n {
                    let mut out = vector::zeros(d * n);
                    for (p, q, c) in &terms {
                        let moved = algebra.mul(&algebra.basis_vector(s), &act(*p, &bt));
                        if vector::is_zero(&moved) {
                            continue;
                        }
                        let hk = hopf.mul_basis(*q, j);
                        vector::axpy(&mut out, c, &vector::kron(&moved, &hk));
                    }
                    mult.set_dense(s * n + i, t * n + j, &out);
                }
            }
        }
    }
    mult
}

fn smash_labels(algebra: &AlgebraData, hopf: &HopfAlgebraData) -> Vec<String> {
    let mut labels = Vec::with_capacity(algebra.dim() * hopf.dim());
    for b in algebra.labels() {
        for h in hopf.labels() {
            labels.push(format!("{b}#{h}"));
        }
    }
    labels
}

/// `(b # h)(c # k) = Σ b(h₁ ▷ c) # h₂k` with unit `1_B # 1_H`.
pub fn smash_product(b: &GlobalActionData) -> Result<SmashProductData> {
    let algebra = b.carrier();
    let hopf = b.hopf();
    let one = algebra.require_unit()?;
    let mult = smash_tensor(hopf, algebra, |p, x| b.act_basis(p, x));
    let carrier = AlgebraData::new(algebra.field(), smash_labels(algebra, hopf), mult, Some(vector::kron(one, hopf.unit())))?;
    carrier.verify().into_result("smash product")?;
    Ok(SmashProductData { carrier, source: b.clone() })
}

/// `H*` acting on `B # H` by `f ▷ (b # h) = b # (f ⇀ h)`, `f ⇀ h = Σ h₁ f(h₂)`.
pub fn dual_action_on_smash(smash: &SmashProductData) -> Result<GlobalActionData> {
    let hopf = smash.hopf();
    let n = hopf.dim();
    let d = smash.source.carrier().dim();
    let dual = dual_hopf(hopf)?;
    let action = StructureTensor::from_fn(n, d * n, d * n, |j, x| {
        let (s, i) = (x / n, x % n);
        let mut out = vector::zeros(d * n);
        for (p, q, c) in hopf.comult_terms(i) {
            if q == j {
                out[s * n + p] += &c;
            }
        }
        out
    });
    GlobalActionData::verified(dual, smash.carrier.clone(), action)
}

/// `(B # H) # H*` on the basis `b_s # h_i # h_j*` (index `(s·n + i)·n + j`).
pub fn double_smash(b: &GlobalActionData) -> Result<SmashProductData> {
    let inner = smash_product(b)?;
    smash_product(&dual_action_on_smash(&inner)?)
}

/// The partial smash product: the left ideal `(A ⊗ H) e`, `e = 1_A ⊗ 1_H`.
#[derive(Clone, Debug)]
pub struct PartialSmashData {
    /// `A ⊗ H` with `(a ⊗ h)(b ⊗ k) = Σ a(h₁ · b) ⊗ h₂k`; not unital in general.
    pub ambient: AlgebraData,
    pub carrier: Subspace,
    pub e: Vector,
    /// The carrier on its canonical basis, with unit `e`.
    pub structure: AlgebraData,
}

impl PartialSmashData {
    /// `span{Σ a(h₁ · 1_A) # h₂}` over basis `a`, `h`.
    pub fn generator_span(&self, p: &PartialActionData) -> Subspace {
        let a = p.carrier();
        let hopf = p.hopf();
        let one = a.unit().expect("partial carrier is unital");
        let mut vs = Vec::new();
        for s in 0..a.dim() {
            for i in 0..hopf.dim() {
                let mut v = vector::zeros(a.dim() * hopf.dim());
                for (q, r, c) in hopf.comult_terms(i) {
                    let coeff = a.mul(&a.basis_vector(s), &p.act_basis(q, one));
                    vector::axpy(&mut v, &c, &vector::kron(&coeff, &hopf.basis_vector(r)));
                }
                vs.push(v);
            }
        }
        Subspace::span(&vs, self.ambient.dim()).expect("vectors have ambient length")
    }
}

/// `A ⊗ H` with the smash multiplication, built without checking the axioms.
pub fn partial_smash_ambient(p: &PartialActionData) -> Result<AlgebraData> {
    let a = p.carrier();
    let hopf = p.hopf();
    let mult = smash_tensor(hopf, a, |q, x| p.act_basis(q, x));
    AlgebraData::new(a.field(), smash_labels(a, hopf), mult, None)
}

pub fn partial_smash(p: &PartialActionData) -> Result<PartialSmashData> {
    verify_partial_action(p).into_result("partial action")?;
    let a = p.carrier();
    let hopf = p.hopf();
    let ambient = partial_smash_ambient(p)?;
    if let Some(check) = ambient.verify().get("associativity").filter(|c| !c.passed) {
        return Err(Error::AssociativityFailure(check.detail.clone().unwrap_or_default()));
    }
    let e = vector::kron(a.require_unit()?, hopf.unit());
    let products: Vec<Vector> = (0..ambient.dim()).map(|x| ambient.mul(&ambient.basis_vector(x), &e)).collect();
    let carrier = Subspace::span(&products, ambient.dim())?;
    let labels = crate::partial::subspace_labels(&ambient, &carrier, "x");
    let structure = ambient.restrict(&carrier, labels)?;
    let e_coords = carrier.coordinates(&e).ok_or_else(|| Error::Precondition("e is not in (A ⊗ H)e".into()))?;
    if structure.unit() != Some(&e_coords) {
        return Err(Error::VerificationFailed { what: "partial smash product".into(), detail: "e is not the unit of (A ⊗ H)e".into() });
    }
    Ok(PartialSmashData { ambient, carrier, e, structure })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{group_algebra, scalar_partial, translation_action, GroupTable};
    use crate::exactlin::Field;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn trivial_action_gives_tensor_product() {
        let g = GroupTable::cyclic(2).unwrap();
        let h = group_algebra(&g, q());
        let b = translation_action(&g, q());
        let trivial = GlobalActionData::verified(
            h.clone(),
            b.carrier().clone(),
            StructureTensor::from_fn(2, 2, 2, |_, j| vector::unit_vector(q(), 2, j)),
        )
        .unwrap();
        let smash = smash_product(&trivial).unwrap();
        let tensor = crate::algcore::tensor_product_algebra(b.carrier(), h.algebra());
        assert_eq!(smash.carrier.mult(), tensor.mult());
        assert_eq!(smash.carrier.unit(), tensor.unit());
    }

    #[test]
    fn swap_smash_is_noncommutative() {
        let g = GroupTable::cyclic(2).unwrap();
        let smash = smash_product(&translation_action(&g, q())).unwrap();
        // (d_e # g)(d_e # e) = d_e(g ▷ d_e) # g = d_e d_g # g = 0, while
        // (d_e # e)(d_e # g) = d_e # g.
        let left = smash.carrier.mul_basis(1, 0);
        let right = smash.carrier.mul_basis(0, 1);
        assert!(vector::is_zero(&left));
        assert_eq!(right, vector::unit_vector(q(), 4, 1));
    }

    #[test]
    fn scalar_partial_smash_is_one_dimensional() {
        let fx = scalar_partial(&GroupTable::cyclic(2).unwrap(), &[0], q()).unwrap();
        let p = fx.action().unwrap();
        let ps = partial_smash(p).unwrap();
        assert_eq!(ps.carrier.dim(), 1);
        assert_eq!(ps.carrier.basis()[0], vector::unit_vector(q(), 2, 0));
        assert_eq!(ps.generator_span(p), ps.carrier);
    }

    #[test]
    fn global_partial_smash_is_everything() {
        let b = translation_action(&GroupTable::cyclic(3).unwrap(), q());
        let p: PartialActionData = b.reinterpret().unwrap();
        assert_eq!(partial_smash(&p).unwrap().carrier.dim(), 9);
    }
}
