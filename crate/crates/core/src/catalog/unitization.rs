//! Adjoining a unit to a module algebra.

use crate::algcore::AlgebraData;
use crate::error::Result;
use crate::exactlin::{vector, Scalar, Subspace, Vector};
use crate::partial::{verify_global_action, GlobalActionData};

/// `k × B` with `(λ, a)(μ, b) = (λμ, λb + μa + ab)` and
/// `h ▷ (λ, a) = (ε(h)λ, h ▷ a)`. Index 0 is the adjoined unit `(1, 0)`;
/// `b_i` becomes index `i + 1`.
pub fn unitization(b: &GlobalActionData) -> Result<GlobalActionData> {
    verify_global_action(b).into_result("global action")?;
    let field = b.hopf().field();
    let old = b.carrier();
    let n = old.dim();
    let lift = |v: &[Scalar]| -> Vector {
        let mut out = vector::zeros(n + 1);
        out[1..].clone_from_slice(v);
        out
    };
    let mut labels = vec!["(1,0)".to_string()];
    labels.extend(old.labels().iter().cloned());
    let carrier = AlgebraData::from_fn(field, labels, Some(vector::unit_vector(field, n + 1, 0)), |i, j| match (i, j) {
        (0, 0) => vector::unit_vector(field, n + 1, 0),
        (0, j) => vector::unit_vector(field, n + 1, j),
        (i, 0) => vector::unit_vector(field, n + 1, i),
        (i, j) => lift(&old.mul_basis(i - 1, j - 1)),
    })?;
    let hopf = b.hopf().clone();
    let action = crate::exactlin::StructureTensor::from_fn(hopf.dim(), n + 1, n + 1, |h, j| {
        if j == 0 {
            vector::scale(&hopf.epsilon(&hopf.basis_vector(h)), &vector::unit_vector(field, n + 1, 0))
        } else {
            lift(&b.act_basis(h, &old.basis_vector(j - 1)))
        }
    });
    GlobalActionData::verified(hopf, carrier, action)
}

/// The image of `B` inside its unitization.
pub fn unitization_ideal(b: &GlobalActionData) -> Subspace {
    let field = b.hopf().field();
    let n = b.carrier().dim();
    let vs: Vec<Vector> = (1..=n).map(|i| vector::unit_vector(field, n + 1, i)).collect();
    Subspace::span(&vs, n + 1).expect("lengths agree")
}
