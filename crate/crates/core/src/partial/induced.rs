//! Partial structures induced on a unital right ideal `1_A B`.

use crate::algcore::AlgebraData;
use crate::error::{Error, Result};
use crate::exactlin::{vector, Matrix, Scalar, StructureTensor, Subspace};

use super::action::{GlobalActionData, PartialActionData};
use super::coaction::{contract_right, GlobalCoactionData, PartialCoactionData};

/// `A = unit_a · B`, checked to be a right ideal on which `unit_a` is a two-sided unit.
pub fn unital_right_ideal(b: &AlgebraData, unit_a: &[Scalar]) -> Result<Subspace> {
    if unit_a.len() != b.dim() {
        return Err(Error::DimensionMismatch { expected: b.dim(), found: unit_a.len() });
    }
    let ideal = b.left_multiple_span(unit_a);
    for x in ideal.basis() {
        for i in 0..b.dim() {
            if !ideal.contains(&b.mul(x, &b.basis_vector(i)))? {
                return Err(Error::NotRightIdeal(format!("{} · {} leaves the ideal", b.format(x), b.labels()[i])));
            }
        }
    }
    if !ideal.contains(unit_a)? {
        return Err(Error::NotUnitOnA(format!("{} is not in its own ideal", b.format(unit_a))));
    }
    for x in ideal.basis() {
        if &b.mul(unit_a, x) != x || &b.mul(x, unit_a) != x {
            return Err(Error::NotUnitOnA(format!("fails on {}", b.format(x))));
        }
    }
    Ok(ideal)
}

/// Labels for the canonical basis of a subspace: a basis vector that is a
/// standard basis vector keeps the ambient label, others become `prefix{i}`.
pub fn subspace_labels(ambient: &AlgebraData, s: &Subspace, prefix: &str) -> Vec<String> {
    s.basis()
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let nonzero: Vec<usize> = (0..v.len()).filter(|&k| !v[k].is_zero()).collect();
            match nonzero.as_slice() {
                [k] if v[*k].is_one() => ambient.labels()[*k].clone(),
                _ => format!("{prefix}{i}"),
            }
        })
        .collect()
}

/// `h · a = 1_A (h ▷ a)` on `A = 1_A B`.
pub fn induced_partial_action(b: &GlobalActionData, unit_a: &[Scalar]) -> Result<PartialActionData> {
    let algebra = b.carrier();
    let ideal = unital_right_ideal(algebra, unit_a)?;
    let carrier = algebra.restrict(&ideal, subspace_labels(algebra, &ideal, "a"))?;
    let d = ideal.dim();
    let mut action = StructureTensor::new(b.hopf().dim(), d, d);
    for i in 0..b.hopf().dim() {
        for (j, x) in ideal.basis().iter().enumerate() {
            let image = algebra.mul(unit_a, &b.act_basis(i, x));
            let coords = ideal.coordinates(&image).expect("1_A B is the ideal");
            action.set_dense(i, j, &coords);
        }
    }
    PartialActionData::verified(b.hopf().clone(), carrier, action)
}

/// `ρ̄(a) = (1_A ⊗ 1_H) ρ(a)` on `A = 1_A B`.
pub fn induced_partial_coaction(b: &GlobalCoactionData, unit_a: &[Scalar]) -> Result<PartialCoactionData> {
    let algebra = b.carrier();
    let ideal = unital_right_ideal(algebra, unit_a)?;
    let carrier = algebra.restrict(&ideal, subspace_labels(algebra, &ideal, "a"))?;
    let (bd, n, d) = (algebra.dim(), b.hopf().dim(), ideal.dim());
    let mut images = Vec::with_capacity(d);
    for x in ideal.basis() {
        let r = b.rho(x);
        let mut image = vector::zeros(d * n);
        for k in 0..n {
            let cut = algebra.mul(unit_a, &contract_right(&r, bd, n, k));
            let coords = ideal.coordinates(&cut).expect("1_A B is the ideal");
            for (j, c) in coords.into_iter().enumerate() {
                image[j * n + k] = c;
            }
        }
        images.push(image);
    }
    PartialCoactionData::verified(b.hopf().clone(), carrier, Matrix::from_columns(&images, d * n)?)
}
