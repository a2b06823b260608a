//! The Heisenberg-type isomorphisms `λ: H # H* → End(H)` and `ρ: H* # H → End(H)`.

use crate::algcore::{check_isomorphism, dual_hopf, end_algebra, matrix_to_end_element, AlgebraData, HopfAlgebraData, LinearMapData};
use crate::error::Result;
use crate::exactlin::{vector, Matrix, StructureTensor, Vector};
use crate::partial::{action_to_coaction, GlobalActionData, GlobalCoactionData};
use crate::report::VerificationReport;

use super::smash::smash_product;

/// `H*` acting on `H` by `f ⇀ k = Σ k₁ f(k₂)`.
pub fn hit_action(h: &HopfAlgebraData) -> Result<GlobalActionData> {
    let n = h.dim();
    let action = StructureTensor::from_fn(n, n, n, |j, m| {
        let mut out = vector::zeros(n);
        for (p, q, c) in h.comult_terms(m) {
            if q == j {
                out[p] += &c;
            }
        }
        out
    });
    GlobalActionData::verified(dual_hopf(h)?, h.algebra().clone(), action)
}

/// `H` acting on `H*` by `(h ▷ f)(x) = f(xh)`.
pub fn coregular_action(h: &HopfAlgebraData) -> Result<GlobalActionData> {
    let n = h.dim();
    let dual = dual_hopf(h)?;
    let action = StructureTensor::from_fn(n, n, n, |m, j| {
        let mut out = vector::zeros(n);
        for l in 0..n {
            for (k, c) in h.algebra().mult().entry(l, m) {
                if *k == j {
                    out[l] += c;
                }
            }
        }
        out
    });
    GlobalActionData::verified(h.clone(), dual.algebra().clone(), action)
}

/// Matrix of `k ↦ k ↼ h_j* = Σ h_j*(k₁) k₂`.
pub fn right_hit_operator(h: &HopfAlgebraData, j: usize) -> Matrix {
    let n = h.dim();
    let mut m = Matrix::zeros(n, n);
    for k in 0..n {
        for (p, q, c) in h.comult_terms(k) {
            if p == j {
                m.add_to(q, k, &c);
            }
        }
    }
    m
}

/// Matrix of `k ↦ h_i (h_j* ⇀ k)`.
pub fn lambda_operator(h: &HopfAlgebraData, i: usize, j: usize) -> Matrix {
    let n = h.dim();
    let left = h.algebra().left_mult(&h.basis_vector(i));
    let mut hit = Matrix::zeros(n, n);
    for k in 0..n {
        for (p, q, c) in h.comult_terms(k) {
            if q == j {
                hit.add_to(p, k, &c);
            }
        }
    }
    left.mul(&hit)
}

#[derive(Clone, Debug)]
pub struct LambdaRho {
    /// `H # H*` on `h_i # h_j*` (index `i·n + j`).
    pub heisenberg: AlgebraData,
    /// `H* # H` on `h_j* # h_i` (index `j·n + i`).
    pub dual_heisenberg: AlgebraData,
    pub end: AlgebraData,
    pub lambda: LinearMapData,
    pub rho: LinearMapData,
    pub lambda_inverse: Matrix,
    pub report: VerificationReport,
}

/// Builds `λ` and `ρ` and certifies them: `λ` is an algebra isomorphism and
/// `ρ` is an algebra isomorphism onto `End(H)^op`, i.e. it reverses products
/// when `End(H)` is multiplied by composition.
pub fn lambda_rho_iso(h: &HopfAlgebraData) -> Result<LambdaRho> {
    let n = h.dim();
    let heisenberg = smash_product(&hit_action(h)?)?.carrier;
    let dual_heisenberg = smash_product(&coregular_action(h)?)?.carrier;
    let end = end_algebra(h.field(), n);

    let lambda_cols: Vec<Vector> =
        (0..n * n).map(|x| matrix_to_end_element(&lambda_operator(h, x / n, x % n))).collect();
    let lambda = LinearMapData::from_images(&lambda_cols, n * n)?;
    let rho_cols: Vec<Vector> = (0..n * n)
        .map(|x| {
            let (j, i) = (x / n, x % n);
            let right = h.algebra().right_mult(&h.basis_vector(i));
            matrix_to_end_element(&right.mul(&right_hit_operator(h, j)))
        })
        .collect();
    let rho = LinearMapData::from_images(&rho_cols, n * n)?;

    let mut report = VerificationReport::new();
    report.merge("lambda", check_isomorphism(&lambda, &heisenberg, &end));
    report.merge("rho_into_opposite", check_isomorphism(&rho, &dual_heisenberg, &end.opposite()));
    let report = report.into_result("λ/ρ")?;
    let lambda_inverse = lambda.matrix().inverse()?;
    Ok(LambdaRho { heisenberg, dual_heisenberg, end, lambda, rho, lambda_inverse, report })
}

/// `δ(b) = Σ_i (h_i ▷ b) ⊗ h_i*`: an `H`-module algebra as an `H*`-comodule algebra.
pub fn comodule_from_action(b: &GlobalActionData) -> Result<GlobalCoactionData> {
    action_to_coaction(b, &dual_hopf(b.hopf())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{group_algebra, sweedler_h4, translation_action, GroupTable};
    use crate::exactlin::Field;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn lambda_of_unit_and_left_multiplication() {
        let h = sweedler_h4(q()).unwrap();
        let lr = lambda_rho_iso(&h).unwrap();
        let eps = h.counit().clone();
        // 1 # ε
        let one_eps = vector::kron(h.unit(), &eps);
        assert_eq!(lr.lambda.apply(&one_eps), matrix_to_end_element(&Matrix::identity(q(), 4)));
        let x_eps = vector::kron(&h.basis_vector(2), &eps);
        assert_eq!(lr.lambda.apply(&x_eps), matrix_to_end_element(&h.algebra().left_mult(&h.basis_vector(2))));
        assert_eq!(lr.lambda.rank(), 16);
        assert_eq!(lr.rho.rank(), 16);
    }

    #[test]
    fn rho_reverses_products() {
        let h = group_algebra(&GroupTable::symmetric3(), q());
        let lr = lambda_rho_iso(&h).unwrap();
        let end = &lr.end;
        let x = lr.dual_heisenberg.basis_vector(1 * 6 + 3);
        let y = lr.dual_heisenberg.basis_vector(4 * 6 + 2);
        let image = lr.rho.apply(&lr.dual_heisenberg.mul(&x, &y));
        assert_eq!(image, end.mul(&lr.rho.apply(&y), &lr.rho.apply(&x)));
    }

    #[test]
    fn swap_comodule() {
        let b = translation_action(&GroupTable::cyclic(2).unwrap(), q());
        let delta = comodule_from_action(&b).unwrap();
        // δ(d_e) = d_e ⊗ p_e + d_g ⊗ p_g
        let expected = vec![q().one(), q().zero(), q().zero(), q().one()];
        assert_eq!(delta.rho_basis(0), expected);
    }
}
