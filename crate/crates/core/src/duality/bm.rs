//! The isomorphisms `Φ: (B # H) # H* → B ⊗ End(H)` and `Ψ = Φ⁻¹`, and the
//! decomposition of the partial double smash product they induce.

use crate::algcore::{
    check_algebra_morphism, check_isomorphism, end_element_to_matrix, matrix_algebra, matrix_to_end_element, AlgebraData,
    LinearMapData,
};
use crate::catalog::unitization;
use crate::error::{Error, Result};
use crate::exactlin::{vector, Matrix, Scalar, Subspace, Vector};
use crate::globalize::EnvelopingActionResult;
use crate::partial::{induced_partial_action, subspace_labels, unital_right_ideal, GlobalActionData, PartialActionData};
use crate::report::VerificationReport;

use super::lambda_rho::{lambda_operator, lambda_rho_iso, right_hit_operator};
use super::smash::{double_smash, partial_smash};

/// A unital module algebra `B` together with the idempotent `1_A`.
#[derive(Clone, Debug)]
pub struct UnitalGlobalization {
    pub action: GlobalActionData,
    pub unit_a: Vector,
    /// `B` had no unit and was replaced by `k × B`.
    pub unitized: bool,
}

/// Puts an enveloping action in the form the duality maps need, adjoining a
/// unit when `B` has none.
pub fn unital_globalization(env: &EnvelopingActionResult) -> Result<UnitalGlobalization> {
    let unit_a = env.unit_a.clone();
    if env.b_action.carrier().is_unital() {
        return Ok(UnitalGlobalization { action: env.b_action.clone(), unit_a, unitized: false });
    }
    let action = unitization(&env.b_action)?;
    let mut lifted = vector::zeros(unit_a.len() + 1);
    lifted[1..].clone_from_slice(&unit_a);
    Ok(UnitalGlobalization { action, unit_a: lifted, unitized: true })
}

#[derive(Clone, Debug)]
pub struct BmIsomorphism {
    pub source: GlobalActionData,
    pub unit_a: Vector,
    /// `(B # H) # H*` on `b_s # h_i # h_j*` (index `(s·n + i)·n + j`).
    pub double_smash: AlgebraData,
    /// `B ⊗ End(H)` on `b_s ⊗ e_{r,c}` (index `s·n² + r·n + c`).
    pub target: AlgebraData,
    pub phi: LinearMapData,
    pub psi: LinearMapData,
    /// `Ψ(1_A ⊗ I)`.
    pub big_e: Vector,
    /// `Ψ((1_B − 1_A) ⊗ I)`.
    pub big_f: Vector,
    /// `1_A # 1_H # ε`.
    pub e: Vector,
    pub report: VerificationReport,
}

impl BmIsomorphism {
    pub fn hopf_dim(&self) -> usize {
        self.source.hopf().dim()
    }

    /// `η(b ⊗ T)(c ⊗ k) = bc ⊗ T(k)` as a matrix on `B ⊗ H` (index `s·n + k`).
    pub fn eta(&self, v: &[Scalar]) -> Matrix {
        let b = self.source.carrier();
        let (d, n) = (b.dim(), self.hopf_dim());
        let mut m = Matrix::zeros(d * n, d * n);
        for (x, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let (t, r, c) = (x / (n * n), (x / n) % n, x % n);
            for s in 0..d {
                for (u, bc) in b.mult().entry(t, s) {
                    m.add_to(u * n + r, s * n + c, &(coeff * bc));
                }
            }
        }
        m
    }

    /// `b ⊗ k ↦ Σ (S⁻¹(k₁) ▷ 1_A) b ⊗ k₂` on `B ⊗ H`.
    pub fn phi_e_closed_form(&self) -> Matrix {
        let b = self.source.carrier();
        let hopf = self.source.hopf();
        let (d, n) = (b.dim(), hopf.dim());
        let mut m = Matrix::zeros(d * n, d * n);
        for k in 0..n {
            for (p, q, c) in hopf.comult_terms(k) {
                let moved = self.source.act(&hopf.antipode_inverse().column(p), &self.unit_a);
                for s in 0..d {
                    let prod = b.mul(&moved, &b.basis_vector(s));
                    for (u, x) in prod.iter().enumerate() {
                        if !x.is_zero() {
                            m.add_to(u * n + q, s * n + k, &(&c * x));
                        }
                    }
                }
            }
        }
        m
    }

    /// `h ▷ 1_A = 1_A(h ▷ 1_A)` for every basis `h`, i.e. the induced partial
    /// action agrees with the global one on `1_A`.
    pub fn acts_globally_on_unit(&self) -> bool {
        let b = self.source.carrier();
        (0..self.hopf_dim()).all(|i| {
            let moved = self.source.act_basis(i, &self.unit_a);
            b.mul(&self.unit_a, &moved) == moved
        })
    }
}

/// `Φ` and `Ψ` on explicit bases, certified mutually inverse algebra isomorphisms.
pub fn bm_phi_psi(b: &GlobalActionData, unit_a: &[Scalar]) -> Result<BmIsomorphism> {
    let algebra = b.carrier();
    let hopf = b.hopf();
    let one_b = algebra.require_unit()?.clone();
    if !algebra.is_central(unit_a) || !algebra.is_idempotent(unit_a) {
        return Err(Error::NonCentralIdempotent(algebra.format(unit_a)));
    }
    unital_right_ideal(algebra, unit_a)?;
    let (d, n) = (algebra.dim(), hopf.dim());
    let lr = lambda_rho_iso(hopf)?;
    let ds = double_smash(b)?.carrier;
    let target = matrix_algebra(algebra, n);

    let sinv = hopf.antipode_inverse();
    let right_hits: Vec<Matrix> = (0..n).map(|r| right_hit_operator(hopf, r)).collect();
    // ρ((S*)⁻¹(h_l*) # 1), with (S*)⁻¹(h_l*) = Σ_r S⁻¹[l][r] h_r*
    let twisted: Vec<Matrix> = (0..n)
        .map(|l| {
            let mut t = Matrix::zeros(n, n);
            for (r, hit) in right_hits.iter().enumerate() {
                let c = sinv.get(l, r);
                if !c.is_zero() {
                    t = t.add(&hit.scale(c));
                }
            }
            t
        })
        .collect();
    let moved: Vec<Vec<Vector>> =
        (0..d).map(|s| (0..n).map(|l| b.act_basis(l, &algebra.basis_vector(s))).collect()).collect();

    let mut phi = Matrix::zeros(d * n * n, d * n * n);
    for s in 0..d {
        for i in 0..n {
            for j in 0..n {
                let lam = lambda_operator(hopf, i, j);
                let mut col = vector::zeros(d * n * n);
                for l in 0..n {
                    let end = matrix_to_end_element(&twisted[l].mul(&lam));
                    vector::axpy(&mut col, &algebra.field().one(), &vector::kron(&moved[s][l], &end));
                }
                for (r, x) in col.into_iter().enumerate() {
                    phi.set(r, (s * n + i) * n + j, x);
                }
            }
        }
    }
    let mut psi = Matrix::zeros(d * n * n, d * n * n);
    for s in 0..d {
        for x in 0..n * n {
            let unit = end_element_to_matrix(&vector::unit_vector(algebra.field(), n * n, x), n);
            let mut col = vector::zeros(d * n * n);
            for l in 0..n {
                let smash = lr.lambda_inverse.mul_vec(&matrix_to_end_element(&right_hits[l].mul(&unit)));
                vector::axpy(&mut col, &algebra.field().one(), &vector::kron(&moved[s][l], &smash));
            }
            for (r, v) in col.into_iter().enumerate() {
                psi.set(r, s * n * n + x, v);
            }
        }
    }
    let phi = LinearMapData::new(phi);
    let psi = LinearMapData::new(psi);

    let identity_end = matrix_to_end_element(&Matrix::identity(algebra.field(), n));
    let big_e = psi.apply(&vector::kron(unit_a, &identity_end));
    let big_f = psi.apply(&vector::kron(&vector::sub(&one_b, unit_a), &identity_end));
    let e = vector::kron(&vector::kron(unit_a, hopf.unit()), hopf.counit());

    let mut iso = BmIsomorphism {
        source: b.clone(),
        unit_a: unit_a.to_vec(),
        double_smash: ds,
        target,
        phi,
        psi,
        big_e,
        big_f,
        e,
        report: VerificationReport::new(),
    };
    iso.report = certify_maps(&iso);
    Ok(iso)
}

fn certify_maps(iso: &BmIsomorphism) -> VerificationReport {
    let mut report = VerificationReport::new();
    let ds = &iso.double_smash;
    let field = ds.field();
    let identity = Matrix::identity(field, ds.dim());
    report.expect("phi_psi_identity", iso.phi.matrix().mul(iso.psi.matrix()) == identity, || "Φ∘Ψ != id".into());
    report.expect("psi_phi_identity", iso.psi.matrix().mul(iso.phi.matrix()) == identity, || "Ψ∘Φ != id".into());
    report.merge("phi", check_isomorphism(&iso.phi, ds, &iso.target));
    report.merge("psi", check_algebra_morphism(&iso.psi, &iso.target, ds));

    let (big_e, big_f, e) = (&iso.big_e, &iso.big_f, &iso.e);
    report.expect("E_central_idempotent", ds.is_idempotent(big_e) && ds.is_central(big_e), || ds.format(big_e));
    report.expect("F_central_idempotent", ds.is_idempotent(big_f) && ds.is_central(big_f), || ds.format(big_f));
    report.expect("E_F_orthogonal", vector::is_zero(&ds.mul(big_e, big_f)), || "EF != 0".into());
    let unit = ds.unit().expect("double smash is unital");
    report.expect("E_plus_F_is_unit", &vector::add(big_e, big_f) == unit, || "E + F != 1".into());
    report.expect("e_idempotent", ds.is_idempotent(e), || ds.format(e));

    let direct = iso.eta(&iso.phi.apply(e));
    report.expect("phi_e_closed_form", direct == iso.phi_e_closed_form(), || {
        "η(Φ(e)) differs from b ⊗ k ↦ Σ (S⁻¹(k₁) ▷ 1_A) b ⊗ k₂".into()
    });
    report
}

#[derive(Clone, Debug)]
pub struct BmDecomposition {
    pub iso: BmIsomorphism,
    pub partial: PartialActionData,
    /// `e ((B # H) # H*) e`, the partial double smash product.
    pub partial_double_smash: Subspace,
    /// The partial double smash on its canonical basis, with unit `e`.
    pub structure: AlgebraData,
    /// `Φ̃ = (1_A ⊗ I)Φ` from coordinates on the partial double smash.
    pub phi_tilde: LinearMapData,
    pub eee: Vector,
    pub efe: Vector,
    pub ideal_plus: Subspace,
    pub ideal_kernel: Subspace,
    pub kernel: Subspace,
    pub acts_globally_on_unit: bool,
    pub report: VerificationReport,
}

/// Restricts `Φ` to the partial double smash and certifies the decomposition
/// into the `eEe`- and `eFe`-ideals, with `ker Φ̃` the latter.
pub fn bm_restricted(iso: BmIsomorphism, p: &PartialActionData) -> Result<BmDecomposition> {
    let induced = induced_partial_action(&iso.source, &iso.unit_a)?;
    if induced.action() != p.action() || induced.carrier().mult() != p.carrier().mult() {
        return Err(Error::Precondition("partial action is not induced from (B, 1_A)".into()));
    }
    let ds = &iso.double_smash;
    let total = ds.dim();
    let e = &iso.e;
    let sandwiched: Vec<Vector> = (0..total).map(|x| ds.mul(&ds.mul(e, &ds.basis_vector(x)), e)).collect();
    let x_space = Subspace::span(&sandwiched, total)?;
    let structure = ds.restrict(&x_space, subspace_labels(ds, &x_space, "x"))?;

    let eee = ds.mul(&ds.mul(e, &iso.big_e), e);
    let efe = ds.mul(&ds.mul(e, &iso.big_f), e);
    let ideal_of = |idem: &Vector| {
        let vs: Vec<Vector> = x_space.basis().iter().map(|x| ds.mul(idem, x)).collect();
        Subspace::span(&vs, total).expect("ambient length")
    };
    let ideal_plus = ideal_of(&eee);
    let ideal_kernel = ideal_of(&efe);

    let one_a_identity = vector::kron(&iso.unit_a, &matrix_to_end_element(&Matrix::identity(ds.field(), iso.hopf_dim())));
    let cut = iso.target.left_mult(&one_a_identity);
    let phi_tilde = LinearMapData::new(cut.mul(iso.phi.matrix()).mul(&x_space.inclusion()));
    let kernel_coords = phi_tilde.matrix().kernel();
    let kernel_vectors: Vec<Vector> = kernel_coords.basis().iter().map(|c| x_space.element(c)).collect();
    let kernel = Subspace::span(&kernel_vectors, total)?;
    let acts_globally_on_unit = iso.acts_globally_on_unit();

    let mut report = VerificationReport::new();
    let e_unit = x_space.basis().iter().all(|x| &ds.mul(e, x) == x && &ds.mul(x, e) == x);
    report.expect("e_is_unit", e_unit, || "e is not a two-sided unit on e(B#H#H*)e".into());
    let smash_dim = partial_smash(p)?.carrier.dim();
    report.expect("partial_double_smash_dim", x_space.dim() == smash_dim * iso.hopf_dim(), || {
        format!("dim e(B#H#H*)e = {}, dim(A#H)·dim H = {}", x_space.dim(), smash_dim * iso.hopf_dim())
    });
    report.expect("eEe_eq_Ee", eee == ds.mul(&iso.big_e, e), || "eEe != Ee".into());
    report.expect("eFe_eq_Fe", efe == ds.mul(&iso.big_f, e), || "eFe != Fe".into());
    let orthogonal = ds.is_idempotent(&eee) && ds.is_idempotent(&efe) && vector::is_zero(&ds.mul(&eee, &efe));
    report.expect("orthogonal_idempotents", orthogonal, || "eEe, eFe are not orthogonal idempotents".into());
    report.expect("idempotents_sum_to_e", &vector::add(&eee, &efe) == e, || "eEe + eFe != e".into());
    let is_ideal = |s: &Subspace| {
        s.basis().iter().all(|y| {
            x_space.basis().iter().all(|x| s.contains(&ds.mul(x, y)).unwrap_or(false) && s.contains(&ds.mul(y, x)).unwrap_or(false))
        })
    };
    report.expect("two_sided_ideals", is_ideal(&ideal_plus) && is_ideal(&ideal_kernel), || "not ideals of the partial double smash".into());
    let meet = ideal_plus.intersect(&ideal_kernel)?;
    let sum = ideal_plus.sum(&ideal_kernel)?;
    report.expect("direct_sum", meet.is_zero() && sum == x_space, || {
        format!("dims {} + {} (meet {}) vs {}", ideal_plus.dim(), ideal_kernel.dim(), meet.dim(), x_space.dim())
    });
    report.expect("kernel_is_eFe_ideal", kernel == ideal_kernel, || {
        format!("ker Φ̃ has dim {}, eFe-ideal has dim {}", kernel.dim(), ideal_kernel.dim())
    });
    // Φ̃(e) is the unit of the corner (1_A ⊗ I)(B ⊗ End H), not of B ⊗ End H
    let mut morphism = check_algebra_morphism(&phi_tilde, &structure, &iso.target);
    morphism.checks.retain(|c| c.name != "unit");
    report.merge("phi_tilde", morphism);
    report.expect("triviality_criterion", kernel.is_zero() == acts_globally_on_unit, || {
        format!("kernel dim {}, h ▷ 1_A = h · 1_A for all h: {}", kernel.dim(), acts_globally_on_unit)
    });

    Ok(BmDecomposition {
        iso,
        partial: p.clone(),
        partial_double_smash: x_space,
        structure,
        phi_tilde,
        eee,
        efe,
        ideal_plus,
        ideal_kernel,
        kernel,
        acts_globally_on_unit,
        report,
    })
}

/// [`bm_phi_psi`] followed by [`bm_restricted`] on the induced partial action.
pub fn bm_decomposition(b: &GlobalActionData, unit_a: &[Scalar]) -> Result<BmDecomposition> {
    let iso = bm_phi_psi(b, unit_a)?;
    let p = induced_partial_action(b, unit_a)?;
    bm_restricted(iso, &p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{scalar_partial, translation_action, GroupTable};
    use crate::exactlin::Field;
    use crate::globalize::enveloping_action;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn swap_phi_psi_are_inverse() {
        let b = translation_action(&GroupTable::cyclic(2).unwrap(), q());
        let iso = bm_phi_psi(&b, &vector::unit_vector(q(), 2, 0)).unwrap();
        assert_eq!(iso.double_smash.dim(), 8);
        assert!(iso.report.all_passed(), "{}", iso.report);
        let unit = iso.double_smash.unit().unwrap().clone();
        assert_eq!(&iso.phi.apply(&unit), iso.target.unit().unwrap());
    }

    #[test]
    fn global_case_has_zero_kernel() {
        let b = translation_action(&GroupTable::cyclic(2).unwrap(), q());
        let one = b.carrier().unit().unwrap().clone();
        let dec = bm_decomposition(&b, &one).unwrap();
        assert!(vector::is_zero(&dec.iso.big_f));
        assert!(dec.kernel.is_zero());
        assert!(dec.report.all_passed(), "{}", dec.report);
    }

    #[test]
    fn scalar_partial_kernel_is_one_dimensional() {
        let fx = scalar_partial(&GroupTable::cyclic(2).unwrap(), &[0], q()).unwrap();
        let env = enveloping_action(fx.action().unwrap()).unwrap();
        let input = unital_globalization(&env).unwrap();
        assert!(!input.unitized);
        let dec = bm_decomposition(&input.action, &input.unit_a).unwrap();
        assert_eq!(dec.partial_double_smash.dim(), 2);
        assert_eq!(dec.kernel.dim(), 1);
        assert_eq!(dec.ideal_plus.dim(), 1);
        assert!(dec.report.all_passed(), "{}", dec.report);
    }

    #[test]
    fn non_central_unit_is_rejected() {
        let b = translation_action(&GroupTable::cyclic(2).unwrap(), q());
        let not_idempotent = vec![q().from_int(2), q().zero()];
        assert!(matches!(bm_phi_psi(&b, &not_idempotent), Err(Error::NonCentralIdempotent(_))));
    }
}
