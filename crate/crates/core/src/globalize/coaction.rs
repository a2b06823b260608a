//! Enveloping coactions inside `A ⊗ H` with the trivial coaction `I ⊗ Δ`.

use crate::algcore::{tensor_product_algebra, LinearMapData};
use crate::error::{Error, Result};
use crate::exactlin::{closure_bilinear, is_closed, vector, Subspace, Vector};
use crate::partial::{subspace_labels, verify_global_coaction, verify_partial_coaction, GlobalCoactionData, PartialCoactionData};
use crate::report::VerificationReport;

use super::action::EnvelopingActionResult;

/// A candidate globalization: an `H`-comodule algebra, a subalgebra `B` of
/// it, and `θ: A → ambient`.
#[derive(Clone, Debug)]
pub struct CoactionGlobalization {
    pub ambient: GlobalCoactionData,
    pub b: Subspace,
    pub theta: LinearMapData,
}

#[derive(Clone, Debug)]
pub struct EnvelopingCoactionResult {
    pub candidate: CoactionGlobalization,
    /// The coaction restricted to `B`, on its canonical basis.
    pub b_coaction: GlobalCoactionData,
    /// `θ(1_A)` in the coordinates of `B`.
    pub unit_a: Vector,
    pub certificate: VerificationReport,
}

impl EnvelopingCoactionResult {
    pub fn ambient(&self) -> &GlobalCoactionData {
        &self.candidate.ambient
    }

    pub fn b(&self) -> &Subspace {
        &self.candidate.b
    }

    pub fn theta(&self) -> &LinearMapData {
        &self.candidate.theta
    }
}

/// The subcomodule algebra generated by a subalgebra `seed`: the algebra
/// closure of `H* ⇀ seed`.
pub fn comodule_generated(ambient: &GlobalCoactionData, seed: &Subspace) -> Result<Subspace> {
    let algebra = ambient.carrier();
    if seed.ambient_dim() != algebra.dim() || !algebra.is_subalgebra(seed) {
        return Err(Error::SeedNotSubalgebra(format!("seed of dim {} is not closed under products", seed.dim())));
    }
    let mut hits: Vec<Vector> = Vec::new();
    for s in seed.basis() {
        for k in 0..ambient.hopf().dim() {
            hits.push(ambient.hit(k, s));
        }
    }
    let v = Subspace::span(&hits, algebra.dim())?;
    let b = closure_bilinear(v.basis(), algebra.mult(), None)?;
    if !ambient.is_stable(&b) {
        return Err(Error::VerificationFailed {
            what: "comodule generation".into(),
            detail: "closure of H* ⇀ seed is not coaction-stable".into(),
        });
    }
    Ok(b)
}

/// `B` generated by `ρ̄(A)` inside `A ⊗ H`, with `θ = ρ̄`.
pub fn enveloping_coaction(p: &PartialCoactionData) -> Result<EnvelopingCoactionResult> {
    verify_partial_coaction(p).into_result("partial coaction")?;
    let ambient = GlobalCoactionData::trivial_on_tensor(p.carrier(), p.hopf());
    let theta = LinearMapData::new(p.coaction().clone());
    let seed = Subspace::span(&theta.matrix().columns(), ambient.carrier().dim())?;
    let b = comodule_generated(&ambient, &seed)?;
    let candidate = CoactionGlobalization { ambient, b, theta };
    let certificate = verify_coaction_globalization(&candidate, p).into_result("enveloping coaction")?;
    let labels = subspace_labels(candidate.ambient.carrier(), &candidate.b, "b");
    let b_coaction = candidate.ambient.restrict(&candidate.b, labels)?;
    let theta_one = candidate.theta.apply(p.carrier().require_unit()?);
    let unit_a = candidate.b.coordinates(&theta_one).expect("θ(A) ⊆ B");
    Ok(EnvelopingCoactionResult { candidate, b_coaction, unit_a, certificate })
}

/// Conditions 1)–3) of an enveloping coaction, plus the structural facts they presuppose.
pub fn verify_coaction_globalization(c: &CoactionGlobalization, original: &PartialCoactionData) -> VerificationReport {
    let mut report = VerificationReport::new();
    let ambient = c.ambient.carrier();
    let a = original.carrier();
    let h = original.hopf();
    let n = h.dim();
    if c.theta.domain_dim() != a.dim() || c.theta.codomain_dim() != ambient.dim() || c.b.ambient_dim() != ambient.dim() {
        report.fail("shape", "θ, B and the ambient algebra have inconsistent dimensions");
        return report;
    }
    let comodule = verify_global_coaction(&c.ambient);
    report.expect("ambient_comodule_algebra", comodule.all_passed(), || comodule.to_string().trim().replace('\n', "; "));
    report.expect("b_subalgebra", is_closed(&c.b, ambient.mult()), || "B is not closed under products".into());
    report.expect("b_coaction_stable", c.ambient.is_stable(&c.b), || "ρ(B) ⊄ B ⊗ H".into());

    let thetas: Vec<Vector> = c.theta.matrix().columns();
    report.expect("theta_injective", c.theta.rank() == a.dim(), || format!("rank θ = {}", c.theta.rank()));
    let bad = (0..a.dim())
        .flat_map(|i| (0..a.dim()).map(move |j| (i, j)))
        .find(|&(i, j)| c.theta.apply(&a.mul_basis(i, j)) != ambient.mul(&thetas[i], &thetas[j]));
    report.expect("theta_multiplicative", bad.is_none(), || {
        let (i, j) = bad.unwrap();
        format!("θ(ab) != θ(a)θ(b) at ({}, {})", a.labels()[i], a.labels()[j])
    });
    let image = Subspace::span(&thetas, ambient.dim()).expect("columns have ambient length");
    report.expect("theta_in_b", image.is_subspace_of(&c.b).unwrap_or(false), || "θ(A) ⊄ B".into());

    let Some(one) = a.unit() else {
        report.fail("unital_right_ideal", "carrier has no unit");
        return report;
    };
    let theta_one = c.theta.apply(one);
    let ideal_ok = c.b.basis().iter().all(|y| image.contains(&ambient.mul(&theta_one, y)).unwrap_or(false))
        && image.basis().iter().all(|x| {
            c.b.basis().iter().all(|y| image.contains(&ambient.mul(x, y)).unwrap_or(false))
                && &ambient.mul(&theta_one, x) == x
                && &ambient.mul(x, &theta_one) == x
        });
    report.expect("unital_right_ideal", ideal_ok, || "θ(A) is not a right ideal of B with unit θ(1)".into());

    let generated = comodule_generated(&c.ambient, &image);
    report.expect("generated", generated.as_ref() == Ok(&c.b), || match &generated {
        Ok(g) => format!("θ(A) generates a subcomodule algebra of dim {}, B has dim {}", g.dim(), c.b.dim()),
        Err(e) => e.to_string(),
    });

    let big = tensor_product_algebra(ambient, h.algebra());
    let left_factor = vector::kron(&theta_one, h.unit());
    let bad = (0..a.dim()).find(|&i| {
        let r = original.rho_basis(i);
        let mut left = vector::zeros(ambient.dim() * n);
        for j in 0..a.dim() {
            for k in 0..n {
                let coeff = &r[j * n + k];
                if coeff.is_zero() {
                    continue;
                }
                for (row, t) in thetas[j].iter().enumerate() {
                    if !t.is_zero() {
                        left[row * n + k] += &(coeff * t);
                    }
                }
            }
        }
        let right = big.mul(&left_factor, &c.ambient.rho(&thetas[i]));
        left != right
    });
    report.expect("commuting_square", bad.is_none(), || {
        format!("(θ⊗I)ρ̄(a) != (θ(1)⊗1)ρ(θ(a)) at a = {}", a.labels()[bad.unwrap()])
    });
    report
}

/// Identifies `A ⊗ H` with `A ⊗ H**` coordinate-wise and checks that the
/// enveloping coaction's `B` is carried onto the `B′` of the enveloping
/// action of the converted `H*`-action.
pub fn psi_compatibility(coaction: &EnvelopingCoactionResult, action: &EnvelopingActionResult) -> VerificationReport {
    let mut report = VerificationReport::new();
    let acting = action.ambient().hopf();
    report.expect(
        "acting_algebra_is_dual",
        crate::algcore::dual_hopf(coaction.ambient().hopf()).is_ok_and(|d| d.same_structure(acting)),
        || "the acting algebra is not H*".into(),
    );
    report.expect("ambient_dims", coaction.ambient().carrier().dim() == action.ambient().carrier().dim(), || {
        format!("{} vs {}", coaction.ambient().carrier().dim(), action.ambient().carrier().dim())
    });
    report.expect("dims", coaction.b().dim() == action.b().dim(), || {
        format!("dim B = {}, dim B' = {}", coaction.b().dim(), action.b().dim())
    });
    report.expect("bijection", coaction.b() == action.b(), || "Ψ(B) != B'".into());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{example2, example3};
    use crate::exactlin::Field;

    #[test]
    fn example2_b_is_one_and_f() {
        let q = Field::Rational;
        for alpha in 0..3 {
            let fx = example2(q.from_int(alpha), q).unwrap();
            let r = enveloping_coaction(fx.coaction().unwrap()).unwrap();
            assert_eq!(r.b().dim(), 2);
            assert!(r.certificate.all_passed());
        }
    }

    #[test]
    fn example3_b_has_dim_4() {
        let fx = example3(Field::Rational).unwrap();
        let r = enveloping_coaction(fx.coaction().unwrap()).unwrap();
        assert_eq!(r.b().dim(), 4);
    }

    #[test]
    fn non_subalgebra_seed_is_rejected() {
        let fx = example3(Field::Rational).unwrap();
        let ambient = GlobalCoactionData::trivial_on_tensor(&fx.carrier, &fx.hopf);
        let x_tensor_one = crate::exactlin::vector::unit_vector(Field::Rational, 8, 1);
        let seed = Subspace::span(&[x_tensor_one], 8).unwrap();
        assert!(matches!(comodule_generated(&ambient, &seed), Err(Error::SeedNotSubalgebra(_))));
    }
}
