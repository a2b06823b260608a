//! Enveloping actions inside the model `A ⊗ H*` of `Hom(H, A)`.

use crate::algcore::{dual_hopf, tensor_product_algebra, LinearMapData};
use crate::error::Result;
use crate::exactlin::{is_closed, Matrix, StructureTensor, Subspace, Vector};
use crate::partial::{subspace_labels, verify_global_action, verify_partial_action, GlobalActionData, PartialActionData};
use crate::report::VerificationReport;

/// A candidate globalization: an `H`-module algebra, a subalgebra `B` of it,
/// and an embedding `φ: A → ambient`.
#[derive(Clone, Debug)]
pub struct ActionGlobalization {
    pub ambient: GlobalActionData,
    pub b: Subspace,
    pub phi: LinearMapData,
}

#[derive(Clone, Debug)]
pub struct EnvelopingActionResult {
    pub candidate: ActionGlobalization,
    /// The action restricted to `B`, on its canonical basis.
    pub b_action: GlobalActionData,
    /// `φ(1_A)` in the coordinates of `B`.
    pub unit_a: Vector,
    pub certificate: VerificationReport,
}

impl EnvelopingActionResult {
    pub fn ambient(&self) -> &GlobalActionData {
        &self.candidate.ambient
    }

    pub fn b(&self) -> &Subspace {
        &self.candidate.b
    }

    pub fn phi(&self) -> &LinearMapData {
        &self.candidate.phi
    }
}

/// `A ⊗ H*` with `h_m ▷ (a ⊗ h_i*) = Σ_l ⟨h_i*, h_l h_m⟩ a ⊗ h_l*`, the
/// coordinate form of `(h ▷ f)(k) = f(kh)` on `Hom(H, A)`.
pub fn hom_model(p: &PartialActionData) -> Result<GlobalActionData> {
    let h = p.hopf();
    let n = h.dim();
    let dual = dual_hopf(h)?;
    let ambient = tensor_product_algebra(p.carrier(), dual.algebra());
    let d = ambient.dim();
    let mut action = StructureTensor::new(n, d, d);
    for l in 0..n {
        for m in 0..n {
            for (i, c) in h.algebra().mult().entry(l, m) {
                for j in 0..p.carrier().dim() {
                    action.add_coefficient(m, j * n + i, j * n + l, c)?;
                }
            }
        }
    }
    GlobalActionData::new(h.clone(), ambient, action)
}

/// `φ(a) = Σ_i (h_i · a) ⊗ h_i*`.
pub fn phi_embed(p: &PartialActionData) -> LinearMapData {
    let (a, n) = (p.carrier().dim(), p.hopf().dim());
    let mut m = Matrix::zeros(a * n, a);
    for j in 0..a {
        for i in 0..n {
            for (r, c) in p.action().entry(i, j) {
                m.set(r * n + i, j, c.clone());
            }
        }
    }
    LinearMapData::new(m)
}

/// Evaluation at `1_H`: `a ⊗ f ↦ f(1_H) a`.
pub fn eval_at_unit(p: &PartialActionData) -> LinearMapData {
    let (a, n) = (p.carrier().dim(), p.hopf().dim());
    let unit = p.hopf().unit();
    let m = Matrix::from_fn(a, a * n, |r, c| if c / n == r { unit[c % n].clone() } else { crate::exactlin::Scalar::zero() });
    LinearMapData::new(m)
}

/// `span{h_m ▷ v}` over all basis `h_m` and `v` in `vectors`.
pub fn h_span(action: &GlobalActionData, vectors: &[Vector]) -> Subspace {
    let mut out = Vec::new();
    for v in vectors {
        for m in 0..action.hopf().dim() {
            out.push(action.act_basis(m, v));
        }
    }
    Subspace::span(&out, action.carrier().dim()).expect("vectors have carrier length")
}

/// Builds `B = H ▷ φ(A)` and certifies it.
pub fn enveloping_action(p: &PartialActionData) -> Result<EnvelopingActionResult> {
    verify_partial_action(p).into_result("partial action")?;
    let ambient = hom_model(p)?;
    let phi = phi_embed(p);
    let b = h_span(&ambient, &phi.matrix().columns());
    let candidate = ActionGlobalization { ambient, b, phi };
    let mut certificate = verify_action_globalization(&candidate, p);
    certificate.record("admissible", check_admissible(&candidate));
    let certificate = certificate.into_result("enveloping action")?;
    let labels = subspace_labels(candidate.ambient.carrier(), &candidate.b, "b");
    let b_action = candidate.ambient.restrict(&candidate.b, labels)?;
    let phi_one = candidate.phi.apply(p.carrier().require_unit()?);
    let unit_a = candidate.b.coordinates(&phi_one).expect("φ(A) ⊆ B");
    Ok(EnvelopingActionResult { candidate, b_action, unit_a, certificate })
}

/// `B = H ▷ φ(A)`.
pub fn check_admissible(c: &ActionGlobalization) -> std::result::Result<(), String> {
    let generated = h_span(&c.ambient, &c.phi.matrix().columns());
    if generated == c.b {
        Ok(())
    } else {
        Err(format!("H ▷ φ(A) has dim {}, B has dim {}", generated.dim(), c.b.dim()))
    }
}

/// Conditions 1)–2) of an enveloping action, plus the structural facts they presuppose.
pub fn verify_action_globalization(c: &ActionGlobalization, original: &PartialActionData) -> VerificationReport {
    let mut report = VerificationReport::new();
    let ambient = c.ambient.carrier();
    let a = original.carrier();
    if c.phi.domain_dim() != a.dim() || c.phi.codomain_dim() != ambient.dim() || c.b.ambient_dim() != ambient.dim() {
        report.fail("shape", "φ, B and the ambient algebra have inconsistent dimensions");
        return report;
    }
    let module = verify_global_action(&c.ambient);
    report.expect("ambient_module_algebra", module.all_passed(), || module.to_string().trim().replace('\n', "; "));
    report.expect("b_subalgebra", is_closed(&c.b, ambient.mult()), || "B is not closed under products".into());
    let unstable = (0..c.ambient.hopf().dim())
        .find(|&m| c.b.basis().iter().any(|v| !c.b.contains(&c.ambient.act_basis(m, v)).unwrap_or(false)));
    report.expect("b_h_stable", unstable.is_none(), || format!("h ▷ B ⊄ B for h = {}", c.ambient.hopf().labels()[unstable.unwrap()]));

    report.expect("phi_injective", c.phi.rank() == a.dim(), || format!("rank φ = {}", c.phi.rank()));
    let phis: Vec<Vector> = c.phi.matrix().columns();
    let bad = (0..a.dim())
        .flat_map(|i| (0..a.dim()).map(move |j| (i, j)))
        .find(|&(i, j)| c.phi.apply(&a.mul_basis(i, j)) != ambient.mul(&phis[i], &phis[j]));
    report.expect("phi_multiplicative", bad.is_none(), || {
        let (i, j) = bad.unwrap();
        format!("φ(ab) != φ(a)φ(b) at ({}, {})", a.labels()[i], a.labels()[j])
    });
    let image = Subspace::span(&phis, ambient.dim()).expect("columns have ambient length");
    report.expect("phi_in_b", image.is_subspace_of(&c.b).unwrap_or(false), || "φ(A) ⊄ B".into());
    let bad = image
        .basis()
        .iter()
        .enumerate()
        .find_map(|(i, x)| c.b.basis().iter().position(|y| !image.contains(&ambient.mul(x, y)).unwrap_or(false)).map(|j| (i, j)));
    report.expect("right_ideal", bad.is_none(), || {
        let (i, j) = bad.unwrap();
        format!("φ(A) basis {i} times B basis {j} leaves φ(A)")
    });
    match a.unit() {
        Some(one) => {
            let phi_one = c.phi.apply(one);
            let bad = (0..original.hopf().dim()).flat_map(|i| (0..a.dim()).map(move |j| (i, j))).find(|&(i, j)| {
                let left = c.phi.apply(&original.act_basis(i, &a.basis_vector(j)));
                let right = ambient.mul(&phi_one, &c.ambient.act_basis(i, &phis[j]));
                left != right
            });
            report.expect("induced_action", bad.is_none(), || {
                let (i, j) = bad.unwrap();
                format!(
                    "φ(h·a) != φ(1)(h ▷ φ(a)) at (h, a) = ({}, {})",
                    original.hopf().labels()[i],
                    a.labels()[j]
                )
            });
        }
        None => report.fail("induced_action", "carrier has no unit"),
    }
    report
}
