//! End-to-end runs of the fixtures: verification, globalization, and the
//! relations each worked example states.

use std::collections::BTreeMap;

use crate::algcore::{check_isomorphism, tensor_product_algebra, LinearMapData};
use crate::catalog::{example1_candidate, example2_idempotent, fixture, group_algebra, ExampleFixture, FixtureId, GroupTable};
use crate::duality::{bm_decomposition, cohen_montgomery_group, endb_module, unital_globalization};
use crate::error::Result;
use crate::exactlin::{vector, Field, Subspace, Vector};
use crate::globalize::{
    enveloping_action, enveloping_coaction, psi_compatibility, verify_coaction_globalization, CoactionGlobalization,
    EnvelopingCoactionResult,
};
use crate::partial::{action_to_coaction, coaction_to_action, verify_partial_action, verify_partial_coaction, PartialCoactionData};
use crate::report::VerificationReport;

#[derive(Clone, Debug)]
pub struct ExampleRun {
    pub id: String,
    pub report: VerificationReport,
    pub dims: BTreeMap<String, usize>,
    /// Exact values worth showing, already formatted with basis labels.
    pub values: BTreeMap<String, String>,
}

pub fn run_example(id: &str, field: Field) -> Result<ExampleRun> {
    let fx = fixture(id, field)?;
    let mut run = ExampleRun { id: fx.id.to_string(), report: VerificationReport::new(), dims: BTreeMap::new(), values: BTreeMap::new() };
    run.dims.insert("A".into(), fx.carrier.dim());
    run.dims.insert("H".into(), fx.hopf.dim());
    if let Some(coaction) = fx.coaction() {
        run.report.merge("structure", verify_partial_coaction(coaction));
        let env = enveloping_coaction(coaction)?;
        run.dims.insert("ambient".into(), env.ambient().carrier().dim());
        run.dims.insert("B".into(), env.b().dim());
        run.report.merge("enveloping_coaction", env.certificate.clone());
        conversion_checks(&mut run, coaction, &env)?;
        match &fx.id {
            FixtureId::Example1 { group, subgroup } => example1_checks(&mut run, &fx, group, subgroup)?,
            FixtureId::Example2 { alpha } => example2_checks(&mut run, &env, &field.parse_scalar(alpha)?, field)?,
            FixtureId::Example3 => example3_checks(&mut run, &fx, &env)?,
            FixtureId::Scalar { .. } => {}
        }
    }
    if let Some(action) = fx.action() {
        run.report.merge("structure", verify_partial_action(action));
        let env = enveloping_action(action)?;
        run.dims.insert("ambient".into(), env.ambient().carrier().dim());
        run.dims.insert("B".into(), env.b().dim());
        run.report.merge("enveloping_action", env.certificate.clone());
        let input = unital_globalization(&env)?;
        let dec = bm_decomposition(&input.action, &input.unit_a)?;
        run.dims.insert("partial_double_smash".into(), dec.partial_double_smash.dim());
        run.dims.insert("kernel".into(), dec.kernel.dim());
        run.report.merge("bm", dec.iso.report.clone());
        run.report.merge("bm_restricted", dec.report.clone());
        run.report.merge("end_b", endb_module(&dec)?.report);
        if let FixtureId::Scalar { group, .. } = &fx.id {
            let g: GroupTable = group.parse()?;
            let cm = cohen_montgomery_group(&input.action, &input.unit_a, &g)?;
            run.dims.insert("s_m".into(), cm.s_m.dim());
            run.report.merge("cm", cm.report);
        }
    }
    for e in &fx.expected {
        if let Some(name) = e.name.strip_prefix("dim ") {
            if let Some(actual) = run.dims.get(name) {
                let ok = actual.to_string() == e.value;
                run.report.expect(format!("expected/{}", e.name), ok, || format!("{} vs expected {}", actual, e.value));
            }
        }
    }
    Ok(run)
}

fn conversion_checks(run: &mut ExampleRun, coaction: &PartialCoactionData, env: &EnvelopingCoactionResult) -> Result<()> {
    let action = coaction_to_action(coaction)?;
    let back = action_to_coaction(&action, coaction.hopf())?;
    run.report.expect("convert_round_trip", back.coaction() == coaction.coaction(), || "coaction → action → coaction changed the tensor".into());
    let action_env = enveloping_action(&action)?;
    run.report.merge("psi_compatibility", psi_compatibility(env, &action_env));
    Ok(())
}

fn example1_checks(run: &mut ExampleRun, fx: &ExampleFixture, group: &str, subgroup: &str) -> Result<()> {
    let g: GroupTable = group.parse()?;
    let n = g.parse_subset(subgroup)?;
    let (ambient, b, theta) = example1_candidate(fx, &g, &n)?;
    let candidate = CoactionGlobalization { ambient, b, theta };
    run.report.merge("candidate", verify_coaction_globalization(&candidate, fx.coaction().expect("coaction fixture")));
    run.dims.insert("theta(A)".into(), candidate.theta.rank());
    Ok(())
}

fn example2_checks(run: &mut ExampleRun, env: &EnvelopingCoactionResult, alpha: &crate::exactlin::Scalar, field: Field) -> Result<()> {
    let f = example2_idempotent(alpha, field)?;
    let h = env.ambient().hopf();
    let one = h.unit().clone();
    run.report.expect("f_idempotent", h.mul(&f, &f) == f, || "f² != f".into());
    let expected = Subspace::span(&[one, f.clone()], 4)?;
    run.report.expect("b_is_span_1_f", env.b() == &expected, || format!("B has dim {}", env.b().dim()));
    run.values.insert("f".into(), h.format(&f));
    Ok(())
}

fn example3_checks(run: &mut ExampleRun, fx: &ExampleFixture, env: &EnvelopingCoactionResult) -> Result<()> {
    let field = fx.hopf.field();
    let ambient = env.ambient().carrier();
    let unit = |i: usize| vector::unit_vector(field, 8, i);
    // a_j ⊗ h_k at j·4 + k; h = 1, c, x, cx
    let one_b = unit(0);
    let g = vector::add(&unit(1), &unit(3));
    let y = unit(4);
    let gy = ambient.mul(&g, &y);
    let r = &mut run.report;
    r.expect("g_squared_is_one", ambient.mul(&g, &g) == one_b, || ambient.format(&ambient.mul(&g, &g)));
    r.expect("y_squared_is_zero", vector::is_zero(&ambient.mul(&y, &y)), || ambient.format(&ambient.mul(&y, &y)));
    r.expect("g_y_commute", gy == ambient.mul(&y, &g), || "gy != yg".into());

    let b = env.b();
    let b_alg = env.b_coaction.carrier();
    let coords = |v: &Vector| b.coordinates(v);
    let basis = [one_b.clone(), y.clone(), g.clone(), gy.clone()];
    let images: Option<Vec<Vector>> = basis.iter().map(coords).collect();
    match images {
        Some(images) => {
            // kZ₂ ⊗ k[Y]/(Y²) on t^a ⊗ Y^b at a·2 + b
            let z2 = group_algebra(&GroupTable::cyclic(2)?, field);
            let model = tensor_product_algebra(z2.algebra(), &fx.carrier);
            let map = LinearMapData::from_images(&images, b.dim())?;
            r.merge("kz2_tensor_dual_numbers", check_isomorphism(&map, &model, b_alg));
        }
        None => r.fail("kz2_tensor_dual_numbers", "1_B, y, g, gy are not all in B"),
    }

    let half = field.ratio(1, 2)?;
    let e = vector::scale(&half, &vector::add(&one_b, &g));
    r.expect("e_central_idempotent", ambient.is_idempotent(&e) && b.basis().iter().all(|v| ambient.mul(&e, v) == ambient.mul(v, &e)), || {
        ambient.format(&e)
    });
    let eb = Subspace::span(&b.basis().iter().map(|v| ambient.mul(&e, v)).collect::<Vec<_>>(), 8)?;
    let theta_a = Subspace::span(&env.theta().matrix().columns(), 8)?;
    r.expect("theta_a_is_eB", theta_a == eb, || format!("dim θ(A) = {}, dim eB = {}", theta_a.dim(), eb.dim()));
    run.dims.insert("eB".into(), eb.dim());

    let coaction = env.ambient();
    let h_unit = |k: usize| vector::unit_vector(field, 4, k);
    let expected_rho_g = vector::add(&vector::kron(&g, &h_unit(1)), &vector::kron(&one_b, &h_unit(3)));
    run.report.expect("rho_g", coaction.rho(&g) == expected_rho_g, || "ρ(g) != g ⊗ c + 1_B ⊗ cx".into());
    run.report.expect("rho_y", coaction.rho(&y) == vector::kron(&y, &h_unit(0)), || "ρ(y) != y ⊗ 1".into());
    let big = coaction.tensor_algebra();
    let cut = vector::kron(&e, &h_unit(0));
    let ey = ambient.mul(&e, &y);
    let induced_ok = [&e, &ey].iter().all(|v| {
        let left = big.mul(&cut, &coaction.rho(v));
        let mut right = vector::zeros(32);
        for k in [0, 1, 3] {
            vector::axpy(&mut right, &half, &vector::kron(v, &h_unit(k)));
        }
        left == right
    });
    run.report.expect("induced_coaction_on_eB", induced_ok, || "(e ⊗ 1)ρ differs from ½(v ⊗ 1 + v ⊗ c + v ⊗ cx)".into());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example3_run_passes() {
        let run = run_example("example3", Field::Rational).unwrap();
        assert!(run.report.all_passed(), "{}", run.report);
        assert_eq!(run.dims["B"], 4);
        assert_eq!(run.dims["eB"], 2);
    }
}
