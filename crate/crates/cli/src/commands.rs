use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use hpa_core::algcore::{dual_hopf, verify_hopf_axioms};
use hpa_core::bundle::Bundle;
use hpa_core::catalog::{fixture, group_of_grouplikes, FIXTURE_IDS};
use hpa_core::duality::{bm_decomposition, cohen_montgomery_group, endb_module, partial_smash, smash_product, unital_globalization};
use hpa_core::examples::run_example;
use hpa_core::exactlin::{Field, Vector};
use hpa_core::globalize::{enveloping_action, enveloping_coaction};
use hpa_core::partial::{
    action_to_coaction, coaction_to_action, induced_partial_action, induced_partial_coaction, verify_global_action,
    verify_global_coaction, verify_partial_action, verify_partial_coaction, GlobalActionData,
};
use hpa_core::Error;

use crate::report::Report;
use crate::{Cli, Command, Duality, Examples, Input, Mode};

pub fn run(cli: &Cli) -> Result<Report> {
    let field = cli.field;
    let report = match &cli.command {
        Command::Verify { input } => verify(&load(input, field)?)?,
        Command::Globalize { mode, input, emit_bundle } => {
            let bundle = load(input, field)?;
            let report = match mode {
                Mode::Action => globalize_action(&bundle)?,
                Mode::Coaction => globalize_coaction(&bundle)?,
            };
            emit(&report, emit_bundle.as_deref())?;
            report
        }
        Command::Smash { partial, input, .. } => smash(&load(input, field)?, *partial)?,
        Command::Duality { which: Duality::Bm { input } } => duality_bm(&load(input, field)?)?,
        Command::Duality { which: Duality::Cm { input } } => duality_cm(&load(input, field)?)?,
        Command::Convert { input, emit_bundle } => {
            let report = convert(&load(input, field)?)?;
            emit(&report, emit_bundle.as_deref())?;
            report
        }
        Command::Examples { which: Examples::List } => {
            let mut r = Report::new("examples list", field.to_string());
            r.list = FIXTURE_IDS.iter().map(|s| s.to_string()).collect();
            r
        }
        Command::Examples { which: Examples::Run { id } } => examples_run(id, field)?,
        Command::Examples { which: Examples::Export { id } } => {
            let mut r = Report::new(format!("examples export --id {id}"), field.to_string());
            r.bundle = Some(fixture_bundle(id, field)?.to_file());
            r
        }
    };
    Ok(report.finish())
}

fn emit(report: &Report, path: Option<&Path>) -> Result<()> {
    if let (Some(path), Some(bundle)) = (path, &report.bundle) {
        let text = serde_json::to_string_pretty(bundle)? + "\n";
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn fixture_bundle(id: &str, field: Field) -> Result<Bundle> {
    if let Ok(dir) = std::env::var("HPA_FIXTURE_DIR") {
        let path = PathBuf::from(dir).join(format!("{}.json", id.replace(':', "_")));
        return Ok(Bundle::load(&path)?);
    }
    let fx = fixture(id, field)?;
    let mut bundle = Bundle::new(field);
    if let Some(c) = fx.coaction() {
        bundle = bundle.with_coaction(c, true);
    }
    if let Some(a) = fx.action() {
        bundle = bundle.with_action(a, true);
    }
    bundle.meta.insert("fixture".into(), serde_json::Value::String(fx.id.to_string()));
    Ok(bundle)
}

fn load(input: &Input, field: Field) -> Result<Bundle> {
    match (&input.bundle, &input.fixture) {
        (Some(path), _) => Ok(Bundle::load(path)?),
        (None, Some(id)) => fixture_bundle(id, field),
        (None, None) => Err(Error::Shape("give a bundle path or --fixture <id>".into()).into()),
    }
}

/// Turns a verification-type error into a failed check; input errors still abort.
fn checked<T>(r: &mut Report, name: &str, res: hpa_core::Result<T>) -> Result<Option<T>> {
    match res {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_verification_failure() => {
            r.checks.push(hpa_core::Check { name: name.into(), passed: false, detail: Some(e.to_string()) });
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

fn verify(b: &Bundle) -> Result<Report> {
    let mut r = Report::new("verify", b.field.to_string());
    if let Some(h) = &b.hopf {
        r.dim("H", h.algebra.dim());
        r.merge("hopf", verify_hopf_axioms(&h.algebra, &h.coalgebra, &h.antipode));
    }
    if let Some(a) = &b.algebra {
        r.dim("A", a.dim());
        r.merge("algebra", a.verify());
    }
    let structures = [
        b.partial_action.is_some(),
        b.global_action.is_some(),
        b.partial_coaction.is_some(),
        b.global_coaction.is_some(),
    ];
    if b.hopf.is_none() && b.algebra.is_none() {
        return Err(Error::Shape("bundle has neither `hopf` nor `algebra`".into()).into());
    }
    if structures.iter().any(|&s| s) {
        let Some(_) = checked(&mut r, "hopf/antipode_invertible", b.require_hopf())? else {
            return Ok(r);
        };
    }
    if b.partial_action.is_some() {
        r.merge("partial_action", verify_partial_action(&b.partial_action_data()?));
    }
    if b.global_action.is_some() {
        let g = b.global_action_data()?;
        r.merge("global_action", verify_global_action(&g));
        if let Some(u) = &b.unit_a {
            if let Some(p) = checked(&mut r, "unit_a/induced_partial_action", induced_partial_action(&g, u))? {
                r.merge("unit_a/induced_partial_action", verify_partial_action(&p));
            }
        }
    }
    if b.partial_coaction.is_some() {
        r.merge("partial_coaction", verify_partial_coaction(&b.partial_coaction_data()?));
    }
    if b.global_coaction.is_some() {
        let g = b.global_coaction_data()?;
        r.merge("global_coaction", verify_global_coaction(&g));
        if let Some(u) = &b.unit_a {
            if let Some(p) = checked(&mut r, "unit_a/induced_partial_coaction", induced_partial_coaction(&g, u))? {
                r.merge("unit_a/induced_partial_coaction", verify_partial_coaction(&p));
            }
        }
    }
    Ok(r)
}

fn globalize_action(b: &Bundle) -> Result<Report> {
    let p = b.partial_action_data()?;
    let mut r = Report::new("globalize --mode action", b.field.to_string());
    r.dim("A", p.carrier().dim());
    r.dim("H", p.hopf().dim());
    let structure = verify_partial_action(&p);
    let valid = structure.all_passed();
    r.merge("structure", structure);
    if !valid {
        return Ok(r);
    }
    let Some(env) = checked(&mut r, "enveloping_action", enveloping_action(&p))? else {
        return Ok(r);
    };
    r.dim("ambient", env.ambient().carrier().dim());
    r.dim("B", env.b().dim());
    r.basis("B", env.b().basis());
    r.vector("unit_a", &env.unit_a);
    r.values.insert("B_unital".into(), env.b_action.carrier().is_unital().to_string());
    r.merge("certificate", env.certificate.clone());
    let mut out = Bundle::new(b.field).with_action(&env.b_action, false);
    out.unit_a = Some(env.unit_a.clone());
    r.bundle = Some(out.to_file());
    Ok(r)
}

fn globalize_coaction(b: &Bundle) -> Result<Report> {
    let p = b.partial_coaction_data()?;
    let mut r = Report::new("globalize --mode coaction", b.field.to_string());
    r.dim("A", p.carrier().dim());
    r.dim("H", p.hopf().dim());
    let structure = verify_partial_coaction(&p);
    let valid = structure.all_passed();
    r.merge("structure", structure);
    if !valid {
        return Ok(r);
    }
    let Some(env) = checked(&mut r, "enveloping_coaction", enveloping_coaction(&p))? else {
        return Ok(r);
    };
    r.dim("ambient", env.ambient().carrier().dim());
    r.dim("B", env.b().dim());
    r.basis("B", env.b().basis());
    r.vector("unit_a", &env.unit_a);
    r.merge("certificate", env.certificate.clone());
    let mut out = Bundle::new(b.field).with_coaction(&env.b_coaction, false);
    out.unit_a = Some(env.unit_a.clone());
    r.bundle = Some(out.to_file());
    Ok(r)
}

fn smash(b: &Bundle, partial: bool) -> Result<Report> {
    let mut out = Bundle::new(b.field);
    if partial {
        let p = b.partial_action_data()?;
        let mut r = Report::new("smash --partial", b.field.to_string());
        let structure = verify_partial_action(&p);
        let valid = structure.all_passed();
        r.merge("structure", structure);
        if !valid {
            return Ok(r);
        }
        let Some(s) = checked(&mut r, "partial_smash", partial_smash(&p))? else {
            return Ok(r);
        };
        r.dim("A⊗H", s.ambient.dim());
        r.dim("A#H", s.carrier.dim());
        r.vector("e", &s.e);
        r.basis("A#H", s.carrier.basis());
        r.merge("algebra", s.structure.verify());
        out.algebra = Some(s.structure);
        r.bundle = Some(out.to_file());
        Ok(r)
    } else {
        let g = b.global_action_data()?;
        let mut r = Report::new("smash --global", b.field.to_string());
        let structure = verify_global_action(&g);
        let valid = structure.all_passed();
        r.merge("structure", structure);
        if !valid {
            return Ok(r);
        }
        let Some(s) = checked(&mut r, "smash_product", smash_product(&g))? else {
            return Ok(r);
        };
        r.dim("B#H", s.dim());
        r.merge("algebra", s.carrier.verify());
        out.algebra = Some(s.carrier);
        r.bundle = Some(out.to_file());
        Ok(r)
    }
}

/// The unital global action and `1_A` that the duality maps start from.
fn duality_input(b: &Bundle, r: &mut Report) -> Result<Option<(GlobalActionData, Vector)>> {
    if b.global_action.is_some() {
        let g = b.global_action_data()?;
        let unit_a = b.unit_a.clone().ok_or_else(|| Error::Shape("missing key `unit_a`".into()))?;
        let structure = verify_global_action(&g);
        let valid = structure.all_passed();
        r.merge("structure", structure);
        return Ok(valid.then_some((g, unit_a)));
    }
    if b.partial_action.is_none() {
        return Err(Error::Shape("missing key `global_action` or `partial_action`".into()).into());
    }
    let p = b.partial_action_data()?;
    let structure = verify_partial_action(&p);
    let valid = structure.all_passed();
    r.merge("structure", structure);
    if !valid {
        return Ok(None);
    }
    let Some(env) = checked(r, "enveloping_action", enveloping_action(&p))? else {
        return Ok(None);
    };
    r.merge("enveloping_action", env.certificate.clone());
    let unital = unital_globalization(&env)?;
    r.values.insert("unitized".into(), unital.unitized.to_string());
    Ok(Some((unital.action, unital.unit_a)))
}

fn duality_bm(b: &Bundle) -> Result<Report> {
    let mut r = Report::new("duality bm", b.field.to_string());
    let Some((g, unit_a)) = duality_input(b, &mut r)? else {
        return Ok(r);
    };
    let Some(dec) = checked(&mut r, "bm", bm_decomposition(&g, &unit_a))? else {
        return Ok(r);
    };
    let iso = &dec.iso;
    r.dim("B", g.carrier().dim());
    r.dim("H", g.hopf().dim());
    r.dim("double_smash", iso.double_smash.dim());
    r.dim("B⊗End(H)", iso.target.dim());
    r.dim("partial_double_smash", dec.partial_double_smash.dim());
    r.dim("ideal_eEe", dec.ideal_plus.dim());
    r.dim("ideal_eFe", dec.ideal_kernel.dim());
    r.dim("kernel", dec.kernel.dim());
    r.vector("unit_a", &unit_a);
    r.vector("E", &iso.big_e);
    r.vector("F", &iso.big_f);
    r.vector("e", &iso.e);
    r.vector("eEe", &dec.eee);
    r.vector("eFe", &dec.efe);
    r.basis("kernel", dec.kernel.basis());
    r.values.insert("acts_globally_on_unit".into(), dec.acts_globally_on_unit.to_string());
    r.merge("bm", iso.report.clone());
    r.merge("restricted", dec.report.clone());
    if let Some(end) = checked(&mut r, "end_b", endb_module(&dec))? {
        r.dim("M", end.module.dim());
        r.dim("End_B(M)", end.end_b.dim());
        r.merge("end_b", end.report);
    }
    Ok(r)
}

fn duality_cm(b: &Bundle) -> Result<Report> {
    let mut r = Report::new("duality cm", b.field.to_string());
    let group = group_of_grouplikes(&b.require_hopf()?)?;
    let Some((g, unit_a)) = duality_input(b, &mut r)? else {
        return Ok(r);
    };
    let Some(cm) = checked(&mut r, "cm", cohen_montgomery_group(&g, &unit_a, &group))? else {
        return Ok(r);
    };
    for (k, v) in &cm.dims {
        r.dim(k, *v);
    }
    r.dim("B", g.carrier().dim());
    r.dim("ideal_eEe", cm.decomposition.ideal_plus.dim());
    r.dim("ideal_eFe", cm.decomposition.ideal_kernel.dim());
    r.dim("kernel", cm.decomposition.kernel.dim());
    r.vector("unit_a", &unit_a);
    r.vector("E", &cm.decomposition.iso.big_e);
    r.vector("F", &cm.decomposition.iso.big_f);
    r.vector("e", &cm.decomposition.iso.e);
    r.basis("kernel", cm.decomposition.kernel.basis());
    for (label, v) in group.labels().iter().zip(&cm.ideals.one_g) {
        r.vector(&format!("1_{label}"), v);
    }
    for (formula, matches) in &cm.printed_e {
        r.values.insert(format!("E = {formula}"), matches.to_string());
    }
    r.merge("cm", cm.report);
    Ok(r)
}

fn convert(b: &Bundle) -> Result<Report> {
    let mut r = Report::new("convert", b.field.to_string());
    let out = if b.partial_coaction.is_some() {
        let c = b.partial_coaction_data()?;
        let Some(a) = checked(&mut r, "to_action", coaction_to_action(&c))? else {
            return Ok(r);
        };
        r.merge("partial_action", verify_partial_action(&a));
        let back = action_to_coaction(&a, c.hopf())?;
        r.checks.push(round_trip(back.coaction() == c.coaction()));
        Bundle::new(b.field).with_action(&a, true)
    } else if b.global_coaction.is_some() {
        let c = b.global_coaction_data()?;
        let Some(a) = checked(&mut r, "to_action", coaction_to_action(&c))? else {
            return Ok(r);
        };
        r.merge("global_action", verify_global_action(&a));
        let back = action_to_coaction(&a, c.hopf())?;
        r.checks.push(round_trip(back.coaction() == c.coaction()));
        Bundle::new(b.field).with_action(&a, false)
    } else if b.partial_action.is_some() {
        let a = b.partial_action_data()?;
        let dual = dual_hopf(a.hopf())?;
        let Some(c) = checked(&mut r, "to_coaction", action_to_coaction(&a, &dual))? else {
            return Ok(r);
        };
        r.merge("partial_coaction", verify_partial_coaction(&c));
        let back = coaction_to_action(&c)?;
        r.checks.push(round_trip(back.action() == a.action()));
        Bundle::new(b.field).with_coaction(&c, true)
    } else if b.global_action.is_some() {
        let a = b.global_action_data()?;
        let dual = dual_hopf(a.hopf())?;
        let Some(c) = checked(&mut r, "to_coaction", action_to_coaction(&a, &dual))? else {
            return Ok(r);
        };
        r.merge("global_coaction", verify_global_coaction(&c));
        let back = coaction_to_action(&c)?;
        r.checks.push(round_trip(back.action() == a.action()));
        Bundle::new(b.field).with_coaction(&c, false)
    } else {
        return Err(Error::Shape("missing key: one of `partial_coaction`, `global_coaction`, `partial_action`, `global_action`".into()).into());
    };
    r.dim("A", b.require_algebra()?.dim());
    r.dim("H", b.require_hopf()?.dim());
    r.bundle = Some(out.to_file());
    Ok(r)
}

fn round_trip(ok: bool) -> hpa_core::Check {
    hpa_core::Check {
        name: "round_trip".into(),
        passed: ok,
        detail: (!ok).then(|| "converting back changed the tensor".into()),
    }
}

fn examples_run(id: &str, field: Field) -> Result<Report> {
    let run = run_example(id, field)?;
    let mut r = Report::new(format!("examples run --id {}", run.id), field.to_string());
    r.dims = run.dims;
    r.values = run.values;
    r.merge("", run.report);
    Ok(r)
}
