//! Single-file JSON bundles of structure constants.
//!
//! Sparse tensors are lists of `[i, j, k, "c"]` entries; scalars are strings
//! (`"1/2"`, `"-3"`) or integers. The antipode is its matrix in row-major
//! order, so column `i` holds the coordinates of `S(h_i)`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algcore::{AlgebraData, CoalgebraData, HopfAlgebraData};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, StructureTensor, Vector};
use crate::partial::{ActionData, CoactionData, Kind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Int(i64),
    Text(String),
}

impl ScalarText {
    fn parse(&self, field: Field) -> Result<Scalar> {
        match self {
            ScalarText::Int(n) => Ok(field.from_int(*n)),
            ScalarText::Text(t) => field.parse_scalar(t),
        }
    }

    fn from_scalar(s: &Scalar) -> ScalarText {
        ScalarText::Text(s.to_string())
    }
}

pub type Entry = (usize, usize, usize, ScalarText);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub mult: Vec<Entry>,
    #[serde(default)]
    pub unit: Option<Vec<ScalarText>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfSpec {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub mult: Vec<Entry>,
    pub unit: Vec<ScalarText>,
    /// `[i, j, k, c]`: `Δh_i` contains `c h_j ⊗ h_k`.
    pub comult: Vec<Entry>,
    pub counit: Vec<ScalarText>,
    pub antipode: Vec<Vec<ScalarText>>,
}

/// The on-disk form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleFile {
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hopf: Option<HopfSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSpec>,
    /// `[h_i, a_j, a_k, c]`: `h_i · a_j` contains `c a_k`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partial_action: Option<Vec<Entry>>,
    /// `[a_i, a_j, h_k, c]`: `ρ̄(a_i)` contains `c a_j ⊗ h_k`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partial_coaction: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub global_action: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub global_coaction: Option<Vec<Entry>>,
    /// The idempotent `1_A` inside the global carrier, for duality runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit_a: Option<Vec<ScalarText>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub meta: BTreeMap<String, serde_json::Value>,
}

/// Hopf data as loaded: the antipode need not be invertible yet, so that a
/// corrupted bundle can still be verified.
#[derive(Clone, Debug)]
pub struct HopfParts {
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
    pub antipode: Matrix,
}

impl HopfParts {
    pub fn build(&self) -> Result<HopfAlgebraData> {
        HopfAlgebraData::from_parts(self.algebra.clone(), self.coalgebra.clone(), self.antipode.clone())
    }
}

/// A validated bundle: every tensor has the right shape and lies in the field.
#[derive(Clone, Debug)]
pub struct Bundle {
    pub field: Field,
    pub hopf: Option<HopfParts>,
    pub algebra: Option<AlgebraData>,
    pub partial_action: Option<StructureTensor>,
    pub partial_coaction: Option<Matrix>,
    pub global_action: Option<StructureTensor>,
    pub global_coaction: Option<Matrix>,
    pub unit_a: Option<Vector>,
    pub meta: BTreeMap<String, serde_json::Value>,
}

fn parse_vector(v: &[ScalarText], dim: usize, field: Field, what: &str) -> Result<Vector> {
    if v.len() != dim {
        return Err(Error::Shape(format!("{what} has length {}, expected {dim}", v.len())));
    }
    v.iter().map(|s| s.parse(field)).collect()
}

fn parse_tensor(entries: &[Entry], dims: (usize, usize, usize), field: Field, what: &str) -> Result<StructureTensor> {
    let mut t = StructureTensor::new(dims.0, dims.1, dims.2);
    for (i, j, k, c) in entries {
        if *i >= dims.0 || *j >= dims.1 || *k >= dims.2 {
            return Err(Error::Shape(format!("{what} entry [{i}, {j}, {k}] is out of range for {dims:?}")));
        }
        t.add_coefficient(*i, *j, *k, &c.parse(field)?)?;
    }
    Ok(t)
}

fn labels_or_default(labels: &Option<Vec<String>>, dim: usize, prefix: &str, what: &str) -> Result<Vec<String>> {
    match labels {
        Some(l) if l.len() != dim => Err(Error::Shape(format!("{what} has {} labels for dim {dim}", l.len()))),
        Some(l) => Ok(l.clone()),
        None => Ok((0..dim).map(|i| format!("{prefix}{i}")).collect()),
    }
}

fn tensor_entries(t: &StructureTensor) -> Vec<Entry> {
    t.quadruples().into_iter().map(|(i, j, k, c)| (i, j, k, ScalarText::from_scalar(&c))).collect()
}

fn vector_text(v: &[Scalar]) -> Vec<ScalarText> {
    v.iter().map(ScalarText::from_scalar).collect()
}

/// Reads a coaction matrix (`(dA·n) × dA`) from `[a_i, a_j, h_k, c]` entries.
fn coaction_matrix(entries: &[Entry], a: usize, n: usize, field: Field, what: &str) -> Result<Matrix> {
    let t = parse_tensor(entries, (a, a, n), field, what)?;
    let mut m = Matrix::zeros(a * n, a);
    for (i, j, k, c) in t.quadruples() {
        m.set(j * n + k, i, c);
    }
    Ok(m)
}

fn coaction_entries(m: &Matrix, n: usize) -> Vec<Entry> {
    let mut out = Vec::new();
    for i in 0..m.cols() {
        for r in 0..m.rows() {
            let c = m.get(r, i);
            if !c.is_zero() {
                out.push((i, r / n, r % n, ScalarText::from_scalar(c)));
            }
        }
    }
    out
}

impl Bundle {
    pub fn new(field: Field) -> Bundle {
        Bundle {
            field,
            hopf: None,
            algebra: None,
            partial_action: None,
            partial_coaction: None,
            global_action: None,
            global_coaction: None,
            unit_a: None,
            meta: BTreeMap::new(),
        }
    }

    pub fn load(path: &Path) -> Result<Bundle> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Bundle::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Bundle> {
        let file: BundleFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Bundle::from_file(&file)
    }

    pub fn from_file(file: &BundleFile) -> Result<Bundle> {
        let field: Field = file.field.parse()?;
        let mut bundle = Bundle::new(field);
        bundle.meta = file.meta.clone();
        if let Some(h) = &file.hopf {
            let n = h.dim;
            let labels = labels_or_default(&h.labels, n, "h", "hopf")?;
            let mult = parse_tensor(&h.mult, (n, n, n), field, "hopf.mult")?;
            let unit = parse_vector(&h.unit, n, field, "hopf.unit")?;
            let algebra = AlgebraData::new(field, labels, mult, Some(unit))?;
            let comult_t = parse_tensor(&h.comult, (n, n, n), field, "hopf.comult")?;
            let mut comult = Matrix::zeros(n * n, n);
            for (i, j, k, c) in comult_t.quadruples() {
                comult.set(j * n + k, i, c);
            }
            let counit = parse_vector(&h.counit, n, field, "hopf.counit")?;
            let coalgebra = CoalgebraData::new(comult, counit)?;
            if h.antipode.len() != n {
                return Err(Error::Shape(format!("hopf.antipode has {} rows, expected {n}", h.antipode.len())));
            }
            let rows: Vec<Vector> =
                h.antipode.iter().enumerate().map(|(i, r)| parse_vector(r, n, field, &format!("hopf.antipode[{i}]"))).collect::<Result<_>>()?;
            let antipode = Matrix::from_rows(rows, n)?;
            bundle.hopf = Some(HopfParts { algebra, coalgebra, antipode });
        }
        if let Some(a) = &file.algebra {
            let d = a.dim;
            let labels = labels_or_default(&a.labels, d, "a", "algebra")?;
            let mult = parse_tensor(&a.mult, (d, d, d), field, "algebra.mult")?;
            let unit = a.unit.as_ref().map(|u| parse_vector(u, d, field, "algebra.unit")).transpose()?;
            bundle.algebra = Some(AlgebraData::new(field, labels, mult, unit)?);
        }
        let dims = || -> Result<(usize, usize)> {
            let n = file.hopf.as_ref().map(|h| h.dim).ok_or_else(|| Error::Shape("missing key `hopf`".into()))?;
            let a = file.algebra.as_ref().map(|a| a.dim).ok_or_else(|| Error::Shape("missing key `algebra`".into()))?;
            Ok((n, a))
        };
        if let Some(entries) = &file.partial_action {
            let (n, a) = dims()?;
            bundle.partial_action = Some(parse_tensor(entries, (n, a, a), field, "partial_action")?);
        }
        if let Some(entries) = &file.global_action {
            let (n, a) = dims()?;
            bundle.global_action = Some(parse_tensor(entries, (n, a, a), field, "global_action")?);
        }
        if let Some(entries) = &file.partial_coaction {
            let (n, a) = dims()?;
            bundle.partial_coaction = Some(coaction_matrix(entries, a, n, field, "partial_coaction")?);
        }
        if let Some(entries) = &file.global_coaction {
            let (n, a) = dims()?;
            bundle.global_coaction = Some(coaction_matrix(entries, a, n, field, "global_coaction")?);
        }
        if let Some(u) = &file.unit_a {
            let a = file.algebra.as_ref().map(|a| a.dim).ok_or_else(|| Error::Shape("missing key `algebra`".into()))?;
            bundle.unit_a = Some(parse_vector(u, a, field, "unit_a")?);
        }
        Ok(bundle)
    }

    pub fn to_file(&self) -> BundleFile {
        let mut file = BundleFile { field: self.field.to_string(), meta: self.meta.clone(), ..BundleFile::default() };
        if let Some(h) = &self.hopf {
            let n = h.algebra.dim();
            let mut comult = Vec::new();
            for i in 0..n {
                for r in 0..n * n {
                    let c = h.coalgebra.comult().get(r, i);
                    if !c.is_zero() {
                        comult.push((i, r / n, r % n, ScalarText::from_scalar(c)));
                    }
                }
            }
            file.hopf = Some(HopfSpec {
                dim: n,
                labels: Some(h.algebra.labels().to_vec()),
                mult: tensor_entries(h.algebra.mult()),
                unit: vector_text(h.algebra.unit().expect("Hopf algebras are unital")),
                comult,
                counit: vector_text(h.coalgebra.counit()),
                antipode: h.antipode.row_vectors().iter().map(|r| vector_text(r)).collect(),
            });
        }
        if let Some(a) = &self.algebra {
            file.algebra = Some(AlgebraSpec {
                dim: a.dim(),
                labels: Some(a.labels().to_vec()),
                mult: tensor_entries(a.mult()),
                unit: a.unit().map(|u| vector_text(u)),
            });
        }
        let n = self.hopf.as_ref().map_or(1, |h| h.algebra.dim());
        file.partial_action = self.partial_action.as_ref().map(tensor_entries);
        file.global_action = self.global_action.as_ref().map(tensor_entries);
        file.partial_coaction = self.partial_coaction.as_ref().map(|m| coaction_entries(m, n));
        file.global_coaction = self.global_coaction.as_ref().map(|m| coaction_entries(m, n));
        file.unit_a = self.unit_a.as_ref().map(|u| vector_text(u));
        file
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("bundle serializes")
    }

    pub fn with_hopf(mut self, h: &HopfAlgebraData) -> Bundle {
        self.hopf = Some(HopfParts { algebra: h.algebra().clone(), coalgebra: h.coalgebra().clone(), antipode: h.antipode().clone() });
        self
    }

    pub fn with_action<K: Kind>(mut self, x: &ActionData<K>, partial: bool) -> Bundle {
        self = self.with_hopf(x.hopf());
        self.algebra = Some(x.carrier().clone());
        if partial {
            self.partial_action = Some(x.action().clone());
        } else {
            self.global_action = Some(x.action().clone());
        }
        self
    }

    pub fn with_coaction<K: Kind>(mut self, x: &CoactionData<K>, partial: bool) -> Bundle {
        self = self.with_hopf(x.hopf());
        self.algebra = Some(x.carrier().clone());
        if partial {
            self.partial_coaction = Some(x.coaction().clone());
        } else {
            self.global_coaction = Some(x.coaction().clone());
        }
        self
    }

    pub fn require_hopf(&self) -> Result<HopfAlgebraData> {
        self.hopf.as_ref().ok_or_else(|| Error::Shape("missing key `hopf`".into()))?.build()
    }

    pub fn require_algebra(&self) -> Result<&AlgebraData> {
        self.algebra.as_ref().ok_or_else(|| Error::Shape("missing key `algebra`".into()))
    }

    fn action<K: Kind>(&self, t: &Option<StructureTensor>, key: &str) -> Result<ActionData<K>> {
        let t = t.as_ref().ok_or_else(|| Error::Shape(format!("missing key `{key}`")))?;
        ActionData::new(self.require_hopf()?, self.require_algebra()?.clone(), t.clone())
    }

    fn coaction<K: Kind>(&self, m: &Option<Matrix>, key: &str) -> Result<CoactionData<K>> {
        let m = m.as_ref().ok_or_else(|| Error::Shape(format!("missing key `{key}`")))?;
        CoactionData::new(self.require_hopf()?, self.require_algebra()?.clone(), m.clone())
    }

    /// Shape-checked only; run the verifier before trusting it.
    pub fn partial_action_data(&self) -> Result<crate::partial::PartialActionData> {
        self.action(&self.partial_action, "partial_action")
    }

    pub fn global_action_data(&self) -> Result<crate::partial::GlobalActionData> {
        self.action(&self.global_action, "global_action")
    }

    pub fn partial_coaction_data(&self) -> Result<crate::partial::PartialCoactionData> {
        self.coaction(&self.partial_coaction, "partial_coaction")
    }

    pub fn global_coaction_data(&self) -> Result<crate::partial::GlobalCoactionData> {
        self.coaction(&self.global_coaction, "global_coaction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{example3, sweedler_h4};

    #[test]
    fn round_trip_preserves_structure() {
        let q = Field::Rational;
        let fx = example3(q).unwrap();
        let bundle = Bundle::new(q).with_coaction(fx.coaction().unwrap(), true);
        let again = Bundle::from_json(&bundle.to_json()).unwrap();
        assert!(again.require_hopf().unwrap().same_structure(&sweedler_h4(q).unwrap()));
        assert_eq!(again.partial_coaction_data().unwrap().coaction(), fx.coaction().unwrap().coaction());
        assert_eq!(again.to_json(), bundle.to_json());
    }

    #[test]
    fn zero_denominator_is_a_parse_error() {
        let text = r#"{"field": "q", "algebra": {"dim": 1, "mult": [[0, 0, 0, "1/0"]], "unit": ["1"]}}"#;
        assert!(matches!(Bundle::from_json(text), Err(Error::Parse(_))));
    }

    #[test]
    fn missing_component_names_the_key() {
        let text = r#"{"field": "q", "algebra": {"dim": 1, "mult": [[0, 0, 0, 1]], "unit": [1]}}"#;
        let b = Bundle::from_json(text).unwrap();
        match b.partial_action_data() {
            Err(Error::Shape(msg)) => assert!(msg.contains("partial_action")),
            other => panic!("unexpected {other:?}"),
        }
    }
}
