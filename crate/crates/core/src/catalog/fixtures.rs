//! The worked examples and small derived fixtures, addressable by id.

use std::fmt;
use std::str::FromStr;

use crate::algcore::{AlgebraData, HopfAlgebraData, LinearMapData};
use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Scalar, Subspace, Vector};
use crate::partial::{GlobalActionData, GlobalCoactionData, PartialActionData, PartialCoactionData};

use super::groups::GroupTable;
use super::hopf::{group_algebra, sweedler_h4};

/// Parsed fixture identifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixtureId {
    /// `example1:<group>:<normal subgroup>`
    Example1 { group: String, subgroup: String },
    /// `example2:<alpha>`
    Example2 { alpha: String },
    /// `example3`
    Example3,
    /// `scalar:<group>:<subset>`
    Scalar { group: String, subset: String },
}

impl FromStr for FixtureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<FixtureId> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["example1", g, n] => Ok(FixtureId::Example1 { group: g.to_string(), subgroup: n.to_string() }),
            ["example2", a] => Ok(FixtureId::Example2 { alpha: a.to_string() }),
            ["example3"] => Ok(FixtureId::Example3),
            ["scalar", g, s] => Ok(FixtureId::Scalar { group: g.to_string(), subset: s.to_string() }),
            _ => Err(Error::Parse(format!("unknown fixture id {s:?}"))),
        }
    }
}

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureId::Example1 { group, subgroup } => write!(f, "example1:{group}:{subgroup}"),
            FixtureId::Example2 { alpha } => write!(f, "example2:{alpha}"),
            FixtureId::Example3 => f.write_str("example3"),
            FixtureId::Scalar { group, subset } => write!(f, "scalar:{group}:{subset}"),
        }
    }
}

/// Ids listed by `examples list`.
pub const FIXTURE_IDS: &[&str] = &[
    "example1:Z4:0,2",
    "example1:S3:A3",
    "example2:0",
    "example2:1",
    "example2:2",
    "example3",
    "scalar:Z2:0",
    "scalar:Z3:0",
];

/// How an expected value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Stated in the published example.
    Published,
    /// Worked out independently by hand.
    Derived,
    /// Immediate from the definitions.
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub name: &'static str,
    pub value: String,
    pub origin: Origin,
}

/// The (co)action carried by a fixture.
#[derive(Clone, Debug)]
pub enum FixtureStructure {
    PartialCoaction(PartialCoactionData),
    PartialAction(PartialActionData),
}

#[derive(Clone, Debug)]
pub struct ExampleFixture {
    pub id: FixtureId,
    pub hopf: HopfAlgebraData,
    pub carrier: AlgebraData,
    pub structure: FixtureStructure,
    pub expected: Vec<Expected>,
}

impl ExampleFixture {
    pub fn coaction(&self) -> Option<&PartialCoactionData> {
        match &self.structure {
            FixtureStructure::PartialCoaction(c) => Some(c),
            FixtureStructure::PartialAction(_) => None,
        }
    }

    pub fn action(&self) -> Option<&PartialActionData> {
        match &self.structure {
            FixtureStructure::PartialAction(a) => Some(a),
            FixtureStructure::PartialCoaction(_) => None,
        }
    }
}

/// Builds the fixture for `id`.
pub fn fixture(id: &str, field: Field) -> Result<ExampleFixture> {
    match id.parse::<FixtureId>()? {
        FixtureId::Example1 { group, subgroup } => {
            let g: GroupTable = group.parse()?;
            let n = g.parse_subset(&subgroup)?;
            example1(&g, &n, field)
        }
        FixtureId::Example2 { alpha } => example2(field.parse_scalar(&alpha)?, field),
        FixtureId::Example3 => example3(field),
        FixtureId::Scalar { group, subset } => {
            let g: GroupTable = group.parse()?;
            let s = g.parse_subset(&subset)?;
            scalar_partial(&g, &s, field)
        }
    }
}

fn expected(name: &'static str, value: impl ToString, origin: Origin) -> Expected {
    Expected { name, value: value.to_string(), origin }
}

/// `e_N = (1/|N|) Σ_{n∈N} n` in `kG`.
pub fn subgroup_idempotent(g: &GroupTable, n: &[usize], field: Field) -> Result<Vector> {
    let size = i64::try_from(n.len()).map_err(|_| Error::Precondition("subgroup too large".into()))?;
    let inv = field.ratio(1, size).map_err(|_| Error::Precondition(format!("characteristic divides |N| = {size}")))?;
    let mut v = vector::zeros(g.order());
    for &x in n {
        v[x] = inv.clone();
    }
    Ok(v)
}

/// Carrier `A = e_N kG` on the basis `e_N t`, one per coset `Nt`.
fn example1_carrier(g: &GroupTable, n: &[usize], field: Field) -> (AlgebraData, Vec<Vec<usize>>) {
    let cosets = g.cosets(n);
    let coset_of = |x: usize| cosets.iter().position(|c| c.contains(&x)).expect("cosets partition G");
    let labels = cosets.iter().map(|c| format!("eN{}", g.labels()[c[0]])).collect();
    let m = cosets.len();
    let carrier = AlgebraData::from_fn(field, labels, Some(vector::unit_vector(field, m, coset_of(g.identity()))), |i, j| {
        vector::unit_vector(field, m, coset_of(g.mul(cosets[i][0], cosets[j][0])))
    })
    .expect("coset algebra shapes agree");
    (carrier, cosets)
}

/// `A = e_N kG` with `ρ̄(e_N g) = e_N g ⊗ e_N g`.
pub fn example1(g: &GroupTable, n: &[usize], field: Field) -> Result<ExampleFixture> {
    if !g.is_normal(n) {
        return Err(Error::Precondition(format!("{n:?} is not a normal subgroup of {g}")));
    }
    let e_n = subgroup_idempotent(g, n, field)?;
    let hopf = group_algebra(g, field);
    let (carrier, cosets) = example1_carrier(g, n, field);
    let order = g.order();
    let coaction = PartialCoactionData::from_fn(hopf.clone(), carrier.clone(), |i| {
        // e_N t = (1/|N|) Σ_{x ∈ Nt} x
        let mut v = vector::zeros(cosets.len() * order);
        for &x in &cosets[i] {
            v[i * order + x] = e_n[n[0]].clone();
        }
        v
    })?;
    crate::partial::verify_partial_coaction(&coaction).into_result("example1 coaction")?;
    let id = FixtureId::Example1 { group: g.name().to_string(), subgroup: subset_text(g, n) };
    Ok(ExampleFixture {
        id,
        hopf,
        carrier,
        structure: FixtureStructure::PartialCoaction(coaction),
        expected: vec![
            expected("dim A", cosets.len(), Origin::Derived),
            expected("dim B", order, Origin::Published),
        ],
    })
}

fn subset_text(g: &GroupTable, n: &[usize]) -> String {
    if g.name() == "S3" && n == [0, 3, 4] {
        "A3".to_string()
    } else {
        n.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// The embedding `A = e_N kG → kG`, `e_N t ↦ e_N t`.
pub fn example1_embedding(g: &GroupTable, n: &[usize], field: Field) -> Result<LinearMapData> {
    let e_n = subgroup_idempotent(g, n, field)?;
    let cosets = g.cosets(n);
    let images: Vec<Vector> = cosets
        .iter()
        .map(|c| {
            let mut v = vector::zeros(g.order());
            for &x in c {
                v[x] = e_n[n[0]].clone();
            }
            v
        })
        .collect();
    LinearMapData::from_images(&images, g.order())
}

/// `Φ(v) = (e_N ⊗ 1)Δv` from `kG` into `A ⊗ kG`: `g ↦ e_N g ⊗ g`.
pub fn example1_phi(g: &GroupTable, n: &[usize], field: Field) -> LinearMapData {
    let cosets = g.cosets(n);
    let order = g.order();
    let images: Vec<Vector> = (0..order)
        .map(|x| {
            let coset = cosets.iter().position(|c| c.contains(&x)).expect("cosets partition G");
            vector::unit_vector(field, cosets.len() * order, coset * order + x)
        })
        .collect();
    LinearMapData::from_images(&images, cosets.len() * order).expect("shapes agree")
}

/// Candidate globalization of Example 1: the ambient `A ⊗ kG` with `I ⊗ Δ`,
/// `B = Φ(kG)` and `θ = ρ̄`.
pub fn example1_candidate(fixture: &ExampleFixture, g: &GroupTable, n: &[usize]) -> Result<(GlobalCoactionData, Subspace, LinearMapData)> {
    let coaction = fixture
        .coaction()
        .ok_or_else(|| Error::Precondition("example1 fixture carries a coaction".into()))?;
    let field = fixture.hopf.field();
    let ambient = GlobalCoactionData::trivial_on_tensor(&fixture.carrier, &fixture.hopf);
    let phi = example1_phi(g, n, field);
    let b = Subspace::span(&phi.matrix().columns(), ambient.carrier().dim())?;
    let theta = LinearMapData::new(coaction.coaction().clone());
    Ok((ambient, b, theta))
}

/// `f = ½(1 + c + α cx)` in `H4`.
pub fn example2_idempotent(alpha: &Scalar, field: Field) -> Result<Vector> {
    let half = field.ratio(1, 2)?;
    Ok(vec![half.clone(), half.clone(), Scalar::zero(), &half * alpha])
}

/// Carrier `k` with `ρ̄(λ) = λ f`.
pub fn example2(alpha: Scalar, field: Field) -> Result<ExampleFixture> {
    let hopf = sweedler_h4(field)?;
    let f = example2_idempotent(&alpha, field)?;
    let carrier = AlgebraData::from_fn(field, vec!["1".into()], Some(vec![field.one()]), |_, _| vec![field.one()])?;
    let coaction = PartialCoactionData::from_fn(hopf.clone(), carrier.clone(), |_| f.clone())?;
    Ok(ExampleFixture {
        id: FixtureId::Example2 { alpha: alpha.to_string() },
        hopf,
        carrier,
        structure: FixtureStructure::PartialCoaction(coaction),
        expected: vec![
            expected("f", vector::format_with_labels(&f, &["1", "c", "x", "cx"].map(String::from)), Origin::Published),
            expected("dim B", 2, Origin::Published),
        ],
    })
}

/// Carrier `k[x] ⊆ H4` on `{1, x}` with `ρ̄(1) = ½(1⊗1 + 1⊗c + 1⊗cx)` and
/// `ρ̄(x) = (x ⊗ 1)ρ̄(1)`.
pub fn example3(field: Field) -> Result<ExampleFixture> {
    let hopf = sweedler_h4(field)?;
    let half = field.ratio(1, 2)?;
    let carrier = AlgebraData::from_fn(field, vec!["1".into(), "x".into()], Some(vector::unit_vector(field, 2, 0)), |i, j| {
        if i + j < 2 {
            vector::unit_vector(field, 2, i + j)
        } else {
            vector::zeros(2)
        }
    })?;
    let coaction = PartialCoactionData::from_fn(hopf.clone(), carrier.clone(), |i| {
        let mut v = vector::zeros(8);
        for k in [0, 1, 3] {
            v[i * 4 + k] = half.clone();
        }
        v
    })?;
    Ok(ExampleFixture {
        id: FixtureId::Example3,
        hopf,
        carrier,
        structure: FixtureStructure::PartialCoaction(coaction),
        expected: vec![expected("dim B", 4, Origin::Published), expected("dim eB", 2, Origin::Published)],
    })
}

/// Carrier `k` with `g · 1 = [g ∈ S]`.
pub fn scalar_partial(g: &GroupTable, s: &[usize], field: Field) -> Result<ExampleFixture> {
    let hopf = group_algebra(g, field);
    let carrier = AlgebraData::from_fn(field, vec!["1".into()], Some(vec![field.one()]), |_, _| vec![field.one()])?;
    let action = PartialActionData::from_fn(hopf.clone(), carrier.clone(), |h, _| {
        vec![if s.contains(&h) { field.one() } else { Scalar::zero() }]
    })?;
    Ok(ExampleFixture {
        id: FixtureId::Scalar { group: g.name().to_string(), subset: subset_text(g, s) },
        hopf,
        carrier,
        structure: FixtureStructure::PartialAction(action),
        expected: vec![expected("dim B", g.order() / s.len().max(1), Origin::Derived)],
    })
}

/// `kG` acting on functions `k^G` by translation, `g ▷ δ_x = δ_{gx}`:
/// the swap on `k × k` for `Z₂`, cyclic permutation on `k³` for `Z₃`.
pub fn translation_action(g: &GroupTable, field: Field) -> GlobalActionData {
    let n = g.order();
    let hopf = group_algebra(g, field);
    let labels = g.labels().iter().map(|l| format!("d_{l}")).collect();
    let carrier = AlgebraData::from_fn(field, labels, Some(vec![field.one(); n]), |i, j| {
        if i == j {
            vector::unit_vector(field, n, i)
        } else {
            vector::zeros(n)
        }
    })
    .expect("function algebra shapes agree");
    GlobalActionData::verified(
        hopf,
        carrier,
        crate::exactlin::StructureTensor::from_fn(n, n, n, |h, x| vector::unit_vector(field, n, g.mul(h, x))),
    )
    .expect("translation is a module-algebra action")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partial::{verify_partial_action, verify_partial_coaction};

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn ids_roundtrip() {
        for id in FIXTURE_IDS {
            let parsed: FixtureId = id.parse().unwrap();
            assert_eq!(parsed.to_string(), *id);
            let fx = fixture(id, q()).unwrap();
            assert_eq!(fx.id.to_string(), *id);
        }
        assert!("example4".parse::<FixtureId>().is_err());
    }

    #[test]
    fn example1_z4_carrier() {
        let g = GroupTable::cyclic(4).unwrap();
        let e_n = subgroup_idempotent(&g, &[0, 2], q()).unwrap();
        let half = q().ratio(1, 2).unwrap();
        assert_eq!(e_n, vec![half.clone(), Scalar::zero(), half, Scalar::zero()]);
        let fx = example1(&g, &[0, 2], q()).unwrap();
        assert_eq!(fx.carrier.dim(), 2);
        assert!(verify_partial_coaction(fx.coaction().unwrap()).all_passed());
        assert!(example1(&g, &[0, 1], q()).is_err());
    }

    #[test]
    fn example1_needs_invertible_order() {
        let g = GroupTable::cyclic(4).unwrap();
        assert!(example1(&g, &[0, 2], Field::prime(2).unwrap()).is_err());
    }

    #[test]
    fn example2_idempotent_and_valid() {
        for a in [0, 1, 2] {
            let fx = example2(q().from_int(a), q()).unwrap();
            let f = example2_idempotent(&q().from_int(a), q()).unwrap();
            assert!(fx.hopf.algebra().is_idempotent(&f));
            assert!(verify_partial_coaction(fx.coaction().unwrap()).all_passed());
        }
    }

    #[test]
    fn example3_valid() {
        let fx = example3(q()).unwrap();
        let r = verify_partial_coaction(fx.coaction().unwrap());
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn scalar_partial_axioms() {
        let g = GroupTable::cyclic(2).unwrap();
        let fx = scalar_partial(&g, &[0], q()).unwrap();
        assert!(verify_partial_action(fx.action().unwrap()).all_passed());
    }

    #[test]
    fn half_scalar_action_fails_composition() {
        let g = GroupTable::cyclic(2).unwrap();
        let fx = scalar_partial(&g, &[0], q()).unwrap();
        let half = q().ratio(1, 2).unwrap();
        let bad = PartialActionData::from_fn(fx.hopf.clone(), fx.carrier.clone(), |h, _| {
            vec![if h == 0 { q().one() } else { half.clone() }]
        })
        .unwrap();
        let r = verify_partial_action(&bad);
        assert!(!r.passed("composition"));
    }

    #[test]
    fn translation_on_z2_is_swap() {
        let b = translation_action(&GroupTable::cyclic(2).unwrap(), q());
        assert_eq!(b.act_basis(1, &vector::unit_vector(q(), 2, 0)), vector::unit_vector(q(), 2, 1));
    }
}
