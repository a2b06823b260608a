//! The partial double smash product as `End_B(M)`, `M = Φ(e)(B ⊗ H)`.

use crate::algcore::{check_isomorphism, end_algebra, matrix_to_end_element, AlgebraData, LinearMapData};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Subspace, Vector};
use crate::report::VerificationReport;

use super::bm::BmDecomposition;

/// Linear maps `T: k^a → k^b` with `T A_i = B_i T` for each pair of generators,
/// as a subspace of `k^{b·a}` (entry `(r, c)` at index `r·a + c`).
pub fn intertwiners(field: Field, sources: &[Matrix], targets: &[Matrix], a: usize, b: usize) -> Subspace {
    let mut rows: Vec<Vector> = Vec::new();
    for (src, tgt) in sources.iter().zip(targets) {
        for r in 0..b {
            for c in 0..a {
                let mut row = vec![Scalar::zero(); b * a];
                for k in 0..a {
                    row[r * a + k] += src.get(k, c);
                }
                for k in 0..b {
                    let t = tgt.get(r, k);
                    if !t.is_zero() {
                        row[k * a + c] += &(&field.from_int(-1) * t);
                    }
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Subspace::full(field, a * b);
    }
    Matrix::from_rows(rows, a * b).expect("rows have equal length").kernel()
}

/// The matrix of `op` on an invariant subspace, in its coordinates.
pub fn restrict_operator(op: &Matrix, s: &Subspace) -> Option<Matrix> {
    let cols: Option<Vec<Vector>> = s.basis().iter().map(|v| s.coordinates(&op.mul_vec(v))).collect();
    Some(Matrix::from_columns(&cols?, s.dim()).expect("coordinates have subspace length"))
}

#[derive(Clone, Debug)]
pub struct EndBRealization {
    /// `M` inside `B ⊗ H` (index `s·n + k`).
    pub module: Subspace,
    /// `End_B(M)` inside `End(k^m)` on `M`'s coordinates.
    pub commutant: Subspace,
    pub end_b: AlgebraData,
    /// `v ↦ η(Φ(v))|_M`, from the partial double smash to `End_B(M)`.
    pub iso: LinearMapData,
    pub report: VerificationReport,
}

pub fn endb_module(dec: &BmDecomposition) -> Result<EndBRealization> {
    let iso = &dec.iso;
    let b = iso.source.carrier();
    let field = b.field();
    let n = iso.hopf_dim();
    let projector = iso.eta(&iso.phi.apply(&iso.e));
    let module = projector.image();
    let identity_h = Matrix::identity(field, n);
    let right: Vec<Matrix> = (0..b.dim()).map(|t| b.right_mult(&b.basis_vector(t)).kron(&identity_h)).collect();
    let restricted: Option<Vec<Matrix>> = right.iter().map(|r| restrict_operator(r, &module)).collect();
    let restricted = restricted.ok_or_else(|| Error::VerificationFailed {
        what: "End_B(M)".into(),
        detail: "M is not closed under right multiplication by B".into(),
    })?;
    let m = module.dim();
    let commutant = intertwiners(field, &restricted, &restricted, m, m);
    let labels = (0..commutant.dim()).map(|i| format!("t{i}")).collect();
    let end_b = end_algebra(field, m).restrict(&commutant, labels)?;

    let mut images = Vec::with_capacity(dec.partial_double_smash.dim());
    for v in dec.partial_double_smash.basis() {
        let op = iso.eta(&iso.phi.apply(v));
        let on_m = restrict_operator(&op, &module).ok_or_else(|| Error::VerificationFailed {
            what: "End_B(M)".into(),
            detail: "Φ(v) does not preserve M".into(),
        })?;
        let coords = commutant.coordinates(&matrix_to_end_element(&on_m)).ok_or_else(|| Error::VerificationFailed {
            what: "End_B(M)".into(),
            detail: "Φ(v) is not B-linear on M".into(),
        })?;
        images.push(coords);
    }
    let map = LinearMapData::from_images(&images, commutant.dim())?;

    let mut report = VerificationReport::new();
    report.pass("module_right_stable");
    report.expect("dims", commutant.dim() == dec.partial_double_smash.dim(), || {
        format!("dim End_B(M) = {}, partial double smash = {}", commutant.dim(), dec.partial_double_smash.dim())
    });
    report.merge("restriction", check_isomorphism(&map, &dec.structure, &end_b));
    Ok(EndBRealization { module, commutant, end_b, iso: map, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{translation_action, GroupTable};
    use crate::duality::bm_decomposition;
    use crate::exactlin::vector;

    #[test]
    fn global_case_is_free_module() {
        let q = Field::Rational;
        let b = translation_action(&GroupTable::cyclic(2).unwrap(), q);
        let one = b.carrier().unit().unwrap().clone();
        let dec = bm_decomposition(&b, &one).unwrap();
        let r = endb_module(&dec).unwrap();
        assert_eq!(r.module.dim(), 4);
        assert_eq!(r.end_b.dim(), 8);
        assert!(r.report.all_passed(), "{}", r.report);
    }

    #[test]
    fn commutant_of_diagonal_is_diagonal() {
        let q = Field::Rational;
        let d = Matrix::from_fn(2, 2, |r, c| if r == c { q.from_int(r as i64 + 1) } else { Scalar::zero() });
        let ds = [d];
        let c = intertwiners(q, &ds, &ds, 2, 2);
        assert_eq!(c.dim(), 2);
        assert!(c.contains(&vector::unit_vector(q, 4, 3)).unwrap());
    }
}
