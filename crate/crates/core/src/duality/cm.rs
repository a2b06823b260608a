//! The group case: `Φ̂: (B # kG) # kG* → M_n(B)`, the ideals `D̂_g = B 1_g`
//! and the matrix algebra `S(M)`.

use std::collections::BTreeMap;

use crate::algcore::{check_isomorphism, AlgebraData, LinearMapData};
use crate::catalog::{group_algebra, GroupTable};
use crate::error::{Error, Result};
use crate::exactlin::{is_closed, vector, Matrix, Scalar, Subspace, Vector};
use crate::partial::{unital_right_ideal, GlobalActionData};
use crate::report::VerificationReport;

use super::bm::{bm_decomposition, BmDecomposition};
use super::endb::{intertwiners, restrict_operator};

/// `1_g = g ▷ 1_A` and `D̂_g = B 1_g`, indexed like the group table.
#[derive(Clone, Debug)]
pub struct IdealFamily {
    pub group: GroupTable,
    pub one_g: Vec<Vector>,
    pub dhat: Vec<Subspace>,
}

impl IdealFamily {
    /// `D_g = D̂_1 D̂_g`, the ideals of the partial action.
    pub fn partial_domain(&self, b: &AlgebraData, g: usize) -> Subspace {
        b.product_span(&self.dhat[self.group.identity()], &self.dhat[g])
    }
}

#[derive(Clone, Debug)]
pub struct CohenMontgomery {
    pub decomposition: BmDecomposition,
    pub phi_hat: LinearMapData,
    pub ideals: IdealFamily,
    /// `S(M)` inside `M_n(B)`.
    pub s_m: Subspace,
    pub s_m_algebra: AlgebraData,
    /// Whether each printed formula for `E` agrees with `Φ̂⁻¹(1_A I)`.
    pub printed_e: BTreeMap<String, bool>,
    pub dims: BTreeMap<String, usize>,
    pub report: VerificationReport,
}

pub fn cohen_montgomery_group(b: &GlobalActionData, unit_a: &[Scalar], g: &GroupTable) -> Result<CohenMontgomery> {
    let algebra = b.carrier();
    let field = algebra.field();
    let n = g.order();
    if !b.hopf().same_structure(&group_algebra(g, field)) {
        return Err(Error::Precondition(format!("acting Hopf algebra is not k{g}")));
    }
    let one_g: Vec<Vector> = (0..n).map(|x| b.act_basis(x, unit_a)).collect();
    for (x, v) in one_g.iter().enumerate() {
        if !algebra.is_central(v) || !algebra.is_idempotent(v) {
            return Err(Error::NonCentralIdempotent(format!("1_{} = {}", g.labels()[x], algebra.format(v))));
        }
    }
    let dhat: Vec<Subspace> = one_g.iter().map(|v| algebra.right_multiple_span(v)).collect();
    let ideals = IdealFamily { group: g.clone(), one_g, dhat };

    let dec = bm_decomposition(b, unit_a)?;
    let iso = &dec.iso;
    let ds = &iso.double_smash;
    let target = &iso.target;
    let d = algebra.dim();
    let matrix_unit = |r: usize, c: usize| vector::unit_vector(field, n * n, r * n + c);

    let mut phi_hat = Matrix::zeros(d * n * n, d * n * n);
    for s in 0..d {
        for x in 0..n {
            for h in 0..n {
                let gh = g.mul(x, h);
                let moved = b.act_basis(g.inverse(gh), &algebra.basis_vector(s));
                let col = vector::kron(&moved, &matrix_unit(gh, h));
                for (r, v) in col.into_iter().enumerate() {
                    phi_hat.set(r, (s * n + x) * n + h, v);
                }
            }
        }
    }
    let phi_hat = LinearMapData::new(phi_hat);
    let mut report = VerificationReport::new();
    report.merge("phi_hat", check_isomorphism(&phi_hat, ds, target));
    report.expect("phi_hat_is_bm_phi", phi_hat == iso.phi, || "Φ̂ differs from Φ under b ⊗ e_{r,c} ↦ b E_{r,c}".into());

    // E = Φ̂⁻¹(1_A I) and the two printed candidates
    let identity = vector::kron(unit_a, &crate::algcore::matrix_to_end_element(&Matrix::identity(field, n)));
    let e_hat = phi_hat.matrix().solve(&identity).ok_or(Error::SingularMatrix { rank: phi_hat.rank(), size: ds.dim() })?;
    report.expect("E_from_phi_hat_matches_psi", e_hat == iso.big_e, || "Φ̂⁻¹(1_A I) != Ψ(1_A ⊗ I)".into());
    let one_h = b.hopf().unit();
    let printed = |partial: bool| {
        let mut v = vector::zeros(ds.dim());
        for k in 0..n {
            let mut coeff = ideals.one_g[k].clone();
            if partial {
                coeff = algebra.mul(unit_a, &coeff);
            }
            let term = vector::kron(&vector::kron(&coeff, one_h), &vector::unit_vector(field, n, k));
            v = vector::add(&v, &term);
        }
        v
    };
    let mut printed_e = BTreeMap::new();
    printed_e.insert("sum_k (k ▷ 1_A) # 1 # p_k".to_string(), printed(false) == e_hat);
    printed_e.insert("sum_k (k · 1_A) # 1 # p_k".to_string(), printed(true) == e_hat);

    // D̂_g D̂_h = B 1_g 1_h = D̂_g ∩ D̂_h
    let bad = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| {
        let prod = algebra.product_span(&ideals.dhat[x], &ideals.dhat[y]);
        let generated = algebra.right_multiple_span(&algebra.mul(&ideals.one_g[x], &ideals.one_g[y]));
        let meet = ideals.dhat[x].intersect(&ideals.dhat[y]).expect("same ambient");
        prod != generated || prod != meet
    });
    report.expect("ideal_products", bad.is_none(), || {
        let (x, y) = bad.unwrap();
        format!("D̂_g D̂_h != B 1_g 1_h at ({}, {})", g.labels()[x], g.labels()[y])
    });

    // S(M) = {(a_{g,h}) : a_{g,h} ∈ D̂_{g⁻¹} D̂_{h⁻¹}}
    let mut s_vectors = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let block = algebra.product_span(&ideals.dhat[g.inverse(x)], &ideals.dhat[g.inverse(y)]);
            for v in block.basis() {
                s_vectors.push(vector::kron(v, &matrix_unit(x, y)));
            }
        }
    }
    let s_m = Subspace::span(&s_vectors, target.dim())?;
    report.expect("s_m_subalgebra", is_closed(&s_m, target.mult()), || "S(M) is not closed under products".into());
    let s_m_algebra = target.restrict(&s_m, (0..s_m.dim()).map(|i| format!("s{i}")).collect())?;
    let x_space = &dec.partial_double_smash;
    let image = x_space.map(phi_hat.matrix())?;
    report.expect("partial_double_smash_onto_s_m", image == s_m, || {
        format!("Φ̂(e(B#kG#kG*)e) has dim {}, S(M) has dim {}", image.dim(), s_m.dim())
    });

    // Φ̂(eEe x) = Σ (h⁻¹ · (g⁻¹ · a)) E_{gh,h} on x = a(g · 1_A) # g # p_h
    let a_space = unital_right_ideal(algebra, unit_a)?;
    let partial = |k: usize, y: &[Scalar]| algebra.mul(unit_a, &b.act_basis(k, y));
    let cut = target.left_mult(&vector::kron(unit_a, &crate::algcore::matrix_to_end_element(&Matrix::identity(field, n))));
    let mut formula_ok = true;
    let mut tilde_ok = true;
    let mut in_x = true;
    for a in a_space.basis() {
        for x in 0..n {
            for h in 0..n {
                let coeff = algebra.mul(a, &partial(x, unit_a));
                let elem = vector::kron(&vector::kron(&coeff, &b.hopf().basis_vector(x)), &vector::unit_vector(field, n, h));
                in_x &= x_space.contains(&elem)?;
                let gh = g.mul(x, h);
                let expected = vector::kron(&partial(g.inverse(h), &partial(g.inverse(x), a)), &matrix_unit(gh, h));
                formula_ok &= phi_hat.apply(&ds.mul(&dec.eee, &elem)) == expected;
                tilde_ok &= cut.mul_vec(&phi_hat.apply(&elem)) == expected;
            }
        }
    }
    report.expect("generators_in_partial_double_smash", in_x, || "a(g · 1_A) # g # p_h leaves e(B#kG#kG*)e".into());
    report.expect("e_image_formula", formula_ok, || "Φ̂(eEe x) != Σ (h⁻¹ · (g⁻¹ · a)) E_{gh,h}".into());
    report.expect("phi_tilde_formula", tilde_ok, || "(1_A I)Φ̂(x) != Σ (h⁻¹ · (g⁻¹ · a)) E_{gh,h}".into());

    // Hom_B(D̂_g, D̂_h) ≅ D̂_g D̂_h by f ↦ f(1_g)
    let right: Vec<Matrix> = (0..d).map(|t| algebra.right_mult(&algebra.basis_vector(t))).collect();
    let on_ideal: Vec<Vec<Matrix>> = ideals
        .dhat
        .iter()
        .map(|s| right.iter().map(|r| restrict_operator(r, s).expect("ideals are right B-stable")).collect())
        .collect();
    let homs: Vec<Vec<Subspace>> = (0..n)
        .map(|x| (0..n).map(|y| intertwiners(field, &on_ideal[x], &on_ideal[y], ideals.dhat[x].dim(), ideals.dhat[y].dim())).collect())
        .collect();
    let as_matrix = |v: &[Scalar], rows: usize, cols: usize| Matrix::from_fn(rows, cols, |r, c| v[r * cols + c].clone());
    let evaluate = |x: usize, y: usize, f: &[Scalar]| -> Vector {
        let (dx, dy) = (ideals.dhat[x].dim(), ideals.dhat[y].dim());
        let unit_coords = ideals.dhat[x].coordinates(&ideals.one_g[x]).expect("1_g ∈ D̂_g");
        ideals.dhat[y].element(&as_matrix(f, dy, dx).mul_vec(&unit_coords))
    };
    let mut hom_dims_ok = true;
    let mut evaluation_ok = true;
    for x in 0..n {
        for y in 0..n {
            let product = algebra.product_span(&ideals.dhat[x], &ideals.dhat[y]);
            hom_dims_ok &= homs[x][y].dim() == product.dim();
            let values: Vec<Vector> = homs[x][y].basis().iter().map(|f| evaluate(x, y, f)).collect();
            let span = Subspace::span(&values, d)?;
            evaluation_ok &= span == product && span.dim() == homs[x][y].dim();
        }
    }
    report.expect("hom_dims", hom_dims_ok, || "dim Hom_B(D̂_g, D̂_h) != dim D̂_g D̂_h for some pair".into());
    report.expect("evaluation_at_unit", evaluation_ok, || "f ↦ f(1_g) is not onto D̂_g D̂_h".into());
    let mut composition_ok = true;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (dx, dy, dz) = (ideals.dhat[x].dim(), ideals.dhat[y].dim(), ideals.dhat[z].dim());
                for f in homs[x][y].basis() {
                    for f2 in homs[y][z].basis() {
                        let composite = as_matrix(f2, dz, dy).mul(&as_matrix(f, dy, dx));
                        let composite = crate::algcore::matrix_to_end_element(&composite);
                        let left = evaluate(x, z, &composite);
                        let right = algebra.mul(&evaluate(y, z, f2), &evaluate(x, y, f));
                        composition_ok &= left == right;
                    }
                }
            }
        }
    }
    report.expect("evaluation_composition", composition_ok, || "(f'∘f)(1_g) != f'(1_h) f(1_g)".into());

    // End_B(⊕ D̂_g) as the commutant of the block-diagonal right multiplications
    let total: usize = ideals.dhat.iter().map(|s| s.dim()).sum();
    let block_diag: Vec<Matrix> = (0..d)
        .map(|t| {
            let mut m = Matrix::zeros(total, total);
            let mut offset = 0;
            for blocks in &on_ideal {
                let r = &blocks[t];
                for i in 0..r.rows() {
                    for j in 0..r.cols() {
                        m.set(offset + i, offset + j, r.get(i, j).clone());
                    }
                }
                offset += r.rows();
            }
            m
        })
        .collect();
    let end_b_m = intertwiners(field, &block_diag, &block_diag, total, total);
    let l_m: usize = homs.iter().flatten().map(|s| s.dim()).sum();
    let mut dims = BTreeMap::new();
    dims.insert("double_smash".to_string(), ds.dim());
    dims.insert("partial_double_smash".to_string(), x_space.dim());
    dims.insert("s_m".to_string(), s_m.dim());
    dims.insert("l_m".to_string(), l_m);
    dims.insert("end_b_m".to_string(), end_b_m.dim());
    let all_equal = [s_m.dim(), l_m, end_b_m.dim()].iter().all(|&v| v == x_space.dim());
    report.expect("dims_agree", all_equal, || format!("{dims:?}"));

    Ok(CohenMontgomery { decomposition: dec, phi_hat, ideals, s_m, s_m_algebra, printed_e, dims, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::translation_action;
    use crate::exactlin::Field;

    #[test]
    fn swap_strict_partial() {
        let q = Field::Rational;
        let g = GroupTable::cyclic(2).unwrap();
        let b = translation_action(&g, q);
        let cm = cohen_montgomery_group(&b, &vector::unit_vector(q, 2, 0), &g).unwrap();
        assert!(cm.report.all_passed(), "{}", cm.report);
        assert_eq!(cm.dims["double_smash"], 8);
        assert_eq!(cm.dims["s_m"], 2);
        assert!(cm.printed_e["sum_k (k ▷ 1_A) # 1 # p_k"]);
        assert!(!cm.printed_e["sum_k (k · 1_A) # 1 # p_k"]);
    }
}
