//! Group algebras, their duals, and the Sweedler algebra.

use crate::algcore::{AlgebraData, CoalgebraData, HopfAlgebraData};
use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Scalar};

use super::groups::GroupTable;

/// `kG` with `Δg = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(g: &GroupTable, field: Field) -> HopfAlgebraData {
    let n = g.order();
    let algebra = AlgebraData::from_fn(field, g.labels().to_vec(), Some(vector::unit_vector(field, n, g.identity())), |a, b| {
        vector::unit_vector(field, n, g.mul(a, b))
    })
    .expect("group table shapes agree");
    let coalgebra = CoalgebraData::from_terms(vec![field.one(); n], |a| vec![(a, a, field.one())]).expect("group coalgebra");
    let antipode = Matrix::from_fn(n, n, |r, c| if r == g.inverse(c) { field.one() } else { Scalar::zero() });
    HopfAlgebraData::from_parts(algebra, coalgebra, antipode).expect("inversion is a permutation")
}

/// Reads the group back from a Hopf algebra whose basis is grouplike and
/// closed under multiplication.
pub fn group_of_grouplikes(h: &HopfAlgebraData) -> Result<GroupTable> {
    let n = h.dim();
    let field = h.field();
    for i in 0..n {
        let grouplike = h.comult_terms(i) == vec![(i, i, field.one())] && h.counit()[i] == field.one();
        if !grouplike {
            return Err(Error::Precondition(format!("basis element {} is not grouplike", h.labels()[i])));
        }
    }
    let mut cayley = vec![vec![0; n]; n];
    for (a, row) in cayley.iter_mut().enumerate() {
        for (b, slot) in row.iter_mut().enumerate() {
            let prod = h.mul_basis(a, b);
            *slot = (0..n)
                .find(|&k| prod == vector::unit_vector(field, n, k))
                .ok_or_else(|| Error::Precondition(format!("{} · {} is not a basis element", h.labels()[a], h.labels()[b])))?;
        }
    }
    GroupTable::new("G", h.labels().to_vec(), cayley)
}

/// `kG*` on the basis `p_g`: `p_g p_h = δ_{g,h} p_g`, `Δp_g = Σ_{st=g} p_s ⊗ p_t`.
pub fn function_algebra(g: &GroupTable, field: Field) -> HopfAlgebraData {
    let n = g.order();
    let labels = g.labels().iter().map(|l| format!("p_{l}")).collect();
    let algebra = AlgebraData::from_fn(field, labels, Some(vec![field.one(); n]), |a, b| {
        if a == b {
            vector::unit_vector(field, n, a)
        } else {
            vector::zeros(n)
        }
    })
    .expect("function algebra shapes agree");
    let counit = vector::unit_vector(field, n, g.identity());
    let coalgebra = CoalgebraData::from_terms(counit, |x| {
        (0..n)
            .map(|s| (s, g.mul(g.inverse(s), x), field.one()))
            .collect()
    })
    .expect("function coalgebra");
    let antipode = Matrix::from_fn(n, n, |r, c| if r == g.inverse(c) { field.one() } else { Scalar::zero() });
    HopfAlgebraData::from_parts(algebra, coalgebra, antipode).expect("inversion is a permutation")
}

/// Sweedler's four-dimensional Hopf algebra on `{1, c, x, cx}` with
/// `c² = 1`, `x² = 0`, `xc = −cx`, `Δc = c⊗c`, `Δx = x⊗1 + c⊗x`.
///
/// The antipode is forced by `m(S⊗I)Δ(x) = 0`, which gives `S(x) = −cx`.
pub fn sweedler_h4(field: Field) -> Result<HopfAlgebraData> {
    if field.characteristic() == 2 {
        return Err(Error::BadCharacteristic(2));
    }
    let labels: Vec<String> = ["1", "c", "x", "cx"].iter().map(|s| s.to_string()).collect();
    // basis index a + 2b for c^a x^b
    let algebra = AlgebraData::from_fn(field, labels, Some(vector::unit_vector(field, 4, 0)), |i, j| {
        let (a, b) = (i % 2, i / 2);
        let (a2, b2) = (j % 2, j / 2);
        let mut v = vector::zeros(4);
        if b + b2 < 2 {
            let sign = if b * a2 == 1 { field.from_int(-1) } else { field.one() };
            v[(a + a2) % 2 + 2 * (b + b2)] = sign;
        }
        v
    })?;
    let one = field.one();
    let coalgebra = CoalgebraData::from_terms(vec![one.clone(), one.clone(), Scalar::zero(), Scalar::zero()], |i| {
        let (a, b) = (i % 2, i / 2);
        if b == 0 {
            vec![(a, a, one.clone())]
        } else {
            // (c^a ⊗ c^a)(x ⊗ 1 + c ⊗ x) = c^a x ⊗ c^a + c^{a+1} ⊗ c^a x
            vec![(a + 2, a, one.clone()), ((a + 1) % 2, a + 2, one.clone())]
        }
    })?;
    // S(c) = c, S(x) = -cx, S(cx) = x
    let antipode = Matrix::from_fn(4, 4, |r, c| match (r, c) {
        (0, 0) | (1, 1) | (2, 3) => field.one(),
        (3, 2) => field.from_int(-1),
        _ => Scalar::zero(),
    });
    HopfAlgebraData::from_parts(algebra, coalgebra, antipode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::{dual_hopf, verify_structure};

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn group_algebras_verify() {
        for g in [GroupTable::cyclic(2).unwrap(), GroupTable::cyclic(4).unwrap(), GroupTable::symmetric3()] {
            let h = group_algebra(&g, q());
            assert!(verify_structure(&h).all_passed());
            assert!(verify_structure(&function_algebra(&g, q())).all_passed());
        }
    }

    #[test]
    fn function_algebra_is_dual_of_group_algebra() {
        for g in [GroupTable::cyclic(3).unwrap(), GroupTable::symmetric3()] {
            let dual = dual_hopf(&group_algebra(&g, q())).unwrap();
            assert!(dual.same_structure(&function_algebra(&g, q())));
        }
    }

    #[test]
    fn z4_antipode_is_inversion() {
        let h = group_algebra(&GroupTable::cyclic(4).unwrap(), q());
        assert_eq!(h.antipode().column(1), vector::unit_vector(q(), 4, 3));
    }

    #[test]
    fn sweedler_relations() {
        let h = sweedler_h4(q()).unwrap();
        assert!(verify_structure(&h).all_passed(), "{}", verify_structure(&h));
        let minus = q().from_int(-1);
        // xc = -cx
        assert_eq!(h.mul_basis(2, 1), vector::scale(&minus, &h.basis_vector(3)));
        // Δ(cx) = cx⊗c + 1⊗cx
        let mut terms = h.comult_terms(3);
        terms.sort_by_key(|t| (t.0, t.1));
        assert_eq!(terms, vec![(0, 3, q().one()), (3, 1, q().one())]);
        // S has order 4: S²(x) = -x
        let s2 = h.antipode().mul(h.antipode());
        assert_eq!(s2.column(2), vector::scale(&minus, &h.basis_vector(2)));
        assert_eq!(s2.mul(&s2), Matrix::identity(q(), 4));
        assert_eq!(h.antipode_inverse().mul(h.antipode()), Matrix::identity(q(), 4));
        assert_eq!(h.antipode_inverse().column(2), h.basis_vector(3));
        assert!(h.epsilon(&h.basis_vector(3)).is_zero());
        assert!(matches!(sweedler_h4(Field::prime(2).unwrap()), Err(Error::BadCharacteristic(2))));
    }

    #[test]
    fn broken_antipode_fails_at_x() {
        let h = sweedler_h4(q()).unwrap();
        let bad = HopfAlgebraData::from_parts(h.algebra().clone(), h.coalgebra().clone(), Matrix::identity(q(), 4)).unwrap();
        let r = verify_structure(&bad);
        let check = r.get("antipode").unwrap();
        assert!(!check.passed);
        assert!(check.detail.as_ref().unwrap().ends_with(" x"));
    }
}
