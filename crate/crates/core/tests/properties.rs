use hpa_core::algcore::{dual_hopf, verify_structure};
use hpa_core::bundle::Bundle;
use hpa_core::catalog::{fixture, group_algebra, scalar_partial, GroupTable, FIXTURE_IDS};
use hpa_core::duality::{bm_decomposition, partial_smash_ambient, unital_globalization};
use hpa_core::exactlin::{Field, Matrix, Scalar, StructureTensor, Subspace, Vector};
use hpa_core::globalize::enveloping_action;
use hpa_core::partial::{action_to_coaction, coaction_to_action, verify_partial_action, PartialActionData};
use proptest::prelude::*;

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::prime(3).unwrap()), Just(Field::prime(5).unwrap()), Just(Field::prime(7).unwrap())]
}

fn scalar(field: Field) -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9).prop_map(move |(n, d)| field.ratio(n, d).unwrap_or_else(|_| field.from_int(n)))
}

fn scalars(field: Field, len: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(scalar(field), len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_operations_are_exact((field, xs) in field_strategy().prop_flat_map(|f| (Just(f), scalars(f, 3)))) {
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        if let Some(inv) = a.inverse() {
            prop_assert!((a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        prop_assert_eq!(field.parse_scalar(&a.to_string()).unwrap(), a.clone());
    }

    #[test]
    fn span_is_canonical(vs in proptest::collection::vec(scalars(Field::Rational, 4), 1..5)) {
        let s = Subspace::span(&vs, 4).unwrap();
        // replace each vector by its sum with the next one
        let mixed: Vec<Vector> = (0..vs.len())
            .map(|i| if i + 1 < vs.len() { hpa_core::exactlin::vector::add(&vs[i], &vs[i + 1]) } else { vs[i].clone() })
            .collect();
        let t = Subspace::span(&mixed, 4).unwrap();
        prop_assert_eq!(s, t);
    }

    #[test]
    fn rank_nullity(entries in scalars(Field::Rational, 12)) {
        let m = Matrix::from_rows(entries.chunks(4).map(|r| r.to_vec()).collect(), 4).unwrap();
        prop_assert_eq!(m.rank() + m.kernel().dim(), 4);
        for v in m.kernel().basis() {
            prop_assert!(hpa_core::exactlin::vector::is_zero(&m.mul_vec(v)));
        }
    }

    #[test]
    fn group_algebras_and_duals_are_hopf(n in 1usize..7, field in field_strategy()) {
        let h = group_algebra(&GroupTable::cyclic(n).unwrap(), field);
        prop_assert!(verify_structure(&h).all_passed());
        let dual = dual_hopf(&h).unwrap();
        prop_assert!(verify_structure(&dual).all_passed());
        prop_assert!(dual_hopf(&dual).unwrap().same_structure(&h));
    }

    #[test]
    fn scalar_partial_actions_globalize(n in 1usize..4, whole in any::<bool>(), field in field_strategy()) {
        let g = GroupTable::cyclic(n).unwrap();
        // orders here are 1, 2, 3, so the only subgroups are trivial or everything
        let subgroup: Vec<usize> = if whole { (0..n).collect() } else { vec![g.identity()] };
        let fx = scalar_partial(&g, &subgroup, field).unwrap();
        let p = fx.action().unwrap();
        prop_assert!(verify_partial_action(p).all_passed());
        let env = enveloping_action(p).unwrap();
        prop_assert_eq!(env.b().dim(), n / subgroup.len());
        let u = unital_globalization(&env).unwrap();
        let dec = bm_decomposition(&u.action, &u.unit_a).unwrap();
        let iso = &dec.iso;
        let size = iso.double_smash.dim();
        prop_assert_eq!(iso.phi.matrix().mul(iso.psi.matrix()), Matrix::identity(field, size));
        prop_assert_eq!(&dec.kernel, &dec.ideal_kernel);
        prop_assert_eq!(dec.kernel.is_zero(), subgroup.len() == n);
    }

    #[test]
    fn smash_associative_iff_composition_holds(n in 2usize..4, values in proptest::collection::vec(0usize..4, 3)) {
        let field = Field::Rational;
        let palette = [field.zero(), field.one(), field.from_int(2), field.ratio(1, 2).unwrap()];
        let g = GroupTable::cyclic(n).unwrap();
        let h = group_algebra(&g, field);
        let carrier = scalar_partial(&g, &[0], field).unwrap().carrier;
        let action = StructureTensor::from_fn(n, 1, 1, |x, _| {
            vec![if x == 0 { field.one() } else { palette[values[x - 1]].clone() }]
        });
        let p = PartialActionData::new(h, carrier, action).unwrap();
        let composition = verify_partial_action(&p).passed("composition");
        let associative = partial_smash_ambient(&p).unwrap().verify().passed("associativity");
        prop_assert_eq!(composition, associative);
    }

    #[test]
    fn bundles_round_trip(index in 0usize..FIXTURE_IDS.len(), p in prop_oneof![Just(3u64), Just(5), Just(7)]) {
        let field = Field::prime(p).unwrap();
        let id = FIXTURE_IDS[index];
        // e_N needs the characteristic prime to |N|, and |A3| = 3
        prop_assume!(!(id.contains("A3") && p == 3));
        let fx = fixture(id, field).unwrap();
        let mut bundle = Bundle::new(field);
        if let Some(c) = fx.coaction() {
            bundle = bundle.with_coaction(c, true);
        }
        if let Some(a) = fx.action() {
            bundle = bundle.with_action(a, true);
        }
        let text = bundle.to_json();
        let again = Bundle::from_json(&text).unwrap();
        prop_assert_eq!(again.to_json(), text);
        prop_assert!(again.require_hopf().unwrap().same_structure(&fx.hopf));
    }

    #[test]
    fn conversion_round_trips(index in 0usize..6) {
        let fx = fixture(FIXTURE_IDS[index], Field::Rational).unwrap();
        let c = fx.coaction().unwrap();
        let a = coaction_to_action(c).unwrap();
        let back = action_to_coaction(&a, c.hopf()).unwrap();
        prop_assert_eq!(back.coaction(), c.coaction());
    }
}
