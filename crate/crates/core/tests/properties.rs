use alcove_charge::alcove::{in_s, normalize_to_s, AffineWeylElement, Alcove, AlcoveFrame};
use alcove_charge::braid::{project_to_affine_weyl, BraidWord, Letter};
use alcove_charge::covering::{deck_act, transport, CoveringPoint, TransportPath};
use alcove_charge::kmodel::{KClass, KGenerator, KModel};
use alcove_charge::poly::Polynomial;
use alcove_charge::root_system::RootSystem;
use alcove_charge::scalar::Scalar;
use alcove_charge::weight::Weight;
use alcove_charge::Q;
use proptest::prelude::*;

fn rs(name: &str) -> RootSystem {
    RootSystem::from_name(name).unwrap()
}

fn rational() -> impl Strategy<Value = Q> {
    (-40i64..40, 1i64..9).prop_map(|(n, d)| Q::from_ratio(n, d))
}

fn weight(rank: usize) -> impl Strategy<Value = Weight<Q>> {
    prop::collection::vec(rational(), rank).prop_map(Weight::new)
}

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((0..=rank, prop::bool::ANY), 0..max_len).prop_map(|v| {
        BraidWord::new(v.into_iter().map(|(g, s)| Letter::new(g, if s { 1 } else { -1 })).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn projection_is_a_homomorphism(a in word(2, 8), b in word(2, 8)) {
        let r = rs("A2");
        let ab = project_to_affine_weyl(&r, &a.compose(&b));
        prop_assert_eq!(ab, project_to_affine_weyl(&r, &a).compose(&project_to_affine_weyl(&r, &b)));
        prop_assert!(project_to_affine_weyl(&r, &a.compose(&a.invert())).is_identity());
    }

    #[test]
    fn free_reduction_is_idempotent(a in word(3, 12)) {
        let once = a.free_reduce();
        prop_assert_eq!(once.free_reduce(), once.clone());
        prop_assert_eq!(a.compose(&a.invert()).free_reduce(), BraidWord::empty());
    }

    #[test]
    fn affine_weyl_inverse(a in word(2, 10), p in weight(2)) {
        let r = rs("B2");
        let w = project_to_affine_weyl(&r, &a);
        prop_assert_eq!(w.inverse().act(&w.act(&p)), p);
        prop_assert!(w.compose(&w.inverse()).is_identity());
        prop_assert!(w.is_in_affine_weyl(&r));
    }

    #[test]
    fn frames_cross_back(a in word(2, 10), g in 0usize..3) {
        let r = rs("G2");
        let f = AlcoveFrame::from_element(&r, project_to_affine_weyl(&r, &a));
        prop_assert_eq!(f.cross(&r, g).cross(&r, g).alcove, f.alcove.clone());
        prop_assert_eq!(AlcoveFrame::locate(&r, &f.alcove).unwrap().alcove, f.alcove);
    }

    #[test]
    fn normalization_lands_in_s(l in weight(2), m in weight(2), a in word(2, 6)) {
        let r = rs("A2");
        if let Ok((w, l2, m2)) = normalize_to_s(&r, &l, &m) {
            prop_assert!(in_s(&r, &l2, &m2));
            prop_assert_eq!(w.act(&l), l2.clone());
            // the normal form only depends on the orbit
            let u = project_to_affine_weyl(&r, &a);
            let (_, l3, m3) = normalize_to_s(&r, &u.act(&l), &u.act(&m)).unwrap();
            prop_assert_eq!((l3, m3), (l2, m2));
        }
    }

    #[test]
    fn deck_action_commutes_with_transport(
        a in word(1, 6),
        b in word(1, 6),
        lam in 1i64..10,
        targets in prop::collection::vec((-30i64..30, -30i64..30), 1..4),
    ) {
        let r = rs("A1");
        let p = CoveringPoint::new(&r, a, Weight::new(vec![Q::from_ratio(lam, 10)]), Weight::new(vec![Q::from_ratio(1, 3)])).unwrap();
        let (l0, m0) = p.project(&r);
        let mut points = vec![(l0, m0)];
        // denominators 7 and 11 keep lambda and mu off the walls at the same time
        points.extend(targets.iter().map(|&(x, y)| {
            (Weight::new(vec![Q::from_ratio(x, 7)]), Weight::new(vec![Q::from_ratio(y, 11)]))
        }));
        let path = TransportPath::new(points);
        if let Ok(res) = transport(&r, &p, &path) {
            let moved = deck_act(&b, &p);
            let image = path.map(&project_to_affine_weyl(&r, &b));
            let res2 = transport(&r, &moved, &image).unwrap();
            prop_assert_eq!(res2.point.free_reduced(), deck_act(&b, &res.point).free_reduced());
            let back = transport(&r, &res.point, &path.reversed()).unwrap();
            prop_assert_eq!(back.point.free_reduced(), p.free_reduced());
        }
    }

    #[test]
    fn translations_invert(coeffs in prop::collection::vec(-20i64..20, 3), nu in prop::collection::vec(-4i64..4, 2)) {
        let r = rs("A2");
        let model = KModel::kleinian(&r).unwrap();
        let m = KClass::new(coeffs);
        let there = model.k_action(&KGenerator::Translation(nu.clone()), &m).unwrap();
        let neg: Vec<i64> = nu.iter().map(|x| -x).collect();
        prop_assert_eq!(model.k_action(&KGenerator::Translation(neg), &there).unwrap(), m.clone());
        for g in 0..3 {
            let s = model.k_action(&KGenerator::Reflection(g), &m).unwrap();
            prop_assert_eq!(model.k_action(&KGenerator::Reflection(g), &s).unwrap(), m.clone());
        }
    }

    #[test]
    fn transform_matches_composition(a in word(2, 6), b in word(2, 6), coeffs in prop::collection::vec(-9i64..9, 3)) {
        let r = rs("A2");
        let model = KModel::kleinian(&r).unwrap();
        let m = KClass::new(coeffs);
        let (u, v) = (project_to_affine_weyl(&r, &a), project_to_affine_weyl(&r, &b));
        let step = model.transform(&u, &model.transform(&v, &m).unwrap()).unwrap();
        prop_assert_eq!(step, model.transform(&u.compose(&v), &m).unwrap());
    }

    #[test]
    fn polynomial_translation_composes(t1 in weight(2), t2 in weight(2), x in weight(2)) {
        let (x0, x1) = (Polynomial::<Q>::var(2, 0), Polynomial::<Q>::var(2, 1));
        let p = &x0.pow(3) + &(&x1 * &x0);
        let sum: Vec<Q> = t1.coords().iter().zip(t2.coords()).map(|(a, b)| a + b).collect();
        let two = p.translate(t1.coords()).translate(t2.coords());
        prop_assert_eq!(two.eval_weight(&x), p.translate(&sum).eval_weight(&x));
    }

    #[test]
    fn serde_round_trips(a in word(3, 8), floors in prop::collection::vec(-5i64..5, 6)) {
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<BraidWord>(&s).unwrap(), a);
        let alc = Alcove::new(floors);
        let s = serde_json::to_string(&alc).unwrap();
        prop_assert_eq!(serde_json::from_str::<Alcove>(&s).unwrap(), alc);
    }
}

#[test]
fn affine_reflections_are_involutions() {
    let r = rs("C3");
    for g in 0..=3 {
        let s = AffineWeylElement::simple(&r, g);
        assert!(s.compose(&s).is_identity());
    }
}
