//! Frozen values computed by hand, plus cross-module consistency checks.

use rand::rngs::StdRng;
use rand::SeedableRng;

use burnside_core::burnside::{idempotents, trace_direct, BurnsideElement};
use burnside_core::ellcurve::{point_count, FiniteField, WeierstrassCurve};
use burnside_core::groups::{FiniteGroup, Group};
use burnside_core::gsets::GSet;
use burnside_core::gw::{FieldDescriptor, GWElement};
use burnside_core::json::{morphism_to_json, parse_morphism_str};
use burnside_core::linrep::{theta, trace_character_formula};
use burnside_core::random::{random_endomorphism, random_gset};
use burnside_core::scalar::{CoeffRing, ExactScalar};
use burnside_core::Error;

fn group(spec: &str) -> Group {
    FiniteGroup::from_spec(spec).unwrap()
}

fn class_orders(g: &Group) -> Vec<usize> {
    g.subgroup_conjugacy_classes().unwrap().iter().map(|h| h.order()).collect()
}

#[test]
fn subgroup_class_orders() {
    assert_eq!(class_orders(&group("sym:3")), vec![1, 2, 3, 6]);
    assert_eq!(class_orders(&group("alt:5")), vec![1, 2, 3, 4, 5, 6, 10, 12, 60]);
    assert_eq!(class_orders(&group("dihedral:4")), vec![1, 2, 2, 2, 4, 4, 4, 8]);
    assert_eq!(class_orders(&group("perm:(0 2 1 3)(4 6 5 7),(0 4 1 5)(2 7 3 6)")), vec![1, 2, 4, 4, 4, 8]);
    assert_eq!(class_orders(&group("cyclic:12")), vec![1, 2, 3, 4, 6, 12]);
}

#[test]
fn table_of_marks_of_s3() {
    let marks = group("sym:3").table_of_marks().unwrap().to_vec();
    assert_eq!(marks, vec![vec![6, 3, 2, 1], vec![0, 1, 0, 1], vec![0, 0, 2, 1], vec![0, 0, 0, 1]]);
}

#[test]
fn s3_products() {
    let g = group("sym:3");
    let b = |k| BurnsideElement::<i64>::basis(&g, k).unwrap();
    // G/C2 × G/C2 = G/1 + G/C2; G/C3 × G/C3 = 2·G/C3; G/C2 × G/C3 = G/1.
    assert_eq!(b(1).multiply(&b(1)).unwrap().coeffs(), &[1, 1, 0, 0]);
    assert_eq!(b(2).multiply(&b(2)).unwrap().coeffs(), &[0, 0, 2, 0]);
    assert_eq!(b(1).multiply(&b(2)).unwrap().coeffs(), &[1, 0, 0, 0]);
}

#[test]
fn idempotent_counts() {
    // 2^(number of conjugacy classes of perfect subgroups).
    for (spec, n) in [("cyclic:4", 2), ("sym:3", 2), ("dihedral:4", 2), ("alt:5", 4)] {
        assert_eq!(idempotents(&group(spec)).unwrap().len(), n, "{spec}");
    }
}

#[test]
fn curve_counts() {
    let f5 = FiniteField::prime(5).unwrap();
    // y² = x³ + x + 1 over F5: x = 0, 2, 3, 4 give two points each.
    let e = WeierstrassCurve::from_ints(f5, [0, 0, 0, 1, 1]).unwrap();
    let fd = point_count(&e).unwrap();
    assert_eq!((fd.count, fd.a), (9, -3));
    // y² + xy = x³ + 1 over F2: (0,1), (1,0), (1,1) and infinity.
    let e = WeierstrassCurve::from_ints(FiniteField::prime(2).unwrap(), [1, 0, 0, 0, 1]).unwrap();
    assert_eq!(point_count(&e).unwrap().count, 4);
    assert_eq!(WeierstrassCurve::parse(f5, "0,0,0,0,0"), Err(Error::SingularCurve));
}

#[test]
fn gw_frozen_values() {
    let f3 = FieldDescriptor::prime_field(3).unwrap();
    let x = GWElement::parse_diagonal(f3, "1,1").unwrap();
    assert_eq!(x.rank_discriminant().unwrap(), (2, 1));
    let y = GWElement::parse_diagonal(f3, "1,2").unwrap();
    assert_eq!(y.rank_discriminant().unwrap(), (2, -1));
    let r = GWElement::parse_diagonal(FieldDescriptor::Reals, "3,-5,7,1/2").unwrap();
    assert_eq!(r.rank_signature().unwrap(), (4, 2));
}

#[test]
fn json_round_trips_random_morphisms() {
    let mut rng = StdRng::seed_from_u64(5);
    for spec in ["cyclic:3", "klein4", "sym:3"] {
        let g = group(spec);
        for _ in 0..20 {
            let t = random_gset(&g, &mut rng, 4).unwrap();
            let f = random_endomorphism(&t, &mut rng, 3, 6).unwrap();
            let text = morphism_to_json(&f).to_string();
            let back = parse_morphism_str(&text, Some(&g)).unwrap();
            assert_eq!(back, f);
            assert_eq!(morphism_to_json(&back).to_string(), text);
        }
    }
}

#[test]
fn theta_of_trace_matches_fixed_point_formula() {
    let mut rng = StdRng::seed_from_u64(9);
    let g = group("dihedral:4");
    for _ in 0..20 {
        let t = random_gset(&g, &mut rng, 4).unwrap();
        let f = random_endomorphism(&t, &mut rng, 2, 6).unwrap();
        let th = theta(&trace_direct(&f).unwrap(), CoeffRing::Rationals).unwrap();
        for (k, &rep) in g.class_representatives().iter().enumerate() {
            assert_eq!(th.character()[k], ExactScalar::Rational(trace_character_formula(&f, rep).unwrap()));
        }
    }
}

#[test]
fn free_orbit_character() {
    let g = group("cyclic:5");
    let th = theta(&BurnsideElement::<i64>::from_gset(&GSet::free(g.clone())).unwrap(), CoeffRing::PrimeField(7)).unwrap();
    assert_eq!(th.character_strings(), vec!["5", "0", "0", "0", "0"]);
}
