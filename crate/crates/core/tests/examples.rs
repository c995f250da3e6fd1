mod common;

use common::*;
use hypdesc_core::arith::{is_norm, Tower};
use hypdesc_core::binforms::{act, classify_normal_form, proportional, Mat2, Shape};
use hypdesc_core::descent::{
    classify_case, cocycle, descend, hyperelliptic_descend, shape_invariants, verify, verify_from_normal, CocycleKind,
    DescentResult,
};
use hypdesc_core::invariants::{extension_data, wp_normalize, Label};
use num_bigint::BigInt;

#[test]
fn genus_three_descends_to_q() {
    let f = genus3_input();
    let inv = genus3_involution();
    assert!(proportional(&act(&inv, &f).unwrap(), &f).is_some());
    let d = descend(&f, Some(&inv)).unwrap();
    assert_eq!(d.normal_form.shape, Shape::CForm2);
    match &d.result {
        DescentResult::Model { f0, .. } => assert_eq!(f0.tower().level(), 0),
        other => panic!("{other:?}"),
    }
    assert!(verify(&f, &d));
}

#[test]
fn genus_four_descends_to_q() {
    let f = genus4_input();
    let d = descend(&f, Some(&genus4_automorphism())).unwrap();
    assert_eq!(d.normal_form.shape, Shape::CForm1);
    assert_eq!(d.normal_form.n, 3);
    match &d.result {
        DescentResult::Model { f0, .. } => assert_eq!(f0.tower().level(), 0),
        other => panic!("{other:?}"),
    }
    assert!(verify(&f, &d));
}

#[test]
fn degree_twelve_is_obstructed() {
    let nf = obstructed12_normal_form();
    let c = cocycle(&nf).unwrap();
    assert_eq!(c.kind, CocycleKind::Antidiagonal);
    assert_eq!(c.r, Some(q(3, 1)));
    assert!(!is_norm(&q(3, 1), &BigInt::from(2)));
    let case = classify_case(nf.shape, nf.n, nf.m, nf.genus()).unwrap();
    match hyperelliptic_descend(&nf, &case).unwrap() {
        DescentResult::Obstructed { label, .. } => assert_eq!(label, Label::parse("I_2,2")),
        other => panic!("{other:?}"),
    }
    let (d, _) = extension_data(&wp_normalize(&shape_invariants(&nf).unwrap()).unwrap()).unwrap();
    assert_eq!(d, BigInt::from(2));
}

#[test]
fn octavic_counterexample_is_obstructed() {
    let nf = octavic_obstructed_normal_form();
    let case = classify_case(nf.shape, nf.n, nf.m, nf.genus()).unwrap();
    assert!(hyperelliptic_descend(&nf, &case).unwrap().is_obstructed());
    assert_eq!(classify_normal_form(&nf.to_form()).unwrap(), Some(nf));
}

#[test]
fn modified_octavic_descends() {
    let nf = octavic_descends_normal_form();
    let case = classify_case(nf.shape, nf.n, nf.m, nf.genus()).unwrap();
    let r = hyperelliptic_descend(&nf, &case).unwrap();
    assert!(matches!(r, DescentResult::Model { .. }));
    assert!(verify_from_normal(&nf, &r));
    let c = cocycle(&nf).unwrap();
    assert_eq!(c.r, Some(q(144, 13)));
}

#[test]
fn rational_model_has_the_deck_involution() {
    let f = octavic_rational_model();
    let deck = Mat2::from_ints(&Tower::rationals(), [0, 3, 1, 0]);
    assert!(proportional(&act(&deck, &f).unwrap(), &f).is_some());
    let d = descend(&f, Some(&deck)).unwrap();
    assert!(matches!(d.result, DescentResult::Model { .. }));
    assert!(verify(&f, &d));
}

#[test]
fn degree_twelve_variant_descends_as_a_conic_cover() {
    let nf = conic12_normal_form();
    let case = classify_case(nf.shape, nf.n, nf.m, nf.genus()).unwrap();
    assert!(case.conic_eligible);
    match hyperelliptic_descend(&nf, &case).unwrap() {
        DescentResult::Conic { model, chain } => {
            assert!(model.is_rational());
            assert!(model.cover_identity());
            assert!(verify_from_normal(&nf, &DescentResult::Conic { model, chain }));
        }
        other => panic!("{other:?}"),
    }
}
