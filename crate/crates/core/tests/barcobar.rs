use std::sync::Arc;

use koszul_core::barcobar::adjunction::{BAR_MORPHISM_SIGN, COBAR_MORPHISM_SIGN, IOTA_SIGN, PI_SIGN};
use koszul_core::barcobar::*;
use koszul_core::doc::{from_json, to_canonical_json, CoproperadDoc};
use koszul_core::fixtures::uas_dual::{derive_document, dual_policy};
use koszul_core::fixtures::*;
use koszul_core::glinalg::Biarity;
use koszul_core::graphcalc::{canonicalize, two_level_composites, FormalSum, Graph, TruncationPolicy};
use koszul_core::structures::*;
use koszul_core::Scalar;

fn uas_policy() -> TruncationPolicy {
    TruncationPolicy::new(3, 2, 1)
}

#[test]
fn sign_conventions_are_frozen() {
    assert_eq!(BAR_SIGNS, BarSigns { d1: -1, d2: 1, theta1: 1, theta2: -1 });
    assert_eq!(COBAR_SIGNS, CobarSigns { d0: -1, d1: -1, d2: 1 });
    assert_eq!((PI_SIGN, IOTA_SIGN, BAR_MORPHISM_SIGN, COBAR_MORPHISM_SIGN), (1, -1, 1, -1));
}

#[test]
fn bar_curvature_lives_on_weight_two_unary_elements() {
    let u = Arc::new(uas(uas_policy()));
    let bu = bar(&u, uas_policy());
    let mut hits = 0;
    for g in bu.basis() {
        let t = bu.theta(&g);
        if t.is_zero() {
            continue;
        }
        assert_eq!((g.weight(), g.biarity()), (2, Biarity::UNIT), "{g}");
        assert!(t == Scalar::one() || t == -Scalar::one(), "theta({g}) = {t}");
        hits += 1;
    }
    assert!(hits > 0);
    assert!(check_curved_coproperad(&bu, false).passed());
}

#[test]
fn identities_go_to_identities() {
    let u = Arc::new(uas(uas_policy()));
    let bu = Arc::new(bar(&u, uas_policy()));
    let l = bar_morphism(&PropMorphism::identity(u.clone()), &bu, &bu).unwrap();
    let id = LaxMorphism::identity(bu.clone());
    assert!(bu.domain_basis().iter().all(|g| l.f.apply(g) == id.f.apply(g)));
    assert!(l.a.is_zero());
    let ob = Arc::new(cobar(&bu, uas_policy()));
    let f = cobar_morphism(&id, &ob, &ob).unwrap();
    assert_eq!(f.images, PropMorphism::identity(ob.clone()).images);
    let r = adjoint_right(&pi(&bu, &u).unwrap(), &bu).unwrap();
    assert!(bu.domain_basis().iter().all(|g| r.f.apply(g) == id.f.apply(g)));
    assert!(r.a.is_zero());
}

/// Two-vertex composites of generators of `op` inside its policy.
fn composites(op: &SemiAugProperad) -> Vec<FormalSum> {
    let mut out = vec![];
    for a in op.generators() {
        for b in op.generators() {
            for g in two_level_composites(&Graph::single(a.clone()), &Graph::single(b.clone())) {
                let (h, s) = canonicalize(&g).unwrap();
                if op.policy.admits(&h) {
                    out.push(FormalSum::term(h, s));
                }
            }
        }
    }
    out
}

#[test]
fn g_pi_changes_the_augmentation_only_on_composites() {
    let pol = TruncationPolicy::new(2, 2, 1);
    let u = Arc::new(uas(pol));
    let bu = Arc::new(bar(&u, pol));
    let ob = Arc::new(cobar(&bu, pol));
    let g = adjoint_left(&pi(&bu, &u).unwrap(), &ob).unwrap();
    assert!(g.check().passed());
    for d in ob.generators() {
        let x = FormalSum::monomial(Graph::single(d.clone()));
        assert_eq!(u.epsilon_of(&g.apply_sum(&x)), ob.epsilon_of(&x), "{}", d.name);
    }
    let differ = composites(&ob).into_iter().filter(|x| u.epsilon_of(&g.apply_sum(x)) != ob.epsilon_of(x)).count();
    assert!(differ > 0);
}

#[test]
fn bar_of_g_pi_is_genuinely_lax() {
    let pol = TruncationPolicy::new(2, 2, 1);
    let u = Arc::new(uas(pol));
    let bu = Arc::new(bar(&u, pol));
    let ob = Arc::new(cobar(&bu, pol));
    let g = adjoint_left(&pi(&bu, &u).unwrap(), &ob).unwrap();
    let bob = Arc::new(bar(&ob, pol));
    let l = bar_morphism(&g, &bob, &bu).unwrap();
    assert!(!l.a.is_zero());
    let r = check_lax(&l);
    assert!(r.passed(), "{}", r.summary);
}

#[test]
fn g_kappa_gives_a_nonzero_curvature_correction() {
    let g = g_kappa();
    assert!(g.check().passed());
    let omega = g.source.clone();
    let pol = dual_policy();
    let bo = Arc::new(bar(&omega, pol));
    let alpha = tw_pushforward(&g, &pi(&bo, &omega).unwrap()).unwrap();
    let l = adjoint_right(&alpha, &Arc::new(bar(&alpha.p, pol))).unwrap();
    assert!(!l.a.is_zero());
    assert!(check_lax(&l).passed());
}

#[test]
fn cobar_of_a_twist_shifts_by_the_unit() {
    let c = Arc::new(one_cogenerator("X", 1, Scalar::zero()));
    let x = c.cogenerators()[0].clone();
    let mut a = ScalarMap::zero(-1);
    a.values.insert(Graph::single(x), Scalar::int(3));
    let (ca, l) = twist(&c, &a, "X^a");
    assert!(check_curved_coproperad(&ca, false).passed());
    assert!(check_lax(&l).passed());
    let (oc, od) = (Arc::new(cobar(&l.source, c.policy)), Arc::new(cobar(&l.target, c.policy)));
    let f = cobar_morphism(&l, &oc, &od).unwrap();
    assert!(f.check().passed());
    let gen = oc.generators()[0].clone();
    let target = od.generators()[0].clone();
    let shift = l.a.apply(&oc.sources[&gen.name]);
    assert_eq!(shift.abs(), Scalar::int(3));
    let mut expected = FormalSum::monomial(Graph::single(target));
    expected.add_scaled(&FormalSum::unit(), &(shift * Scalar::int(COBAR_MORPHISM_SIGN)));
    assert_eq!(f.images[&gen.name], expected);
}

#[test]
fn adjoint_of_zero_is_a_morphism_iff_flat() {
    let u = Arc::new(uas(uas_policy()));
    for theta in [Scalar::zero(), Scalar::one()] {
        let c = Arc::new(one_cogenerator("X", 2, theta.clone()));
        let oc = Arc::new(cobar(&c, c.policy));
        let zero = TwistingMorphism::new(c, u.clone(), LinearMap::zero(-1)).unwrap();
        let f = adjoint_left(&zero, &oc).unwrap();
        assert_eq!(f.check().passed(), theta.is_zero());
    }
}

#[test]
fn shipped_koszul_dual_matches_its_derivation() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/src/fixtures/uas_dual.json");
    let shipped: CoproperadDoc = from_json(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(to_canonical_json(&derive_document().unwrap()), to_canonical_json(&shipped));
    let c = uas_koszul_dual();
    assert!(check_curved_coproperad(&c, false).passed());
    assert!(check_curved_coproperad(&c, true).passed());
}
