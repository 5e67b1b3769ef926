//! The bar construction `B P = (𝓕^c(sP̄), d₁ + d₂, θ)`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::glinalg::{Biarity, Scalar};
use crate::graphcalc::{orbit_rep, two_level_composites, Coderivation, Dec, FormalSum, Graph, TruncationPolicy};
use crate::structures::coproperad::split_two_vertex;
use crate::structures::{CoKind, CurvedCoproperad, SemiAugProperad};

/// Signs of the four components of the bar structure: `d₁`, `d₂` and the
/// two components of the curvature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BarSigns {
    pub d1: i64,
    pub d2: i64,
    pub theta1: i64,
    pub theta2: i64,
}

pub const BAR_SIGNS: BarSigns = BarSigns { d1: -1, d2: 1, theta1: 1, theta2: -1 };

/// Renames every term through `name_of`: each
/// term's orbit representative becomes one vertex. Terms whose
/// representative has no name are dropped; the flag reports drops.
pub fn rename_terms(x: &FormalSum, mut name_of: impl FnMut(&Graph) -> Option<Dec>) -> (FormalSum, bool) {
    let mut out = FormalSum::zero();
    let mut dropped = false;
    for (g, c) in x.iter() {
        let (rep, om, im, sign) = orbit_rep(g);
        match name_of(&rep) {
            Some(dec) => out.add_term(&Graph::single(dec).relabel(&om, &im), sign * c),
            None => dropped = true,
        }
    }
    (out, dropped)
}

pub fn shifted_dec(prefix: &str, rep: &Graph, shift: i64) -> Dec {
    let b = rep.biarity();
    Dec {
        name: Arc::from(format!("{prefix}{rep}")),
        degree: rep.degree() + shift,
        outs: b.outputs,
        ins: b.inputs,
        weight: rep.weight().max(1),
    }
}

/// Orbit representatives of two-vertex graphs on `gens` that may be
/// contracted inside a graph admitted by `policy`.
pub fn pair_reps(gens: &[Dec], policy: &TruncationPolicy) -> Vec<Graph> {
    let mut set = BTreeSet::new();
    for u in gens {
        for l in gens {
            for g in two_level_composites(&Graph::single(u.clone()), &Graph::single(l.clone())) {
                let b = g.biarity();
                if g.weight() <= policy.max_weight && policy.admits_vertex(b.outputs, b.inputs) {
                    set.insert(orbit_rep(&g).0);
                }
            }
        }
    }
    set.into_iter().collect()
}

pub fn bar(p: &Arc<SemiAugProperad>, policy: TruncationPolicy) -> CurvedCoproperad {
    bar_with_signs(p, policy, BAR_SIGNS)
}

pub fn bar_with_signs(p: &Arc<SemiAugProperad>, policy: TruncationPolicy, signs: BarSigns) -> CurvedCoproperad {
    let mut sources: BTreeMap<Arc<str>, Graph> = BTreeMap::new();
    let mut by_rep: BTreeMap<Graph, Dec> = BTreeMap::new();
    let mut cogens = vec![];
    for b in p.reduced_basis() {
        let dec = shifted_dec("s", &b, 1);
        if !policy.admits_vertex(dec.outs, dec.ins) || dec.weight > policy.max_weight {
            continue;
        }
        sources.insert(dec.name.clone(), b.clone());
        by_rep.insert(b, dec.clone());
        cogens.push(dec);
    }
    let suspend = |x: &FormalSum| rename_terms(&p.reduce(x), |r| by_rep.get(r).cloned()).0;
    let lift_of = |dec: &Dec| p.lift(&FormalSum::monomial(sources[&dec.name].clone()));

    let mut on_single = BTreeMap::new();
    let mut theta = BTreeMap::new();
    for dec in &cogens {
        let g = Graph::single(dec.clone());
        let db = p.differential(&lift_of(dec));
        let v = suspend(&db).scale(&Scalar::int(signs.d1));
        if !v.is_zero() {
            on_single.insert(g.clone(), v);
        }
        if dec.biarity() == Biarity::UNIT {
            let t = p.epsilon_of(&db) * Scalar::int(signs.theta1);
            if !t.is_zero() {
                theta.insert(g, t);
            }
        }
    }
    let mut on_pairs = BTreeMap::new();
    for k in pair_reps(&cogens, &policy) {
        let s = split_two_vertex(&k, &Scalar::one());
        let (u, l) = (&s.upper.vertices[0], &s.lower.vertices[0]);
        let bu = &sources[&u.name];
        let c = s.coeff * Scalar::sign(bu.degree());
        let gamma = p.compose(&s.skeleton, &[lift_of(u), lift_of(l)]).expect("two-level composite");
        let v = suspend(&gamma).scale(&(&c * Scalar::int(signs.d2)));
        if !v.is_zero() {
            on_pairs.insert(k.clone(), v);
        }
        if k.biarity() == Biarity::UNIT {
            let t = c * p.epsilon_of(&gamma) * Scalar::int(signs.theta2);
            if !t.is_zero() {
                theta.insert(k, t);
            }
        }
    }
    let d = Coderivation::new(-1, on_single, on_pairs).expect("bar differential has degree -1");
    let mut c = CurvedCoproperad::new(&format!("B({})", p.name), CoKind::Cofree { cogens, d, theta }, policy);
    c.sources = sources;
    c
}
