//! The cobar construction `Ω C = (𝓕(s⁻¹C̄), −d₀ + d₁ − d₂)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::glinalg::Scalar;
use crate::graphcalc::{graft, Dec, FormalSum, Graph, TruncationPolicy};
use crate::structures::{CurvedCoproperad, PropKind, SemiAugProperad};

use super::bar::{rename_terms, shifted_dec};

/// Signs of `d₀`, `d₁`, `d₂` on a generator `s⁻¹c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CobarSigns {
    pub d0: i64,
    pub d1: i64,
    pub d2: i64,
}

pub const COBAR_SIGNS: CobarSigns = CobarSigns { d0: -1, d1: -1, d2: 1 };

/// Generators `s⁻¹c` for the basis representatives of `C̄` that may occur
/// as vertices under `policy`, keyed by representative.
pub fn desuspended_generators(c: &CurvedCoproperad, policy: &TruncationPolicy) -> BTreeMap<Graph, Dec> {
    let wide = c.with_policy(policy.widened());
    wide.basis()
        .into_iter()
        .map(|r| {
            let dec = shifted_dec("~", &r, -1);
            (r, dec)
        })
        .filter(|(_, d)| d.weight <= policy.max_weight && policy.admits_vertex(d.outs, d.ins))
        .collect()
}

pub fn cobar(c: &Arc<CurvedCoproperad>, policy: TruncationPolicy) -> SemiAugProperad {
    cobar_with_signs(c, policy, COBAR_SIGNS)
}

pub fn cobar_with_signs(c: &Arc<CurvedCoproperad>, policy: TruncationPolicy, signs: CobarSigns) -> SemiAugProperad {
    let gens = desuspended_generators(c, &policy);
    let wide = c.with_policy(policy.widened());
    let desuspend = |x: &FormalSum| rename_terms(x, |r| gens.get(r).cloned()).0;
    let mut d = BTreeMap::new();
    for (rep, dec) in &gens {
        let mut v = FormalSum::unit().scale(&(wide.theta(rep) * Scalar::int(signs.d0)));
        v.add_scaled(&desuspend(&wide.differential(&FormalSum::monomial(rep.clone()))), &Scalar::int(signs.d1));
        for s in wide.delta(rep) {
            let u = desuspend(&FormalSum::monomial(s.upper.clone()));
            let l = desuspend(&FormalSum::monomial(s.lower.clone()));
            if u.is_zero() || l.is_zero() {
                continue;
            }
            let t = graft(&s.skeleton, &[u, l]).expect("Δ pieces fit the skeleton");
            v.add_scaled(&t, &(s.coeff * Scalar::sign(s.upper.degree()) * Scalar::int(signs.d2)));
        }
        let (v, _) = v.truncate(|g| g.weight() <= policy.max_weight);
        if !v.is_zero() {
            d.insert(dec.name.clone(), v);
        }
    }
    let generators: Vec<Dec> = gens.values().cloned().collect();
    let mut p = SemiAugProperad::new(&format!("Omega({})", c.name), PropKind::Free { generators }, policy);
    p.d = d;
    p.sources = gens.into_iter().map(|(r, dec)| (dec.name, r)).collect();
    p
}
