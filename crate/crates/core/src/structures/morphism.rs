//! Morphisms of dg properads.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::graphcalc::{graft, FormalSum, Graph};
use crate::Error;

use super::convolution::TwistingMorphism;
use super::maps::LinearMap;
use super::properad::{PropKind, SemiAugProperad};
use super::report::CheckReport;

/// A degree-0 morphism given on the operations (explicit source) or the
/// generators (free source).
#[derive(Clone, Debug)]
pub struct PropMorphism {
    pub source: Arc<SemiAugProperad>,
    pub target: Arc<SemiAugProperad>,
    pub images: BTreeMap<Arc<str>, FormalSum>,
}

impl PropMorphism {
    pub fn identity(p: Arc<SemiAugProperad>) -> Self {
        let images = p.generators().iter().map(|d| (d.name.clone(), FormalSum::monomial(Graph::single(d.clone())))).collect();
        PropMorphism { source: p.clone(), target: p, images }
    }

    pub fn apply(&self, g: &Graph) -> FormalSum {
        if g.is_unit() {
            return self.target.unit_element();
        }
        let blocks: Vec<FormalSum> =
            g.vertices.iter().map(|v| self.images.get(&v.name).cloned().unwrap_or_default()).collect();
        let grafted = graft(g, &blocks).expect("images keep the biarity of their operation");
        self.target.evaluate_sum(&grafted)
    }

    pub fn apply_sum(&self, x: &FormalSum) -> FormalSum {
        x.map_linear(|g| self.apply(g))
    }

    /// Checks that images have degree 0 and biarity preserved, that units,
    /// differentials and compositions are respected.
    pub fn check(&self) -> CheckReport {
        self.source.reset_truncated();
        self.target.reset_truncated();
        let policy = self.source.policy;
        let gens: Vec<Graph> = self.source.generators().iter().map(|d| Graph::single(d.clone())).collect();
        let mut reports = vec![CheckReport::check_each("degree and biarity", policy, false, &gens, |g| {
            let img = self.apply(g);
            let bad = img.filter(|h| h.degree() != g.degree() || h.biarity() != g.biarity());
            (bad, FormalSum::zero())
        })];
        reports.push(CheckReport::check_each("unit", policy, false, std::iter::once(&Graph::unit()), |_| {
            (self.apply_sum(&self.source.unit_element()), self.target.unit_element())
        }));
        let basis = self.source.basis();
        reports.push(CheckReport::check_each("d' phi = phi d", policy, false, &basis, |b| {
            let x = FormalSum::monomial(b.clone());
            (self.target.differential(&self.apply_sum(&x)), self.apply_sum(&self.source.differential(&x)))
        }));
        if let PropKind::Explicit { table, .. } = &self.source.kind {
            let keys: Vec<Graph> = table.keys().cloned().collect();
            reports.push(CheckReport::check_each("phi gamma = gamma (phi x phi)", policy, false, &keys, |k| {
                (self.apply_sum(&self.source.evaluate(k)), self.apply(k))
            }));
        }
        CheckReport::all("dg properad morphism", reports).with_truncated(self.source.was_truncated() || self.target.was_truncated())
    }
}

pub fn compose_prop(g: &PropMorphism, f: &PropMorphism) -> Result<PropMorphism, Error> {
    if f.target.name != g.source.name {
        return Err(Error::Argument(format!("cannot compose: {} is not {}", f.target.name, g.source.name)));
    }
    let images = f.images.iter().map(|(k, v)| (k.clone(), g.apply_sum(v))).collect();
    Ok(PropMorphism { source: f.source.clone(), target: g.target.clone(), images })
}

/// Post-composition `φ·α`.
pub fn tw_pushforward(phi: &PropMorphism, alpha: &TwistingMorphism) -> Result<TwistingMorphism, Error> {
    if phi.source.name != alpha.p.name {
        return Err(Error::Argument(format!("morphism starts at {}, twisting morphism lands in {}", phi.source.name, alpha.p.name)));
    }
    let values = alpha
        .alpha
        .values
        .iter()
        .map(|(k, v)| (k.clone(), phi.apply_sum(v)))
        .filter(|(_, v)| !v.is_zero())
        .collect();
    TwistingMorphism::new(alpha.c.clone(), phi.target.clone(), LinearMap { degree: -1, values })
}
