//! Semi-augmented dg properads.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::glinalg::Scalar;
use crate::graphcalc::{
    apply_derivation, convex_subsets, enumerate_reps, graft, lookup_equivariant, orbit_rep, quotient, Dec, FormalSum, Graph,
    TruncationPolicy,
};
use crate::Error;

use super::report::CheckReport;

/// How composition is computed.
#[derive(Clone, Debug)]
pub enum PropKind {
    /// A finite basis of operations with structure constants: `table` sends
    /// the orbit representative of every two-vertex composite to a sum of
    /// one-vertex graphs (legs numbered like the key's legs). Composites of
    /// admissible arity missing from the table vanish.
    Explicit { ops: Vec<Dec>, unit: Arc<str>, table: BTreeMap<Graph, FormalSum> },
    /// The free properad on `generators`; composition is grafting.
    Free { generators: Vec<Dec> },
}

#[derive(Debug)]
pub struct SemiAugProperad {
    pub name: String,
    pub kind: PropKind,
    /// Differential on operations (explicit) or generators (free), as sums
    /// over plain one-vertex graphs.
    pub d: BTreeMap<Arc<str>, FormalSum>,
    /// Semi-augmentation on operations of biarity (1,1); absent means 0.
    pub epsilon: BTreeMap<Arc<str>, Scalar>,
    pub policy: TruncationPolicy,
    /// For cobar constructions: generator name to the coproperad element it
    /// desuspends.
    pub sources: BTreeMap<Arc<str>, Graph>,
    truncated: AtomicBool,
}

impl Clone for SemiAugProperad {
    fn clone(&self) -> Self {
        SemiAugProperad {
            name: self.name.clone(),
            kind: self.kind.clone(),
            d: self.d.clone(),
            epsilon: self.epsilon.clone(),
            policy: self.policy,
            sources: self.sources.clone(),
            truncated: AtomicBool::new(self.was_truncated()),
        }
    }
}

/// Looks up a name-keyed table on a labelled one-vertex graph.
pub fn single_lookup(table: &BTreeMap<Arc<str>, FormalSum>, g: &Graph) -> FormalSum {
    if g.len() != 1 {
        return FormalSum::zero();
    }
    let (rep, om, im, s) = orbit_rep(g);
    table.get(&rep.vertices[0].name).map_or_else(FormalSum::zero, |v| v.relabel(&om, &im).scale(&s))
}

/// Normalises a composite `g ↦ value` to the orbit representative of `g`.
pub fn normalise_entry(g: &Graph, value: &FormalSum) -> (Graph, FormalSum) {
    let (rep, om, im, s) = orbit_rep(g);
    (rep, value.relabel(&invert(&om), &invert(&im)).scale(&s))
}

pub fn invert(p: &[usize]) -> Vec<usize> {
    let mut q = vec![0; p.len()];
    for (k, &v) in p.iter().enumerate() {
        q[v] = k;
    }
    q
}

impl SemiAugProperad {
    pub fn new(name: &str, kind: PropKind, policy: TruncationPolicy) -> Self {
        SemiAugProperad {
            name: name.into(),
            kind,
            d: BTreeMap::new(),
            epsilon: BTreeMap::new(),
            policy,
            sources: BTreeMap::new(),
            truncated: AtomicBool::new(false),
        }
    }

    pub fn with_policy(&self, policy: TruncationPolicy) -> Self {
        SemiAugProperad { policy, truncated: AtomicBool::new(false), ..self.clone() }
    }

    fn mark_truncated(&self) {
        self.truncated.store(true, Ordering::Relaxed);
    }

    pub fn was_truncated(&self) -> bool {
        self.truncated.load(Ordering::Relaxed)
    }

    pub fn reset_truncated(&self) {
        self.truncated.store(false, Ordering::Relaxed);
    }

    pub fn generators(&self) -> &[Dec] {
        match &self.kind {
            PropKind::Explicit { ops, .. } => ops,
            PropKind::Free { generators } => generators,
        }
    }

    pub fn generator(&self, name: &str) -> Option<&Dec> {
        self.generators().iter().find(|d| &*d.name == name)
    }

    /// `e(id)`.
    pub fn unit_element(&self) -> FormalSum {
        match &self.kind {
            PropKind::Explicit { ops, unit, .. } => {
                let dec = ops.iter().find(|d| d.name == *unit).expect("unit operation is listed");
                FormalSum::monomial(Graph::single(dec.clone()))
            }
            PropKind::Free { .. } => FormalSum::unit(),
        }
    }

    pub fn is_unit_basis(&self, g: &Graph) -> bool {
        match &self.kind {
            PropKind::Explicit { unit, .. } => g.len() == 1 && g.vertices[0].name == *unit,
            PropKind::Free { .. } => g.is_unit(),
        }
    }

    /// Orbit representatives of a basis within the policy, the unit first.
    pub fn basis(&self) -> Vec<Graph> {
        match &self.kind {
            PropKind::Explicit { ops, unit, .. } => {
                let mut out: Vec<Graph> = ops.iter().filter(|d| d.name == *unit).map(|d| Graph::single(d.clone())).collect();
                out.extend(
                    ops.iter()
                        .filter(|d| d.name != *unit)
                        .filter(|d| d.weight <= self.policy.max_weight && self.policy.admits_vertex(d.outs, d.ins))
                        .map(|d| Graph::single(d.clone())),
                );
                out
            }
            PropKind::Free { generators } => {
                let (reps, t) = enumerate_reps(generators, &self.policy);
                if t {
                    self.mark_truncated();
                }
                let mut out = vec![Graph::unit()];
                out.extend(reps);
                out
            }
        }
    }

    /// Basis representatives of every piece of an admitted element.
    pub fn domain_basis(&self) -> Vec<Graph> {
        match &self.kind {
            PropKind::Explicit { .. } => self.basis(),
            PropKind::Free { .. } => {
                let wide = self.with_policy(self.policy.widened());
                let out = wide.basis();
                if wide.was_truncated() {
                    self.mark_truncated();
                }
                out
            }
        }
    }

    /// Basis representatives other than the unit: they index `P̄` through
    /// `b ↦ b - ε(b) e(id)`.
    pub fn reduced_basis(&self) -> Vec<Graph> {
        self.domain_basis().into_iter().filter(|g| !self.is_unit_basis(g)).collect()
    }

    /// Evaluates a graph of basis operations to an element.
    pub fn evaluate(&self, g: &Graph) -> FormalSum {
        match &self.kind {
            PropKind::Free { .. } => {
                if self.policy.admits_piece(g) {
                    FormalSum::monomial(g.clone())
                } else {
                    self.mark_truncated();
                    FormalSum::zero()
                }
            }
            PropKind::Explicit { table, .. } => self.contract(g, table),
        }
    }

    fn contract(&self, g: &Graph, table: &BTreeMap<Graph, FormalSum>) -> FormalSum {
        if g.is_unit() {
            return self.unit_element();
        }
        if g.len() == 1 {
            return FormalSum::monomial(g.clone());
        }
        let n = g.len();
        let mut best: Option<(usize, Graph, Vec<Graph>, Scalar)> = None;
        for part in convex_subsets(g, 2) {
            let mut parts = vec![part.clone()];
            parts.extend((0..n).filter(|j| !part.contains(j)).map(|j| vec![j]));
            let Some((skel, subs, sign)) = quotient(g, &parts) else { continue };
            let b = subs[0].biarity();
            let key = b.outputs + b.inputs;
            if best.as_ref().is_none_or(|(k, ..)| key < *k) {
                best = Some((key, skel, subs, sign));
            }
        }
        let (_, skel, subs, sign) = best.expect("connected graphs with two vertices have a contractible edge");
        let b = subs[0].biarity();
        let value = lookup_equivariant(table, &subs[0]);
        if value.is_zero() {
            if !self.policy.admits_vertex(b.outputs, b.inputs) {
                self.mark_truncated();
            }
            return FormalSum::zero();
        }
        let mut blocks = vec![value];
        blocks.extend(subs[1..].iter().map(|s| FormalSum::monomial(s.clone())));
        let h = graft(&skel, &blocks).expect("structure constants preserve biarity");
        h.map_linear(|t| self.contract(t, table)).scale(&sign)
    }

    /// Evaluates every monomial of a sum.
    pub fn evaluate_sum(&self, x: &FormalSum) -> FormalSum {
        x.map_linear(|g| self.evaluate(g))
    }

    /// Composition along `skeleton`: substitute and evaluate.
    pub fn compose(&self, skeleton: &Graph, blocks: &[FormalSum]) -> Result<FormalSum, Error> {
        Ok(self.evaluate_sum(&graft(skeleton, blocks)?))
    }

    pub fn differential(&self, x: &FormalSum) -> FormalSum {
        match &self.kind {
            PropKind::Explicit { .. } => x.map_linear(|g| single_lookup(&self.d, g)),
            PropKind::Free { .. } => {
                let y = apply_derivation(x, &|dec: &Dec| self.d.get(&dec.name).cloned().unwrap_or_default());
                let (y, t) = y.truncate(|g| self.policy.admits_piece(g));
                if t {
                    self.mark_truncated();
                }
                y
            }
        }
    }

    pub fn epsilon_of_graph(&self, g: &Graph) -> Scalar {
        if self.is_unit_basis(g) {
            return Scalar::one();
        }
        if g.len() == 1 && g.biarity() == crate::glinalg::Biarity::UNIT {
            return self.epsilon.get(&g.vertices[0].name).cloned().unwrap_or_else(Scalar::zero);
        }
        Scalar::zero()
    }

    pub fn epsilon_of(&self, x: &FormalSum) -> Scalar {
        x.eval_linear(|g| self.epsilon_of_graph(g))
    }

    /// `b̄ = b - ε(b) e(id)` as an element.
    pub fn lift(&self, x: &FormalSum) -> FormalSum {
        x - &self.unit_element().scale(&self.epsilon_of(x))
    }

    /// Coordinates in the basis `{b̄}` of the component in `P̄ = ker ε`.
    pub fn reduce(&self, x: &FormalSum) -> FormalSum {
        x.filter(|g| !self.is_unit_basis(g))
    }

    /// Checks `d² = 0`, `ε e = id`, the unit laws and the Leibniz rule on
    /// all structure constants.
    pub fn check(&self) -> CheckReport {
        self.reset_truncated();
        let basis = self.basis();
        let policy = self.policy;
        let mut reports = vec![];
        reports.push(CheckReport::check_each("d^2 = 0", policy, false, &basis, |b| {
            let x = FormalSum::monomial(b.clone());
            (self.differential(&self.differential(&x)), FormalSum::zero())
        }));
        let u = self.unit_element();
        reports.push(CheckReport::check_each("epsilon e = id", policy, false, std::iter::once(&Graph::unit()), |_| {
            (super::report::in_unit(self.epsilon_of(&u)), FormalSum::unit())
        }));
        reports.push(CheckReport::check_each("d e = 0", policy, false, std::iter::once(&Graph::unit()), |_| {
            (self.differential(&u), FormalSum::zero())
        }));
        if let PropKind::Explicit { table, .. } = &self.kind {
            let keys: Vec<Graph> = table.keys().cloned().collect();
            reports.push(CheckReport::check_each("Leibniz rule", policy, false, &keys, |k| {
                let lhs = self.differential(&lookup_equivariant(table, k));
                let mut rhs = FormalSum::zero();
                let parts = [vec![0], vec![1]];
                let (skel, subs, sign) = quotient(k, &parts).expect("two connected vertices");
                let a = FormalSum::monomial(subs[0].clone());
                let b = FormalSum::monomial(subs[1].clone());
                let t1 = self.compose(&skel, &[self.differential(&a), b.clone()]).unwrap_or_default();
                let t2 = self.compose(&skel, &[a, self.differential(&b)]).unwrap_or_default();
                rhs.add_scaled(&t1, &sign);
                rhs.add_scaled(&t2, &(sign * Scalar::sign(subs[0].degree())));
                (lhs, rhs)
            }));
        }
        CheckReport::all("semi-augmented dg properad", reports).with_truncated(self.was_truncated())
    }
}
