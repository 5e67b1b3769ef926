//! Curved conilpotent coproperads.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::glinalg::{Biarity, Scalar};
use crate::graphcalc::{
    delta_graph, enumerate_reps, graft, lookup_scalar, quotient, Coderivation, Dec, FormalSum, Graph, Split,
    TruncationPolicy,
};

use super::properad::single_lookup;
use super::report::{in_unit, CheckReport};

#[derive(Clone, Debug)]
pub enum CoKind {
    /// Finitely many cogenerators with structure constants. `delta` sends a
    /// cogenerator to a sum of two-vertex graphs `upper ∘ lower`; which
    /// vertex is upper is read off the edge direction.
    Explicit {
        cogens: Vec<Dec>,
        delta: BTreeMap<Arc<str>, FormalSum>,
        d: BTreeMap<Arc<str>, FormalSum>,
        theta: BTreeMap<Arc<str>, Scalar>,
    },
    /// The cofree conilpotent coproperad on `cogens` with a coderivation and
    /// a curvature given on orbit representatives with one or two vertices.
    Cofree { cogens: Vec<Dec>, d: Coderivation, theta: BTreeMap<Graph, Scalar> },
}

#[derive(Debug)]
pub struct CurvedCoproperad {
    pub name: String,
    pub kind: CoKind,
    pub policy: TruncationPolicy,
    pub conilpotent: bool,
    /// For bar constructions: cogenerator name to the properad element it
    /// suspends.
    pub sources: BTreeMap<Arc<str>, Graph>,
    truncated: AtomicBool,
}

impl Clone for CurvedCoproperad {
    fn clone(&self) -> Self {
        CurvedCoproperad {
            name: self.name.clone(),
            kind: self.kind.clone(),
            policy: self.policy,
            conilpotent: self.conilpotent,
            sources: self.sources.clone(),
            truncated: AtomicBool::new(self.was_truncated()),
        }
    }
}

/// Reads a two-vertex graph as `sign * graft(skeleton, [upper, lower])`.
pub fn split_two_vertex(g: &Graph, coeff: &Scalar) -> Split {
    let upper = if g.edges.iter().any(|&(_, (b, _))| b == 1) { 1 } else { 0 };
    let (skeleton, subs, sign) = quotient(g, &[vec![upper], vec![1 - upper]]).expect("two connected vertices");
    let mut subs = subs.into_iter();
    Split { coeff: sign * coeff, skeleton, upper: subs.next().unwrap(), lower: subs.next().unwrap() }
}

impl CurvedCoproperad {
    pub fn new(name: &str, kind: CoKind, policy: TruncationPolicy) -> Self {
        CurvedCoproperad {
            name: name.into(),
            kind,
            policy,
            conilpotent: true,
            sources: BTreeMap::new(),
            truncated: AtomicBool::new(false),
        }
    }

    pub fn with_policy(&self, policy: TruncationPolicy) -> Self {
        CurvedCoproperad { policy, truncated: AtomicBool::new(false), ..self.clone() }
    }

    pub fn was_truncated(&self) -> bool {
        self.truncated.load(Ordering::Relaxed)
    }

    pub fn reset_truncated(&self) {
        self.truncated.store(false, Ordering::Relaxed);
    }

    fn mark_truncated(&self) {
        self.truncated.store(true, Ordering::Relaxed);
    }

    pub fn cogenerators(&self) -> &[Dec] {
        match &self.kind {
            CoKind::Explicit { cogens, .. } | CoKind::Cofree { cogens, .. } => cogens,
        }
    }

    pub fn cogenerator(&self, name: &str) -> Option<&Dec> {
        self.cogenerators().iter().find(|d| &*d.name == name)
    }

    pub fn is_cofree(&self) -> bool {
        matches!(self.kind, CoKind::Cofree { .. })
    }

    /// Orbit representatives of a basis of `C̄` within the policy.
    pub fn basis(&self) -> Vec<Graph> {
        match &self.kind {
            CoKind::Explicit { cogens, .. } => {
                cogens.iter().map(|d| Graph::single(d.clone())).filter(|g| self.policy.admits(g)).collect()
            }
            CoKind::Cofree { cogens, .. } => {
                let (reps, t) = enumerate_reps(cogens, &self.policy);
                if t {
                    self.mark_truncated();
                }
                reps
            }
        }
    }

    /// Orbit representatives of every piece that can occur in a Δ_(1,1) of
    /// a basis element; maps out of `C` are tabulated on these.
    pub fn domain_basis(&self) -> Vec<Graph> {
        let wide = self.with_policy(self.policy.widened());
        let out = wide.basis();
        if wide.was_truncated() {
            self.mark_truncated();
        }
        out
    }

    /// Reduced Δ_(1,1) of a monomial.
    pub fn delta(&self, x: &Graph) -> Vec<Split> {
        match &self.kind {
            CoKind::Explicit { delta, .. } => {
                single_lookup(delta, x).iter().map(|(g, c)| split_two_vertex(g, c)).collect()
            }
            CoKind::Cofree { .. } => delta_graph(x),
        }
    }

    pub fn delta_sum(&self, x: &FormalSum) -> Vec<Split> {
        let mut out = vec![];
        for (g, c) in x.iter() {
            for mut s in self.delta(g) {
                s.coeff *= c;
                out.push(s);
            }
        }
        out
    }

    pub fn differential(&self, x: &FormalSum) -> FormalSum {
        match &self.kind {
            CoKind::Explicit { d, .. } => x.map_linear(|g| single_lookup(d, g)),
            CoKind::Cofree { d, .. } => {
                let (y, t) = d.apply(x).truncate(|g| self.policy.admits_piece(g));
                if t {
                    self.mark_truncated();
                }
                y
            }
        }
    }

    pub fn theta(&self, g: &Graph) -> Scalar {
        if g.is_unit() || g.biarity() != Biarity::UNIT {
            return Scalar::zero();
        }
        match &self.kind {
            CoKind::Explicit { theta, .. } => {
                if g.len() == 1 {
                    theta.get(&g.vertices[0].name).cloned().unwrap_or_else(Scalar::zero)
                } else {
                    Scalar::zero()
                }
            }
            CoKind::Cofree { theta, .. } => lookup_scalar(theta, g),
        }
    }

    pub fn theta_sum(&self, x: &FormalSum) -> Scalar {
        x.eval_linear(|g| self.theta(g))
    }

    /// `(θ ⊗ id − id ⊗ θ)·Δ_(1,1)(x)`, or its negative for the uncorrected
    /// sign.
    pub fn curvature_term(&self, x: &Graph, old_sign: bool) -> FormalSum {
        let mut out = FormalSum::zero();
        let unit = FormalSum::unit();
        for s in self.delta(x) {
            let tu = self.theta(&s.upper);
            if !tu.is_zero() {
                let t = graft(&s.skeleton, &[unit.clone(), FormalSum::monomial(s.lower.clone())]).expect("biarity");
                out.add_scaled(&t, &(&s.coeff * &tu));
            }
            let tl = self.theta(&s.lower);
            if !tl.is_zero() {
                let t = graft(&s.skeleton, &[FormalSum::monomial(s.upper.clone()), unit.clone()]).expect("biarity");
                out.add_scaled(&t, &-(&s.coeff * &tl));
            }
        }
        if old_sign {
            -out
        } else {
            out
        }
    }
}

/// Checks axioms (a) and (b) on every basis element within the policy.
/// With `old_sign` the right-hand side of (a) is negated.
pub fn check_curved_coproperad(c: &CurvedCoproperad, old_sign: bool) -> CheckReport {
    c.reset_truncated();
    let basis = c.basis();
    let policy = c.policy;
    let a = CheckReport::check_each("axiom (a): d^2 = (theta x id - id x theta) Delta", policy, false, &basis, |x| {
        let m = FormalSum::monomial(x.clone());
        (c.differential(&c.differential(&m)), c.curvature_term(x, old_sign))
    });
    let b = CheckReport::check_each("axiom (b): theta d = 0", policy, false, &basis, |x| {
        (in_unit(c.theta_sum(&c.differential(&FormalSum::monomial(x.clone())))), FormalSum::zero())
    });
    CheckReport::all("curved coproperad", vec![a, b]).with_truncated(c.was_truncated())
}
