//! The unital associative operad as a properad concentrated in biarities
//! `(1, n)`: `uAs(1, n) = k[S_n]`, the identity permutation being `μ_n`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::glinalg::Scalar;
use crate::graphcalc::{orbit_rep, two_level_composites, Dec, FormalSum, Graph, TruncationPolicy};
use crate::structures::{PropKind, SemiAugProperad};

pub fn mu(n: usize) -> Dec {
    Dec::new(&format!("m{n}"), 0, 1, n)
}

/// Reads a tree of `μ`'s in planar order: the composite is `μ_n` with the
/// global input legs in the order the leaves are met.
pub fn planar_value(g: &Graph) -> Graph {
    let ins = g.in_links();
    let root = g.outputs[0].0;
    let mut leaves = vec![];
    fn visit(v: usize, ins: &[Vec<Result<(usize, usize), usize>>], leaves: &mut Vec<usize>) {
        for link in &ins[v] {
            match link {
                Ok((w, _)) => visit(*w, ins, leaves),
                Err(leg) => leaves.push(*leg),
            }
        }
    }
    visit(root, &ins, &mut leaves);
    let n = leaves.len();
    let mut out = Graph::single(mu(n));
    for (pos, &leg) in leaves.iter().enumerate() {
        out.inputs[leg] = (0, pos);
    }
    out
}

/// `uAs` with operations `μ_0, ..., μ_k` for every `k` a vertex may have
/// under `policy`; `ε(μ_1) = 1`.
pub fn uas(policy: TruncationPolicy) -> SemiAugProperad {
    let k = policy.max_inputs + policy.max_weight.saturating_sub(1);
    let ops: Vec<Dec> = (0..=k).map(mu).collect();
    let mut table = BTreeMap::new();
    for a in &ops {
        for b in &ops {
            for g in two_level_composites(&Graph::single(a.clone()), &Graph::single(b.clone())) {
                if g.biarity().inputs > k {
                    continue;
                }
                let rep = orbit_rep(&g).0;
                let v = planar_value(&rep);
                table.insert(rep, FormalSum::monomial(v));
            }
        }
    }
    let kind = PropKind::Explicit { ops, unit: Arc::from("m1"), table };
    let mut p = SemiAugProperad::new("uAs", kind, policy);
    p.epsilon.insert(Arc::from("m1"), Scalar::one());
    p
}
