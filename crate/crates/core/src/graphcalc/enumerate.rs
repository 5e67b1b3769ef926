//! Enumeration of graph monomials over a finite set of generators.

use std::collections::{BTreeMap, BTreeSet};

use super::canon::orbit_rep;
use super::graft::{graft_graphs, placeholder};
use super::graph::{Dec, Graph, Slot};
use super::policy::TruncationPolicy;

/// All partial matchings between `p` lower outputs and `q` upper inputs with
/// at least one pair.
fn matchings(p: usize, q: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(i: usize, p: usize, q: usize, used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if i == p {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            return;
        }
        go(i + 1, p, q, used, cur, out);
        for j in 0..q {
            if !used[j] {
                used[j] = true;
                cur.push((i, j));
                go(i + 1, p, q, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = vec![];
    go(0, p, q, &mut vec![false; q], &mut vec![], &mut out);
    out
}

/// Every way of stacking `upper` on `lower` along a nonempty matching.
pub fn two_level_composites(upper: &Graph, lower: &Graph) -> Vec<Graph> {
    let (bu, bl) = (upper.biarity(), lower.biarity());
    let mut out = vec![];
    for m in matchings(bl.outputs, bu.inputs) {
        let matched_out: BTreeSet<usize> = m.iter().map(|&(i, _)| i).collect();
        let matched_in: BTreeSet<usize> = m.iter().map(|&(_, j)| j).collect();
        let edges: Vec<(Slot, Slot)> = m.iter().map(|&(i, j)| ((1, i), (0, j))).collect();
        let mut outputs: Vec<Slot> = (0..bu.outputs).map(|s| (0, s)).collect();
        outputs.extend((0..bl.outputs).filter(|s| !matched_out.contains(s)).map(|s| (1, s)));
        let mut inputs: Vec<Slot> = (0..bu.inputs).filter(|s| !matched_in.contains(s)).map(|s| (0, s)).collect();
        inputs.extend((0..bl.inputs).map(|s| (1, s)));
        let skeleton = Graph { vertices: vec![placeholder(upper), placeholder(lower)], edges, inputs, outputs };
        out.push(graft_graphs(&skeleton, &[upper, lower]));
    }
    out
}

/// Orbit representatives of all connected graphs over `generators` admitted
/// by `policy`, sorted by weight then graph order. The flag reports whether
/// admissible content was cut off at the weight bound.
pub fn enumerate_reps(generators: &[Dec], policy: &TruncationPolicy) -> (Vec<Graph>, bool) {
    let slack = policy.max_weight;
    let loose = TruncationPolicy {
        max_inputs: policy.max_inputs + slack,
        max_outputs: policy.max_outputs + slack,
        min_degree: i64::MIN / 4,
        max_degree: i64::MAX / 4,
        ..*policy
    };
    let mut by_weight: BTreeMap<usize, BTreeSet<Graph>> = BTreeMap::new();
    for g in generators {
        if !policy.admits_vertex(g.outs, g.ins) || g.weight > policy.max_weight {
            continue;
        }
        by_weight.entry(g.weight).or_default().insert(orbit_rep(&Graph::single(g.clone())).0);
    }
    for w in 2..=policy.max_weight {
        let mut found = BTreeSet::new();
        for a in 1..w {
            let b = w - a;
            let (Some(us), Some(ls)) = (by_weight.get(&a), by_weight.get(&b)) else { continue };
            for u in us {
                for l in ls {
                    for g in two_level_composites(u, l) {
                        if loose.admits(&g) {
                            found.insert(orbit_rep(&g).0);
                        }
                    }
                }
            }
        }
        if !found.is_empty() {
            by_weight.entry(w).or_default().extend(found);
        }
    }
    let all: Vec<Graph> = by_weight.values().flatten().filter(|g| policy.admits(g)).cloned().collect();
    // Cut off when some generator can still be stacked onto a top-weight graph.
    let truncated = generators.iter().any(|gen| {
        let single = Graph::single(gen.clone());
        all.iter().any(|g| {
            g.weight() + gen.weight > policy.max_weight
                && ((gen.ins > 0 && g.biarity().outputs > 0) || (gen.outs > 0 && g.biarity().inputs > 0))
        }) && policy.admits_vertex(single.biarity().outputs, single.biarity().inputs)
    });
    (all, truncated)
}
