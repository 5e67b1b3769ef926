//! Canonical forms of graph monomials.
//!
//! Vertex slots are ordered, so once a starting vertex is fixed a depth-first
//! walk (output slots first, then input slots, each in slot order) visits the
//! vertices in an order that depends only on the isomorphism class. For a
//! connected graph with at least one labelled leg this makes the labelled
//! graph rigid, and walking from the vertex carrying output leg 0 (input leg
//! 0 when there are no outputs) gives a canonical listing.

use crate::glinalg::{koszul_sign, Scalar};
use crate::Error;

use super::graph::{Graph, Slot};

/// Depth-first visiting order starting at `start`.
fn walk(g: &Graph, start: usize) -> Vec<usize> {
    let outs = g.out_links();
    let ins = g.in_links();
    let mut seen = vec![false; g.vertices.len()];
    let mut order = vec![];
    let mut stack = vec![start];
    // Explicit stack that mimics recursive pre-order: push neighbours in
    // reverse so the first slot is visited first.
    while let Some(v) = stack.pop() {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        order.push(v);
        let mut next = vec![];
        for (w, _) in outs[v].iter().chain(ins[v].iter()).flatten() {
            if !seen[*w] {
                next.push(*w);
            }
        }
        stack.extend(next.into_iter().rev());
    }
    order
}

/// Rebuilds `g` with vertex `order[k]` moved to position `k`.
fn reorder(g: &Graph, order: &[usize]) -> Graph {
    let mut new_index = vec![0; order.len()];
    for (k, &old) in order.iter().enumerate() {
        new_index[old] = k;
    }
    let map = |(v, s): Slot| (new_index[v], s);
    let mut edges: Vec<(Slot, Slot)> = g.edges.iter().map(|&(a, b)| (map(a), map(b))).collect();
    edges.sort();
    Graph {
        vertices: order.iter().map(|&i| g.vertices[i].clone()).collect(),
        edges,
        inputs: g.inputs.iter().map(|&s| map(s)).collect(),
        outputs: g.outputs.iter().map(|&s| map(s)).collect(),
    }
}

fn reorder_sign(g: &Graph, order: &[usize]) -> Scalar {
    let degrees: Vec<i64> = g.vertices.iter().map(|v| v.degree).collect();
    koszul_sign(order, &degrees).expect("walk order is a permutation")
}

/// The canonical representative of `g` and the Koszul sign `s` with
/// `g = s * canonical` as elements.
pub fn canonicalize(g: &Graph) -> Result<(Graph, Scalar), Error> {
    g.validate()?;
    Ok(canonicalize_unchecked(g))
}

pub(crate) fn canonicalize_unchecked(g: &Graph) -> (Graph, Scalar) {
    if g.is_unit() {
        return (g.clone(), Scalar::one());
    }
    let start = g.outputs.first().or(g.inputs.first()).map(|&(v, _)| v).unwrap_or(0);
    let order = walk(g, start);
    debug_assert_eq!(order.len(), g.vertices.len(), "graph must be connected");
    (reorder(g, &order), reorder_sign(g, &order))
}

/// A label-free representative of the 𝕊-orbit of `g`.
///
/// Returns `(rep, out_map, in_map, sign)` with
/// `g = sign * rep.relabel(out_map, in_map)`. `rep` is canonical, and its legs
/// are numbered by position `(vertex, slot)`.
pub fn orbit_rep(g: &Graph) -> (Graph, Vec<usize>, Vec<usize>, Scalar) {
    if g.is_unit() {
        return (g.clone(), vec![0], vec![0], Scalar::one());
    }
    let mut starts: Vec<usize> = g.outputs.iter().map(|&(v, _)| v).collect();
    if starts.is_empty() {
        starts = g.inputs.iter().map(|&(v, _)| v).collect();
    }
    starts.sort_unstable();
    starts.dedup();
    let mut best: Option<(Graph, Vec<usize>, Vec<usize>, Scalar)> = None;
    for start in starts {
        let order = walk(g, start);
        let mut h = reorder(g, &order);
        // Renumber legs by position; `lab[k]` is the new label of old leg k.
        let out_lab = position_labels(&h.outputs);
        let in_lab = position_labels(&h.inputs);
        let mut outputs = h.outputs.clone();
        for (k, &s) in h.outputs.iter().enumerate() {
            outputs[out_lab[k]] = s;
        }
        let mut inputs = h.inputs.clone();
        for (k, &s) in h.inputs.iter().enumerate() {
            inputs[in_lab[k]] = s;
        }
        h.outputs = outputs;
        h.inputs = inputs;
        // The walk started at the vertex of the smallest output position,
        // which is where the relabelled leg 0 sits, so `h` is canonical.
        let better = match &best {
            None => true,
            Some((b, ..)) => h < *b,
        };
        if better {
            let sign = reorder_sign(g, &order);
            // rep.relabel(map) must send rep's leg out_lab[k] back to k.
            let mut out_map = vec![0; out_lab.len()];
            for (k, &l) in out_lab.iter().enumerate() {
                out_map[l] = k;
            }
            let mut in_map = vec![0; in_lab.len()];
            for (k, &l) in in_lab.iter().enumerate() {
                in_map[l] = k;
            }
            best = Some((h, out_map, in_map, sign));
        }
    }
    let (rep, out_map, in_map, sign) = best.expect("graph has legs");
    let (canon, extra) = canonicalize_unchecked(&rep);
    debug_assert!(extra.is_one() && canon == rep, "orbit representative must be canonical");
    (rep, out_map, in_map, sign)
}

fn position_labels(legs: &[Slot]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..legs.len()).collect();
    idx.sort_by_key(|&k| legs[k]);
    let mut lab = vec![0; legs.len()];
    for (new, &old) in idx.iter().enumerate() {
        lab[old] = new;
    }
    lab
}
