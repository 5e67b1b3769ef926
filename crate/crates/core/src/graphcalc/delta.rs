//! Partitions of graph monomials: contraction of subgraphs and the reduced
//! infinitesimal decomposition Δ_(1,1).

use std::collections::BTreeMap;

use crate::glinalg::{koszul_sign, Scalar};

use super::canon::canonicalize_unchecked;
use super::graft::placeholder;
use super::graph::{Graph, Slot};
use super::sum::FormalSum;

/// A two-level piece `upper ⊗ lower`, wired together by `skeleton`
/// (vertex 0 is the upper placeholder, vertex 1 the lower one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub coeff: Scalar,
    pub skeleton: Graph,
    pub upper: Graph,
    pub lower: Graph,
}

/// Induced subgraph on `part` (vertices kept in the given order) with its
/// dangling slots numbered as legs by position.
fn induce(g: &Graph, part: &[usize]) -> (Graph, BTreeMap<Slot, usize>, BTreeMap<Slot, usize>) {
    let mut local = BTreeMap::new();
    for (i, &v) in part.iter().enumerate() {
        local.insert(v, i);
    }
    let outs = g.out_links();
    let ins = g.in_links();
    let mut edges = vec![];
    let mut outputs = vec![];
    let mut inputs = vec![];
    let mut out_leg = BTreeMap::new();
    let mut in_leg = BTreeMap::new();
    for (i, &v) in part.iter().enumerate() {
        for (s, link) in outs[v].iter().enumerate() {
            match link {
                Ok((u, t)) if local.contains_key(u) => edges.push(((i, s), (local[u], *t))),
                _ => {
                    out_leg.insert((v, s), outputs.len());
                    outputs.push((i, s));
                }
            }
        }
        for (s, link) in ins[v].iter().enumerate() {
            match link {
                Ok((w, _)) if local.contains_key(w) => {}
                _ => {
                    in_leg.insert((v, s), inputs.len());
                    inputs.push((i, s));
                }
            }
        }
    }
    edges.sort();
    let sub = Graph { vertices: part.iter().map(|&v| g.vertices[v].clone()).collect(), edges, inputs, outputs };
    (sub, out_leg, in_leg)
}

/// Collapses each part to one placeholder vertex. Returns the skeleton, the
/// induced subgraphs, and the Koszul sign of listing the vertices part by
/// part, so that `g = sign * graft(skeleton, subs)`. Parts must be
/// connected and the quotient acyclic; returns `None` otherwise.
pub fn quotient(g: &Graph, parts: &[Vec<usize>]) -> Option<(Graph, Vec<Graph>, Scalar)> {
    let order: Vec<usize> = parts.iter().flatten().copied().collect();
    if order.len() != g.vertices.len() {
        return None;
    }
    let degrees: Vec<i64> = g.vertices.iter().map(|v| v.degree).collect();
    let sign = koszul_sign(&order, &degrees).ok()?;
    let mut part_of = vec![0; g.vertices.len()];
    for (p, part) in parts.iter().enumerate() {
        if !g.is_connected_subset(part) {
            return None;
        }
        for &v in part {
            part_of[v] = p;
        }
    }
    let mut subs = vec![];
    let mut out_legs = vec![];
    let mut in_legs = vec![];
    for part in parts {
        let (sub, ol, il) = induce(g, part);
        subs.push(sub);
        out_legs.push(ol);
        in_legs.push(il);
    }
    let mut edges = vec![];
    for &(a, b) in &g.edges {
        let (pa, pb) = (part_of[a.0], part_of[b.0]);
        if pa != pb {
            edges.push(((pa, out_legs[pa][&a]), (pb, in_legs[pb][&b])));
        }
    }
    edges.sort();
    let skeleton = Graph {
        vertices: subs.iter().map(placeholder).collect(),
        edges,
        inputs: g.inputs.iter().map(|&x| (part_of[x.0], in_legs[part_of[x.0]][&x])).collect(),
        outputs: g.outputs.iter().map(|&x| (part_of[x.0], out_legs[part_of[x.0]][&x])).collect(),
    };
    skeleton.topological_order()?;
    Some((skeleton, subs, sign))
}

/// All two-level cuts of a monomial into a connected upper part and a
/// connected, down-closed lower part, both nonempty. Several edges may be
/// severed by one cut.
pub fn delta_graph(g: &Graph) -> Vec<Split> {
    let n = g.vertices.len();
    let mut out = vec![];
    if n < 2 {
        return out;
    }
    for mask in 1..(1u64 << n) - 1 {
        let lower: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let upper: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        // no edge from an upper vertex into a lower one
        if g.edges.iter().any(|&((a, _), (b, _))| mask >> a & 1 == 0 && mask >> b & 1 == 1) {
            continue;
        }
        let Some((skeleton, subs, sign)) = quotient(g, &[upper, lower]) else { continue };
        let mut subs = subs.into_iter();
        let (up, su) = canonicalize_unchecked(&subs.next().unwrap());
        let (lo, sl) = canonicalize_unchecked(&subs.next().unwrap());
        out.push(Split { coeff: sign * su * sl, skeleton, upper: up, lower: lo });
    }
    out
}

/// Reduced Δ_(1,1) of a sum.
pub fn delta_11(x: &FormalSum) -> Vec<Split> {
    let mut out = vec![];
    for (g, c) in x.iter() {
        for mut s in delta_graph(g) {
            s.coeff *= c;
            out.push(s);
        }
    }
    out
}

/// Convex connected vertex subsets of size `k` (as sorted index lists).
/// A subset is convex when no directed path leaves it and comes back.
pub fn convex_subsets(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let n = g.vertices.len();
    let mut out = vec![];
    if k == 0 || k > n || n > 63 {
        return out;
    }
    let above: Vec<_> = (0..n).map(|v| g.above(v)).collect();
    for mask in 1u64..(1u64 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let part: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if !g.is_connected_subset(&part) {
            continue;
        }
        // convex: no outside vertex w lies above a member and below a member
        let convex = (0..n).filter(|&w| mask >> w & 1 == 0).all(|w| {
            let above_member = part.iter().any(|&v| above[v].contains(&w));
            let below_member = part.iter().any(|&v| above[w].contains(&v));
            !(above_member && below_member)
        });
        if convex {
            out.push(part);
        }
    }
    out
}
