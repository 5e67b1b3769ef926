//! Graph substitution.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::glinalg::Scalar;
use crate::Error;

use super::canon::orbit_rep;
use super::graph::{Dec, Graph, Slot};
use super::sum::FormalSum;

#[derive(Clone, Copy)]
enum Port {
    Real(Slot),
    Leg(usize),
}

/// Substitutes `blocks[i]` for vertex `i` of `skeleton`. The vertex list of
/// the result is the concatenation of the blocks' vertex lists, so no sign
/// is introduced. Unit blocks are spliced out.
pub fn graft_graphs(skeleton: &Graph, blocks: &[&Graph]) -> Graph {
    assert_eq!(skeleton.vertices.len(), blocks.len());
    if skeleton.is_unit() {
        return Graph::unit();
    }
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut vertices = vec![];
    let mut edges = vec![];
    for b in blocks {
        offsets.push(vertices.len());
        let off = vertices.len();
        vertices.extend(b.vertices.iter().cloned());
        edges.extend(b.edges.iter().map(|&((a, s), (c, t))| ((a + off, s), (c + off, t))));
    }
    if vertices.is_empty() {
        return Graph::unit();
    }
    let in_links = skeleton.in_links();
    let shift = |i: usize, (v, s): Slot| (v + offsets[i], s);
    // What feeds input slot `k` of skeleton vertex `i`.
    fn feed(i: usize, k: usize, in_links: &[Vec<Result<Slot, usize>>], blocks: &[&Graph], offsets: &[usize]) -> Port {
        match in_links[i][k] {
            Err(leg) => Port::Leg(leg),
            Ok((w, s)) => out_port(w, s, in_links, blocks, offsets),
        }
    }
    fn out_port(w: usize, s: usize, in_links: &[Vec<Result<Slot, usize>>], blocks: &[&Graph], offsets: &[usize]) -> Port {
        if blocks[w].is_unit() {
            feed(w, 0, in_links, blocks, offsets)
        } else {
            let (v, t) = blocks[w].outputs[s];
            Port::Real((v + offsets[w], t))
        }
    }
    let mut inputs = vec![(0, 0); skeleton.inputs.len()];
    for (i, b) in blocks.iter().enumerate() {
        for (k, &slot) in b.inputs.iter().enumerate() {
            let r = shift(i, slot);
            match feed(i, k, &in_links, blocks, &offsets) {
                Port::Real(o) => edges.push((o, r)),
                Port::Leg(l) => inputs[l] = r,
            }
        }
    }
    let mut outputs = vec![(0, 0); skeleton.outputs.len()];
    for (l, &(w, s)) in skeleton.outputs.iter().enumerate() {
        match out_port(w, s, &in_links, blocks, &offsets) {
            Port::Real(o) => outputs[l] = o,
            Port::Leg(_) => unreachable!("a leg running straight through has no vertices"),
        }
    }
    edges.sort();
    Graph { vertices, edges, inputs, outputs }
}

fn check_biarities(skeleton: &Graph, blocks: &[FormalSum]) -> Result<(), Error> {
    if skeleton.vertices.len() != blocks.len() {
        return Err(Error::Argument(format!(
            "{} substitutions for {} vertices",
            blocks.len(),
            skeleton.vertices.len()
        )));
    }
    for (i, (v, b)) in skeleton.vertices.iter().zip(blocks).enumerate() {
        for (g, _) in b.iter() {
            if g.biarity() != v.biarity() {
                return Err(Error::Argument(format!(
                    "substitution at vertex {i} has biarity {:?}, expected {:?}",
                    g.biarity(),
                    v.biarity()
                )));
            }
        }
    }
    Ok(())
}

/// Multilinear substitution of sums into the vertices of `skeleton`.
pub fn graft(skeleton: &Graph, blocks: &[FormalSum]) -> Result<FormalSum, Error> {
    check_biarities(skeleton, blocks)?;
    let mut out = FormalSum::zero();
    let mut choice: Vec<(&Graph, Scalar)> = Vec::with_capacity(blocks.len());
    expand(skeleton, blocks, &mut choice, &mut out);
    Ok(out)
}

fn expand<'a>(skeleton: &Graph, blocks: &'a [FormalSum], choice: &mut Vec<(&'a Graph, Scalar)>, out: &mut FormalSum) {
    let i = choice.len();
    if i == blocks.len() {
        let graphs: Vec<&Graph> = choice.iter().map(|(g, _)| *g).collect();
        let coeff = choice.iter().fold(Scalar::one(), |acc, (_, c)| acc * c);
        out.add_term(&graft_graphs(skeleton, &graphs), coeff);
        return;
    }
    for (g, c) in blocks[i].iter() {
        choice.push((g, c.clone()));
        expand(skeleton, blocks, choice, out);
        choice.pop();
    }
}

/// Substitutes sums into selected vertices of every monomial of `outer`;
/// vertex indices refer to the canonical listing of each monomial.
pub fn graft_at(outer: &FormalSum, subs: &BTreeMap<usize, FormalSum>) -> Result<FormalSum, Error> {
    let mut out = FormalSum::zero();
    for (g, c) in outer.iter() {
        let blocks: Vec<FormalSum> = (0..g.vertices.len())
            .map(|i| subs.get(&i).cloned().unwrap_or_else(|| FormalSum::monomial(Graph::single(g.vertices[i].clone()))))
            .collect();
        out.add_scaled(&graft(g, &blocks)?, c);
    }
    Ok(out)
}

/// A placeholder vertex with the shape and degree of `g`.
pub fn placeholder(g: &Graph) -> Dec {
    let b = g.biarity();
    Dec { name: Arc::from("□"), degree: g.degree(), outs: b.outputs, ins: b.inputs, weight: g.weight() }
}

/// Replaces each block by a single vertex decorated with its orbit
/// representative (through `dec_of`), keeping the skeleton's wiring.
/// Returns the encoded two-level graph and the sign relating it to the
/// blocks' own vertex listings.
pub fn encode_blocks(skeleton: &Graph, blocks: &[&Graph], mut dec_of: impl FnMut(&Graph) -> Dec) -> (Graph, Scalar) {
    let mut sign = Scalar::one();
    let mut vertices = vec![];
    // slot remaps: new slot k of vertex i carries old label map[k]
    let mut out_maps = vec![];
    let mut in_maps = vec![];
    for b in blocks {
        let (rep, om, im, s) = orbit_rep(b);
        sign *= s;
        vertices.push(dec_of(&rep));
        out_maps.push(om);
        in_maps.push(im);
    }
    let mut out_new = vec![];
    let mut in_new = vec![];
    for i in 0..blocks.len() {
        // rep leg k is block label om[k]; invert to find the new slot of a label
        let mut o = vec![0; out_maps[i].len()];
        for (k, &l) in out_maps[i].iter().enumerate() {
            o[l] = k;
        }
        let mut n = vec![0; in_maps[i].len()];
        for (k, &l) in in_maps[i].iter().enumerate() {
            n[l] = k;
        }
        out_new.push(o);
        in_new.push(n);
    }
    let ro = |(v, s): Slot| (v, out_new[v][s]);
    let ri = |(v, s): Slot| (v, in_new[v][s]);
    let mut edges: Vec<(Slot, Slot)> = skeleton.edges.iter().map(|&(a, b)| (ro(a), ri(b))).collect();
    edges.sort();
    let g = Graph {
        vertices,
        edges,
        inputs: skeleton.inputs.iter().map(|&s| ri(s)).collect(),
        outputs: skeleton.outputs.iter().map(|&s| ro(s)).collect(),
    };
    (g, sign)
}

/// Multilinear [`encode_blocks`].
pub fn encode_tensor(skeleton: &Graph, blocks: &[FormalSum], mut dec_of: impl FnMut(&Graph) -> Dec) -> FormalSum {
    let mut out = FormalSum::zero();
    let mut idx = vec![0usize; blocks.len()];
    let terms: Vec<Vec<(&Graph, &Scalar)>> = blocks.iter().map(|b| b.iter().collect()).collect();
    if terms.iter().any(Vec::is_empty) {
        return out;
    }
    loop {
        let graphs: Vec<&Graph> = idx.iter().enumerate().map(|(i, &k)| terms[i][k].0).collect();
        let coeff = idx.iter().enumerate().fold(Scalar::one(), |acc, (i, &k)| acc * terms[i][k].1);
        let (g, s) = encode_blocks(skeleton, &graphs, &mut dec_of);
        out.add_term(&g, coeff * s);
        // odometer
        let mut i = 0;
        loop {
            if i == idx.len() {
                return out;
            }
            idx[i] += 1;
            if idx[i] < terms[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Default decoration for [`encode_blocks`]: the representative's display
/// string, with its degree and shape.
pub fn rep_dec(rep: &Graph) -> Dec {
    let b = rep.biarity();
    Dec { name: Arc::from(rep.to_string()), degree: rep.degree(), outs: b.outputs, ins: b.inputs, weight: rep.weight().max(1) }
}
