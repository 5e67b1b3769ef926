//! Extension of maps on generators to derivations of free properads and of
//! maps on small subgraphs to coderivations of cofree coproperads.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::glinalg::Scalar;
use crate::Error;

use super::canon::orbit_rep;
use super::delta::{convex_subsets, quotient};
use super::graft::graft;
use super::graph::{Dec, Graph};
use super::sum::FormalSum;

impl FormalSum {
    /// Applies the leg relabelling to every term.
    pub fn relabel(&self, out_map: &[usize], in_map: &[usize]) -> FormalSum {
        let mut out = FormalSum::zero();
        for (g, c) in self.iter() {
            out.add_term(&g.relabel(out_map, in_map), c.clone());
        }
        out
    }
}

/// Looks up the value of an equivariant map on an arbitrary labelled graph
/// from a table keyed by orbit representatives.
pub fn lookup_equivariant(table: &BTreeMap<Graph, FormalSum>, h: &Graph) -> FormalSum {
    let (rep, om, im, sign) = orbit_rep(h);
    match table.get(&rep) {
        Some(v) => v.relabel(&om, &im).scale(&sign),
        None => FormalSum::zero(),
    }
}

/// Scalar-valued version of [`lookup_equivariant`]; maps to `I` ignore
/// labels since `I` is concentrated in biarity (1,1).
pub fn lookup_scalar(table: &BTreeMap<Graph, Scalar>, h: &Graph) -> Scalar {
    if h.is_unit() {
        return table.get(h).cloned().unwrap_or_else(Scalar::zero);
    }
    let (rep, _, _, sign) = orbit_rep(h);
    table.get(&rep).map_or_else(Scalar::zero, |v| v * &sign)
}

/// Applies the derivation determined by `image` on single generators:
/// `D(v_1 ... v_n) = Σ_i ± v_1 ... D(v_i) ... v_n`.
pub fn apply_derivation(x: &FormalSum, image: &dyn Fn(&Dec) -> FormalSum) -> FormalSum {
    let mut out = FormalSum::zero();
    for (g, c) in x.iter() {
        let n = g.vertices.len();
        for i in 0..n {
            let img = image(&g.vertices[i]);
            if img.is_zero() {
                continue;
            }
            let mut parts = vec![vec![i]];
            parts.extend((0..n).filter(|&j| j != i).map(|j| vec![j]));
            let (skeleton, subs, sign) = quotient(g, &parts).expect("singleton partition");
            let mut blocks = vec![img];
            blocks.extend(subs[1..].iter().map(|s| FormalSum::monomial(s.clone())));
            let term = graft(&skeleton, &blocks).expect("derivation image has the generator's biarity");
            out.add_scaled(&term, &(sign * c));
        }
    }
    out
}

/// Applies the coderivation whose corestriction to cogenerators is
/// `corestriction`, defined on connected subgraphs of up to `max_size`
/// vertices (legs numbered by position): every convex subgraph is contracted
/// to a single vertex decorated by the corestriction's value.
pub fn apply_coderivation(x: &FormalSum, max_size: usize, corestriction: &dyn Fn(&Graph) -> FormalSum) -> FormalSum {
    let mut out = FormalSum::zero();
    for (g, c) in x.iter() {
        let n = g.vertices.len();
        for k in 1..=max_size.min(n) {
            for part in convex_subsets(g, k) {
                let mut parts = vec![part.clone()];
                parts.extend((0..n).filter(|j| !part.contains(j)).map(|j| vec![j]));
                let Some((skeleton, subs, sign)) = quotient(g, &parts) else { continue };
                let img = corestriction(&subs[0]);
                if img.is_zero() {
                    continue;
                }
                let mut blocks = vec![img];
                blocks.extend(subs[1..].iter().map(|s| FormalSum::monomial(s.clone())));
                let term = graft(&skeleton, &blocks).expect("corestriction preserves biarity");
                out.add_scaled(&term, &(sign * c));
            }
        }
    }
    out
}

/// A derivation of a free properad given by its values on generators.
#[derive(Clone, Debug)]
pub struct Derivation {
    pub degree: i64,
    pub images: BTreeMap<Arc<str>, FormalSum>,
}

impl Derivation {
    /// Checks that every image is homogeneous of degree `|gen| + degree`
    /// and has the generator's biarity.
    pub fn new(degree: i64, generators: &[Dec], images: BTreeMap<Arc<str>, FormalSum>) -> Result<Self, Error> {
        for (name, img) in &images {
            let gen = generators
                .iter()
                .find(|d| &d.name == name)
                .ok_or_else(|| Error::Argument(format!("unknown generator `{name}`")))?;
            for (g, _) in img.iter() {
                if g.degree() != gen.degree + degree {
                    return Err(Error::Argument(format!(
                        "image of `{name}` has degree {}, expected {}",
                        g.degree(),
                        gen.degree + degree
                    )));
                }
                if g.biarity() != gen.biarity() {
                    return Err(Error::Argument(format!("image of `{name}` changes biarity")));
                }
            }
        }
        Ok(Derivation { degree, images })
    }

    pub fn apply(&self, x: &FormalSum) -> FormalSum {
        apply_derivation(x, &|d: &Dec| self.images.get(&d.name).cloned().unwrap_or_default())
    }
}

/// A coderivation of a cofree coproperad, given by corestriction tables on
/// orbit representatives of weight-one and two-vertex subgraphs.
#[derive(Clone, Debug, Default)]
pub struct Coderivation {
    pub degree: i64,
    pub on_single: BTreeMap<Graph, FormalSum>,
    pub on_pairs: BTreeMap<Graph, FormalSum>,
}

impl Coderivation {
    pub fn new(degree: i64, on_single: BTreeMap<Graph, FormalSum>, on_pairs: BTreeMap<Graph, FormalSum>) -> Result<Self, Error> {
        for (src, img) in on_single.iter().chain(on_pairs.iter()) {
            for (g, _) in img.iter() {
                if g.degree() != src.degree() + degree {
                    return Err(Error::Argument(format!(
                        "corestriction on {src} mixes degrees: got {}, expected {}",
                        g.degree(),
                        src.degree() + degree
                    )));
                }
                if g.len() != 1 || g.biarity() != src.biarity() {
                    return Err(Error::Argument(format!("corestriction on {src} must land in cogenerators")));
                }
            }
        }
        Ok(Coderivation { degree, on_single, on_pairs })
    }

    pub fn corestriction(&self, h: &Graph) -> FormalSum {
        match h.len() {
            1 => lookup_equivariant(&self.on_single, h),
            2 => lookup_equivariant(&self.on_pairs, h),
            _ => FormalSum::zero(),
        }
    }

    pub fn apply(&self, x: &FormalSum) -> FormalSum {
        let size = if self.on_pairs.is_empty() { 1 } else { 2 };
        apply_coderivation(x, size, &|h| self.corestriction(h))
    }
}
