//! The curved Koszul dual coproperad `uAs^¡`.
//!
//! `uAs` is presented by `μ_0, μ_2` with associativity and the two unit
//! relations `μ_2 ∘_i μ_0 = id`. The dual is the sub-coproperad of the
//! cofree coproperad on `sμ_2, sμ_0` of elements all of whose two-vertex
//! pieces lie in `s²R`, with `R` the quadratic part of the relations; the
//! constant part of the unit relations becomes the curvature. The tables
//! are computed once by [`derive_tables`] and shipped as JSON.

use std::collections::BTreeMap;
use std::sync::Arc;

use itertools::Itertools;

use crate::glinalg::{Matrix, Scalar};
use crate::graphcalc::{
    canonicalize, delta_graph, enumerate_reps, graft_graphs, orbit_rep, quotient, two_level_composites, Dec,
    FormalSum, Graph, TruncationPolicy,
};
use crate::structures::coproperad::split_two_vertex;
use crate::doc::CoproperadDoc;
use crate::structures::{
    check_curved_coproperad, CoKind, CurvedCoproperad, LinearMap, PropMorphism, SemiAugProperad, TwistingMorphism,
};
use crate::Error;

use super::uas::planar_value;

/// Policy the shipped tables were derived for.
pub fn dual_policy() -> TruncationPolicy {
    TruncationPolicy::new(3, 4, 1)
}

pub fn sm() -> Dec {
    Dec::new("sm", 1, 1, 2)
}

pub fn su() -> Dec {
    Dec::new("su", 1, 1, 0)
}

fn canon(g: &Graph) -> (Graph, Scalar) {
    canonicalize(g).expect("valid graph")
}

/// Every input relabelling of `g`, as canonical monomials.
fn relabellings(g: &Graph) -> Vec<(Graph, Scalar)> {
    let n = g.biarity().inputs;
    let outs: Vec<usize> = (0..g.biarity().outputs).collect();
    (0..n).permutations(n).map(|p| canon(&g.relabel(&outs, &p))).collect()
}

fn relabel_sum(x: &FormalSum, outs: &[usize], ins: &[usize]) -> FormalSum {
    let mut out = FormalSum::zero();
    for (g, c) in x.iter() {
        let (h, s) = canon(&g.relabel(outs, ins));
        out.add_term(&h, s * c);
    }
    out
}

/// The obstruction to lying in the dual: for each adjacent pair of vertices,
/// the class of the piece in `F(E)(2)/R`, recorded in place.
fn obstruction(x: &Graph) -> FormalSum {
    let mut out = FormalSum::zero();
    for &((lo, _), (up, _)) in &x.edges {
        if lo == up {
            continue;
        }
        let mut parts = vec![vec![up, lo]];
        parts.extend((0..x.len()).filter(|v| *v != lo && *v != up).map(|v| vec![v]));
        let Some((skel, subs, sign)) = quotient(x, &parts) else { continue };
        let piece = &subs[0];
        // only μ_2 ∘ μ_2 has a nonzero class, read planarly
        if piece.biarity().inputs != 3 {
            continue;
        }
        let up_first = piece.edges[0].1 .0 == 0;
        let order = if up_first { Scalar::one() } else { -Scalar::one() };
        let mut class = planar_value(piece);
        class.vertices[0] = Dec::new("q", 2, 1, 3);
        let mut blocks: Vec<&Graph> = vec![&class];
        blocks.extend(subs[1..].iter());
        let (h, s) = canon(&graft_graphs(&skel, &blocks));
        out.add_term(&h, sign * order * s);
    }
    out
}

fn kernel_of(cols: &[Graph], image: impl Fn(&Graph) -> FormalSum) -> Vec<FormalSum> {
    let images: Vec<FormalSum> = cols.iter().map(image).collect();
    let rows: Vec<Graph> = images.iter().flat_map(|s| s.iter().map(|(g, _)| g.clone())).sorted().dedup().collect();
    let index: BTreeMap<&Graph, usize> = rows.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut m = Matrix::zeros(rows.len().max(1), cols.len());
    for (j, s) in images.iter().enumerate() {
        for (g, c) in s.iter() {
            m[(index[g], j)] = c.clone();
        }
    }
    m.kernel()
        .into_iter()
        .map(|v| {
            let mut s = FormalSum::zero();
            for (g, c) in cols.iter().zip(v) {
                s.add_term(g, c);
            }
            s
        })
        .collect()
}

fn coordinates(cols: &[Graph], x: &FormalSum) -> Vec<Scalar> {
    cols.iter().map(|g| x.coeff(g)).collect()
}

fn rank_of(cols: &[Graph], vs: &[FormalSum]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Scalar>> = vs.iter().map(|v| coordinates(cols, v)).collect();
    Matrix::from_rows(rows).expect("rectangular").rank()
}

/// Free generators of an `S_n`-stable subspace spanned by `kernel`.
fn free_generators(cols: &[Graph], kernel: &[FormalSum], n: usize) -> Result<Vec<FormalSum>, Error> {
    let outs = [0usize];
    let mut span: Vec<FormalSum> = vec![];
    let mut gens = vec![];
    for v in kernel {
        let orbit: Vec<FormalSum> = (0..n).permutations(n).map(|p| relabel_sum(v, &outs, &p)).collect();
        let mut trial = span.clone();
        trial.extend(orbit.iter().cloned());
        let before = rank_of(cols, &span);
        let after = rank_of(cols, &trial);
        if after == before + orbit.len() {
            span = trial;
            gens.push(v.clone());
        }
    }
    if rank_of(cols, &span) != kernel.len() {
        return Err(Error::Argument(format!("component of dimension {} is not free over S_{n}", kernel.len())));
    }
    Ok(gens)
}

fn tag(g: &Graph, mark: &str) -> Graph {
    let mut h = g.clone();
    for v in &mut h.vertices {
        v.name = Arc::from(format!("{}{mark}", v.name));
    }
    h
}

/// Δ̄ with upper and lower vertices told apart by their names.
fn tagged_delta(x: &FormalSum) -> FormalSum {
    let mut out = FormalSum::zero();
    for (g, c) in x.iter() {
        for s in delta_graph(g) {
            let (h, sign) = canon(&graft_graphs(&s.skeleton, &[&tag(&s.upper, "^"), &tag(&s.lower, "_")]));
            out.add_term(&h, sign * &s.coeff * c);
        }
    }
    out
}

/// Cogenerators, their expansions and Δ̄ on them.
pub type DualTables = (Vec<Dec>, BTreeMap<Arc<str>, FormalSum>, BTreeMap<Arc<str>, FormalSum>);

/// Tables of `uAs^¡` within [`dual_policy`]: cogenerators with their
/// expansions in the cofree coproperad, and Δ̄ on cogenerators. The
/// curvature is left to [`with_curvature`].
pub fn derive_tables() -> Result<DualTables, Error> {
    let policy = dual_policy();
    let (reps, _) = enumerate_reps(&[sm(), su()], &policy);
    let mut by_shape: BTreeMap<(usize, usize, usize), Vec<Graph>> = BTreeMap::new();
    for r in &reps {
        let b = r.biarity();
        by_shape.entry((r.weight(), b.outputs, b.inputs)).or_default().extend(relabellings(r).into_iter().map(|x| x.0));
    }
    let mut cogens = vec![];
    let mut expansion: BTreeMap<Arc<str>, FormalSum> = BTreeMap::new();
    for ((w, o, i), cols) in &mut by_shape {
        cols.sort();
        cols.dedup();
        let kernel = if *w == 1 {
            cols.iter().filter(|g| g.is_plain_single()).map(|g| FormalSum::monomial(g.clone())).collect()
        } else {
            kernel_of(cols, obstruction)
        };
        if kernel.is_empty() {
            continue;
        }
        let gens = if *w == 1 { kernel } else { free_generators(cols, &kernel, *i)? };
        for (k, v) in gens.into_iter().enumerate() {
            let dec = if *w == 1 {
                v.iter().next().expect("monomial").0.vertices[0].clone()
            } else {
                Dec::new(&format!("c{w}_{o}{i}_{k}"), *w as i64, *o, *i).with_weight(*w)
            };
            expansion.insert(dec.name.clone(), v);
            cogens.push(dec);
        }
    }
    // Δ̄ of each cogenerator, re-expressed through two-vertex graphs of
    // cogenerators by matching tagged expansions
    let expand = |h: &Graph| -> FormalSum {
        let s = split_two_vertex(h, &Scalar::one());
        let block = |g: &Graph, mark: &str| {
            let (rep, om, im, sign) = orbit_rep(g);
            let e = &expansion[&rep.vertices[0].name];
            relabel_sum(e, &om, &im).scale(&sign).map_linear(|x| FormalSum::monomial(tag(x, mark)))
        };
        let (u, l) = (block(&s.upper, "^"), block(&s.lower, "_"));
        let mut out = FormalSum::zero();
        for (a, ca) in u.iter() {
            for (b, cb) in l.iter() {
                let (g, sign) = canon(&graft_graphs(&s.skeleton, &[a, b]));
                out.add_term(&g, sign * ca * cb * &s.coeff);
            }
        }
        out
    };
    let mut delta = BTreeMap::new();
    for c in &cogens {
        if c.weight < 2 {
            continue;
        }
        let target = tagged_delta(&expansion[&c.name]);
        let mut candidates = vec![];
        for a in &cogens {
            for b in &cogens {
                if a.weight + b.weight != c.weight {
                    continue;
                }
                for g in two_level_composites(&Graph::single(a.clone()), &Graph::single(b.clone())) {
                    if g.biarity() != c.biarity() {
                        continue;
                    }
                    candidates.extend(relabellings(&g).into_iter().map(|x| x.0));
                }
            }
        }
        candidates.sort();
        candidates.dedup();
        let images: Vec<FormalSum> = candidates.iter().map(expand).collect();
        let rows: Vec<Graph> = images
            .iter()
            .chain(std::iter::once(&target))
            .flat_map(|s| s.iter().map(|(g, _)| g.clone()))
            .sorted()
            .dedup()
            .collect();
        let index: BTreeMap<&Graph, usize> = rows.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let mut m = Matrix::zeros(rows.len(), candidates.len());
        for (j, s) in images.iter().enumerate() {
            for (g, x) in s.iter() {
                m[(index[g], j)] = x.clone();
            }
        }
        let b: Vec<Scalar> = rows.iter().map(|g| target.coeff(g)).collect();
        let sol = m
            .solve(&b)
            .ok_or_else(|| Error::Argument(format!("Δ of {} does not close on the dual", c.name)))?;
        let mut value = FormalSum::zero();
        for (g, x) in candidates.iter().zip(sol) {
            value.add_term(g, x);
        }
        delta.insert(c.name.clone(), value);
    }
    Ok((cogens, expansion, delta))
}

/// Sets `θ` so that `κ` (sending `sμ_2 ↦ μ_2`, `sμ_0 ↦ μ_0`) satisfies the
/// curved Maurer–Cartan equation; `d = 0`.
pub fn with_curvature(c: CurvedCoproperad, uas: &Arc<SemiAugProperad>) -> CurvedCoproperad {
    let c = Arc::new(c);
    let kappa = kappa_map(&c);
    let conv = crate::structures::convolution(c.clone(), uas.clone());
    let mut out = (*c).clone();
    if let CoKind::Explicit { cogens, theta, .. } = &mut out.kind {
        for g in cogens.iter() {
            if g.outs == 1 && g.ins == 1 {
                let v = conv.star_at(&kappa, &kappa, &Graph::single(g.clone()));
                let t = uas.epsilon_of(&v);
                if !t.is_zero() {
                    theta.insert(g.name.clone(), t);
                }
            }
        }
    }
    out
}

/// `κ` on the domain basis of `c`.
pub fn kappa_map(c: &CurvedCoproperad) -> LinearMap {
    LinearMap::tabulate(-1, &c.domain_basis(), |x| {
        if x.len() != 1 || !x.is_plain_single() {
            return FormalSum::zero();
        }
        match &*x.vertices[0].name {
            "sm" => FormalSum::monomial(Graph::single(super::uas::mu(2))),
            "su" => FormalSum::monomial(Graph::single(super::uas::mu(0))),
            _ => FormalSum::zero(),
        }
    })
}

const SHIPPED: &str = include_str!("uas_dual.json");

/// Derives the full presentation from scratch; the shipped JSON is this
/// output.
pub fn derive_document() -> Result<CoproperadDoc, Error> {
    let (cogens, _, delta) = derive_tables()?;
    let kind = CoKind::Explicit { cogens, delta, d: BTreeMap::new(), theta: BTreeMap::new() };
    let c = CurvedCoproperad::new("uAs^!", kind, dual_policy());
    let u = Arc::new(super::uas::uas(dual_policy()));
    Ok((&with_curvature(c, &u)).into())
}

/// `uAs^¡` from the shipped tables. On load the curvature is recomputed from
/// the Maurer–Cartan equation of `κ` and the curved axioms are checked.
pub fn uas_koszul_dual() -> CurvedCoproperad {
    let doc: CoproperadDoc = crate::doc::from_json(SHIPPED).expect("shipped uAs^! parses");
    let c = doc.build().expect("shipped uAs^! builds");
    let mut bare = c.clone();
    if let CoKind::Explicit { theta, .. } = &mut bare.kind {
        theta.clear();
    }
    let u = Arc::new(super::uas::uas(dual_policy()));
    let again = with_curvature(bare, &u);
    let (CoKind::Explicit { theta: t0, .. }, CoKind::Explicit { theta: t1, .. }) = (&c.kind, &again.kind) else {
        panic!("uAs^! is explicit")
    };
    assert!(!t0.is_empty() && t0 == t1, "shipped curvature disagrees with κ");
    let report = check_curved_coproperad(&c, false);
    assert!(report.passed(), "shipped uAs^! fails the curved axioms: {report}");
    c
}

/// `κ : uAs^¡ → uAs` as a twisting morphism.
pub fn kappa(c: &Arc<CurvedCoproperad>, u: &Arc<SemiAugProperad>) -> Result<TwistingMorphism, Error> {
    TwistingMorphism::new(c.clone(), u.clone(), kappa_map(c))
}

/// `g_κ : Ω uAs^¡ → uAs` within [`dual_policy`].
pub fn g_kappa() -> PropMorphism {
    let c = Arc::new(uas_koszul_dual());
    let u = Arc::new(super::uas::uas(dual_policy()));
    let omega = Arc::new(crate::barcobar::cobar(&c, dual_policy()));
    let k = kappa(&c, &u).expect("κ vanishes on the unit");
    crate::barcobar::adjoint_left(&k, &omega).expect("Ω uAs^¡ is the cobar of uAs^¡")
}

/// `m̃`: the Ω-generator of `sμ_2` with the one of `sμ_0` plugged into its
/// first input, a degree-0 element of biarity (1,1).
pub fn m_tilde(omega: &SemiAugProperad) -> FormalSum {
    let gen_of = |name: &str| {
        let (k, _) = omega.sources.iter().find(|(_, g)| g.is_plain_single() && &*g.vertices[0].name == name).expect("generator present");
        omega.generator(k).expect("listed").clone()
    };
    let (m, u) = (gen_of("sm"), gen_of("su"));
    let g = two_level_composites(&Graph::single(m), &Graph::single(u))
        .into_iter()
        .find(|g| g.edges.iter().any(|&(_, (_, slot))| slot == 0))
        .expect("μ̃_0 plugs into slot 0");
    let (h, s) = canon(&g);
    FormalSum::term(h, s)
}
