//! Brute-force oracles for the graph calculus.

use std::collections::{BTreeMap, BTreeSet};

use koszul_core::glinalg::koszul_sign;
use koszul_core::graphcalc::*;
use koszul_core::Scalar;

pub type Check = Result<usize, String>;

/// Mixed generators: odd and even copies of a (2,1) and a (1,2) shape, and
/// an odd (1,1) target for two-vertex corestrictions.
pub fn mixed_generators() -> Vec<Dec> {
    vec![
        Dec::new("a", 1, 2, 1),
        Dec::new("a0", 0, 2, 1),
        Dec::new("b", 1, 1, 2),
        Dec::new("b0", 0, 1, 2),
        Dec::new("e", 1, 1, 1),
    ]
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Orbit representatives of weight at most 3 over `gens`, together with a
/// few leg relabellings of each.
pub fn sample_graphs(gens: &[Dec]) -> Vec<Graph> {
    let (reps, _) = enumerate_reps(gens, &TruncationPolicy::new(3, 6, 6));
    let mut out = vec![];
    for g in reps {
        let b = g.biarity();
        let outs = permutations(b.outputs);
        let ins = permutations(b.inputs);
        for (k, (o, i)) in outs.iter().flat_map(|o| ins.iter().map(move |i| (o, i))).enumerate() {
            if k % 5 == 0 {
                out.push(g.relabel(o, i));
            }
        }
    }
    out
}

/// The same graph listed in a different vertex order: new vertex `k` is old
/// vertex `perm[k]`.
pub fn relist(g: &Graph, perm: &[usize]) -> Graph {
    let mut new_index = vec![0; perm.len()];
    for (k, &old) in perm.iter().enumerate() {
        new_index[old] = k;
    }
    let map = |(v, s): Slot| (new_index[v], s);
    let mut edges: Vec<(Slot, Slot)> = g.edges.iter().map(|&(a, b)| (map(a), map(b))).collect();
    edges.sort();
    Graph {
        vertices: perm.iter().map(|&i| g.vertices[i].clone()).collect(),
        edges,
        inputs: g.inputs.iter().map(|&s| map(s)).collect(),
        outputs: g.outputs.iter().map(|&s| map(s)).collect(),
    }
}

fn degrees(g: &Graph) -> Vec<i64> {
    g.vertices.iter().map(|v| v.degree).collect()
}

/// Sign of a listing relative to `g`: the Koszul sign of the vertex
/// permutation turning `g` into `target`, found by trying every
/// permutation. `None` when no relisting matches.
pub fn listing_sign(g: &Graph, target: &Graph) -> Option<Scalar> {
    let ps = permutations(g.len());
    let hits: Vec<Scalar> = ps
        .iter()
        .filter(|p| relist(g, p) == *target)
        .map(|p| koszul_sign(p, &degrees(g)).unwrap())
        .collect();
    let first = hits.first()?.clone();
    // A rigid labelled graph has exactly one matching listing.
    hits.iter().all(|s| *s == first).then_some(first)
}

/// Every vertex listing of every sample canonicalizes to the same graph,
/// with the sign predicted by the Koszul sign of the listing.
pub fn canonical_listings(graphs: &[Graph]) -> Check {
    let mut n = 0;
    for g in graphs {
        let (c, s) = canonicalize(g).map_err(|e| e.to_string())?;
        match listing_sign(g, &c) {
            Some(t) if t == s => {}
            other => return Err(format!("{g}: canonical sign {s}, listing oracle {other:?}")),
        }
        for p in permutations(g.len()) {
            let h = relist(g, &p);
            let (ch, sh) = canonicalize(&h).map_err(|e| e.to_string())?;
            let k = koszul_sign(&p, &degrees(g)).unwrap();
            if ch != c || sh != &k * &s {
                return Err(format!("{g} listed as {p:?}: got ({ch}, {sh}), expected ({c}, {})", &k * &s));
            }
            n += 1;
        }
    }
    Ok(n)
}

fn connected(g: &Graph, part: &BTreeSet<usize>) -> bool {
    let Some(&start) = part.iter().next() else { return false };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &((a, _), (b, _)) in &g.edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && part.contains(&y) && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
    }
    seen.len() == part.len()
}

fn names(g: &Graph, part: impl IntoIterator<Item = usize>) -> Vec<String> {
    let mut v: Vec<String> = part.into_iter().map(|i| g.vertices[i].name.to_string()).collect();
    v.sort();
    v
}

/// Δ_(1,1) against all vertex bipartitions `(upper, lower)` with both parts
/// connected and no edge running from the upper part down into the lower
/// part. The decorations on each side must agree as multisets and the
/// pieces must graft back to the original monomial with the emitted sign.
pub fn delta_bipartitions(graphs: &[Graph]) -> Check {
    let mut n = 0;
    for g in graphs {
        let k = g.len();
        let mut expected: BTreeMap<(Vec<String>, Vec<String>), usize> = BTreeMap::new();
        for mask in 0..(1usize << k) {
            let lower: BTreeSet<usize> = (0..k).filter(|v| mask >> v & 1 == 1).collect();
            let upper: BTreeSet<usize> = (0..k).filter(|v| mask >> v & 1 == 0).collect();
            if lower.is_empty() || upper.is_empty() || !connected(g, &lower) || !connected(g, &upper) {
                continue;
            }
            // edges go from an output of the lower end to an input of the upper end
            if g.edges.iter().any(|&((a, _), (b, _))| upper.contains(&a) && lower.contains(&b)) {
                continue;
            }
            *expected.entry((names(g, upper), names(g, lower))).or_default() += 1;
        }
        let splits = delta_graph(g);
        let mut got: BTreeMap<(Vec<String>, Vec<String>), usize> = BTreeMap::new();
        let mut rebuilt = FormalSum::zero();
        for s in &splits {
            *got.entry((names(&s.upper, 0..s.upper.len()), names(&s.lower, 0..s.lower.len()))).or_default() += 1;
            let blocks = [FormalSum::monomial(s.upper.clone()), FormalSum::monomial(s.lower.clone())];
            rebuilt.add_scaled(&graft(&s.skeleton, &blocks).map_err(|e| e.to_string())?, &s.coeff);
        }
        if got != expected {
            return Err(format!("{g}: delta pieces {got:?}, bipartitions {expected:?}"));
        }
        let mut want = FormalSum::zero();
        want.add_term(g, Scalar::int(splits.len() as i64));
        if rebuilt != want {
            return Err(format!("{g}: pieces graft back to {rebuilt}, expected {want}"));
        }
        n += splits.len();
    }
    Ok(n)
}

/// Grafting single vertices into a placeholder skeleton, in every listing,
/// against the tensor word of the listing: the grafted monomial is the
/// canonical form and its coefficient is the Koszul sign taking the listed
/// word to the canonical word.
pub fn graft_tensor_words(graphs: &[Graph]) -> Check {
    let mut n = 0;
    for g in graphs {
        for p in permutations(g.len()) {
            let h = relist(g, &p);
            let singles: Vec<Graph> = h.vertices.iter().map(|v| Graph::single(v.clone())).collect();
            let skeleton = Graph { vertices: singles.iter().map(placeholder).collect(), ..h.clone() };
            let blocks: Vec<FormalSum> = singles.iter().cloned().map(FormalSum::monomial).collect();
            let out = graft(&skeleton, &blocks).map_err(|e| e.to_string())?;
            let terms: Vec<(&Graph, &Scalar)> = out.iter().collect();
            let [(c, coeff)] = terms[..] else { return Err(format!("{h}: graft gave {out}")) };
            match listing_sign(&h, c) {
                Some(s) if s == *coeff => {}
                other => return Err(format!("{h}: graft coefficient {coeff}, tensor-word oracle {other:?}")),
            }
            n += 1;
        }
    }
    Ok(n)
}

/// A derivation sending each generator to a combination of single
/// generators, against direct per-vertex substitution with the sign of
/// passing the derivation over the earlier vertices.
pub fn derivation_substitution(graphs: &[Graph]) -> Check {
    let image = |d: &Dec| -> Vec<(Dec, i64)> {
        match &*d.name {
            "a" => vec![(Dec::new("a0", 0, 2, 1), 2)],
            "b" => vec![(Dec::new("b0", 0, 1, 2), -1)],
            _ => vec![],
        }
    };
    let as_sum = |d: &Dec| {
        let mut s = FormalSum::zero();
        for (e, c) in image(d) {
            s.add_term(&Graph::single(e), Scalar::int(c));
        }
        s
    };
    let mut n = 0;
    for g in graphs {
        let x = FormalSum::monomial(g.clone());
        let got = apply_derivation(&x, &as_sum);
        // x is canonical; substitute directly into its listing
        let (x0, x0c) = x.iter().next().map(|(h, c)| (h.clone(), c.clone())).unwrap();
        let mut want = FormalSum::zero();
        for i in 0..x0.len() {
            let passed: i64 = x0.vertices[..i].iter().map(|v| v.degree).sum();
            for (e, c) in image(&x0.vertices[i]) {
                let mut h = x0.clone();
                h.vertices[i] = e;
                want.add_term(&h, &x0c * &(&Scalar::sign(-passed) * &Scalar::int(c)));
            }
        }
        if got != want {
            return Err(format!("{g}: derivation {got}, direct substitution {want}"));
        }
        n += 1;
    }
    Ok(n)
}

fn pair_ba() -> Graph {
    let (a, b) = (Graph::single(Dec::new("a", 1, 2, 1)), Graph::single(Dec::new("b", 1, 1, 2)));
    two_level_composites(&b, &a).into_iter().find(|g| g.biarity().outputs == 1 && g.biarity().inputs == 1).unwrap()
}

/// A degree -1 coderivation with single and two-vertex corestrictions.
pub fn sample_coderivation() -> Coderivation {
    let single = |d: Dec| Graph::single(d);
    let on_single = BTreeMap::from([
        (single(Dec::new("a", 1, 2, 1)), FormalSum::term(single(Dec::new("a0", 0, 2, 1)), Scalar::int(3))),
        (single(Dec::new("b", 1, 1, 2)), FormalSum::monomial(single(Dec::new("b0", 0, 1, 2)))),
    ]);
    let (rep, _, _, sign) = orbit_rep(&pair_ba());
    let on_pairs = BTreeMap::from([(rep, FormalSum::term(single(Dec::new("e", 1, 1, 1)), sign * Scalar::int(-2)))]);
    Coderivation::new(-1, on_single, on_pairs).unwrap()
}

fn encode(s: &Split, upper: &FormalSum, lower: &FormalSum) -> FormalSum {
    encode_tensor(&s.skeleton, &[upper.clone(), lower.clone()], rep_dec)
}

/// `Δ_(1,1) D = (D ⊗ id + id ⊗ D) Δ_(1,1)`, both sides encoded as two-level
/// tensors.
pub fn coderivation_property(graphs: &[Graph], d: &Coderivation) -> Check {
    let mut n = 0;
    for g in graphs {
        let x = FormalSum::monomial(g.clone());
        let mut lhs = FormalSum::zero();
        for s in delta_11(&d.apply(&x)) {
            let (up, lo) = (FormalSum::monomial(s.upper.clone()), FormalSum::monomial(s.lower.clone()));
            lhs.add_scaled(&encode(&s, &up, &lo), &s.coeff);
        }
        let mut rhs = FormalSum::zero();
        for s in delta_11(&x) {
            let (up, lo) = (FormalSum::monomial(s.upper.clone()), FormalSum::monomial(s.lower.clone()));
            let du = d.apply(&up);
            let dl = d.apply(&lo);
            if !du.is_zero() {
                rhs.add_scaled(&encode(&s, &du, &lo), &s.coeff);
            }
            if !dl.is_zero() {
                let sign = Scalar::sign(d.degree * s.upper.degree());
                rhs.add_scaled(&encode(&s, &up, &dl), &(&s.coeff * &sign));
            }
        }
        if lhs != rhs {
            return Err(format!("{g}: delta D = {lhs}, (D x id + id x D) delta = {rhs}"));
        }
        n += 1;
    }
    Ok(n)
}
