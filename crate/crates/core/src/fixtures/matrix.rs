//! Strictly upper triangular graded matrix algebras with a unit adjoined,
//! viewed as properads concentrated in biarity (1,1).

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::glinalg::{Matrix, Scalar};
use crate::graphcalc::{two_level_composites, Dec, FormalSum, Graph, TruncationPolicy};
use crate::structures::properad::normalise_entry;
use crate::structures::{PropKind, PropMorphism, SemiAugProperad};

/// Shape data: index degrees, the element `D` with `D² = 0` and the
/// semi-augmentation on degree-0 matrix units.
#[derive(Clone, Debug)]
pub struct MatrixData {
    pub degrees: Vec<i64>,
    pub d: Matrix,
    pub epsilon: BTreeMap<(usize, usize), Scalar>,
}

pub fn unit_name(i: usize, j: usize) -> String {
    format!("E{i}_{j}")
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn dec_of(data: &MatrixData, i: usize, j: usize) -> Dec {
    Dec::new(&unit_name(i, j), data.degrees[i] - data.degrees[j], 1, 1)
}

/// Writes a strictly upper triangular matrix as an element.
fn element(data: &MatrixData, m: &Matrix) -> FormalSum {
    let mut out = FormalSum::zero();
    for (i, j) in pairs(data.degrees.len()) {
        if !m[(i, j)].is_zero() {
            out.add_term(&Graph::single(dec_of(data, i, j)), m[(i, j)].clone());
        }
    }
    out
}

fn unit_matrix(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = Scalar::one();
    m
}

pub fn matrix_properad(name: &str, data: &MatrixData, policy: TruncationPolicy) -> SemiAugProperad {
    let n = data.degrees.len();
    let one = Dec::new("1", 0, 1, 1);
    let mut ops = vec![one.clone()];
    ops.extend(pairs(n).into_iter().map(|(i, j)| dec_of(data, i, j)));
    let mut table = BTreeMap::new();
    let mut put = |u: &Dec, l: &Dec, v: FormalSum| {
        let g = two_level_composites(&Graph::single(u.clone()), &Graph::single(l.clone())).remove(0);
        let (k, v) = normalise_entry(&g, &v);
        table.insert(k, v);
    };
    for a in &ops {
        put(&one, a, FormalSum::monomial(Graph::single(a.clone())));
        if a.name != one.name {
            put(a, &one, FormalSum::monomial(Graph::single(a.clone())));
        }
    }
    for (i, j) in pairs(n) {
        for k in j + 1..n {
            put(&dec_of(data, i, j), &dec_of(data, j, k), FormalSum::monomial(Graph::single(dec_of(data, i, k))));
        }
    }
    let mut p = SemiAugProperad::new(name, PropKind::Explicit { ops, unit: Arc::from("1"), table }, policy);
    for (i, j) in pairs(n) {
        // d(E) = D E - (-1)^{|E|} E D
        let e = unit_matrix(n, i, j);
        let de = data.d.mul(&e).unwrap();
        let ed = e.mul(&data.d).unwrap().scale(&Scalar::sign(data.degrees[i] - data.degrees[j]));
        let mut diff = de;
        for r in 0..n {
            for c in 0..n {
                diff[(r, c)] = &diff[(r, c)] - &ed[(r, c)];
            }
        }
        let v = element(data, &diff);
        if !v.is_zero() {
            p.d.insert(Arc::from(unit_name(i, j)), v);
        }
    }
    p.epsilon.insert(Arc::from("1"), Scalar::one());
    for ((i, j), c) in &data.epsilon {
        p.epsilon.insert(Arc::from(unit_name(*i, *j)), c.clone());
    }
    p
}

pub(crate) fn small(rng: &mut ChaCha8Rng) -> Scalar {
    let v = rng.gen_range(-2i64..=2);
    if v == 0 {
        Scalar::one()
    } else {
        Scalar::int(v)
    }
}

/// A random shape on `n` indices: degrees in `{-1, 0, 1}`, `D` a sum of
/// non-composable degree −1 matrix units, random `ε` on degree-0 units.
pub fn random_matrix_data(n: usize, seed: u64) -> MatrixData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degrees = vec![0i64; n];
    for i in 1..n {
        degrees[i] = (degrees[i - 1] + rng.gen_range(-1i64..=1)).clamp(-1, 1);
    }
    let mut d = Matrix::zeros(n, n);
    let mut heads = vec![];
    let mut tails = vec![];
    for (i, j) in pairs(n) {
        if degrees[i] - degrees[j] == -1 && !tails.contains(&i) && !heads.contains(&j) && rng.gen_bool(0.7) {
            d[(i, j)] = small(&mut rng);
            heads.push(i);
            tails.push(j);
        }
    }
    let mut epsilon = BTreeMap::new();
    for (i, j) in pairs(n) {
        if degrees[i] == degrees[j] && rng.gen_bool(0.6) {
            epsilon.insert((i, j), small(&mut rng));
        }
    }
    MatrixData { degrees, d, epsilon }
}

pub fn random_sdg_properad(n: usize, seed: u64, policy: TruncationPolicy) -> SemiAugProperad {
    matrix_properad(&format!("Mat{n}#{seed}"), &random_matrix_data(n, seed), policy)
}

/// Conjugation by a random unipotent degree-0 `g`, as a dg morphism from
/// `(E, D)` to `(E, g D g⁻¹)`; the target keeps the source's `ε` table.
pub fn random_conjugation(source: &Arc<SemiAugProperad>, data: &MatrixData, seed: u64) -> PropMorphism {
    random_conjugation_with_data(source, data, seed).0
}

/// [`random_conjugation`] together with the target's shape data, so that
/// conjugations can be chained.
pub fn random_conjugation_with_data(source: &Arc<SemiAugProperad>, data: &MatrixData, seed: u64) -> (PropMorphism, MatrixData) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = data.degrees.len();
    let mut g = Matrix::identity(n);
    for (i, j) in pairs(n) {
        if data.degrees[i] == data.degrees[j] && rng.gen_bool(0.5) {
            g[(i, j)] = small(&mut rng);
        }
    }
    let ginv = unipotent_inverse(&g);
    let conj = |m: &Matrix| g.mul(m).unwrap().mul(&ginv).unwrap();
    let target_data = MatrixData { degrees: data.degrees.clone(), d: conj(&data.d), epsilon: data.epsilon.clone() };
    let target = Arc::new(matrix_properad(&format!("{}^g{seed}", source.name), &target_data, source.policy));
    let mut images = BTreeMap::new();
    images.insert(Arc::from("1"), target.unit_element());
    for (i, j) in pairs(n) {
        images.insert(Arc::from(unit_name(i, j)), element(data, &conj(&unit_matrix(n, i, j))));
    }
    (PropMorphism { source: source.clone(), target, images }, target_data)
}

fn unipotent_inverse(g: &Matrix) -> Matrix {
    // (1 + N)^{-1} = Σ (-N)^k
    let n = g.rows;
    let mut minus_n = g.clone();
    for i in 0..n {
        minus_n[(i, i)] = Scalar::zero();
    }
    let minus_n = minus_n.scale(&Scalar::int(-1));
    let mut out = Matrix::identity(n);
    let mut power = Matrix::identity(n);
    for _ in 0..n {
        power = power.mul(&minus_n).unwrap();
        for r in 0..n {
            for c in 0..n {
                out[(r, c)] = &out[(r, c)] + &power[(r, c)];
            }
        }
    }
    out
}
