//! Seeded random curved coproperads, lax morphisms and twisting morphisms.
//!
//! Valid structures are produced by construction rather than by rejection:
//! a curved coproperad is the bar construction of a random matrix algebra
//! twisted by a random `a`, and `(id, a)` is then a lax morphism into the
//! twist.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::barcobar::{bar, bar_morphism, pi};
use crate::glinalg::Scalar;
use crate::graphcalc::{Coderivation, Graph, TruncationPolicy};
use crate::structures::{
    tw_pullback, tw_pushforward, CoKind, CurvedCoproperad, LaxMorphism, ScalarMap, SemiAugProperad, TwistingMorphism,
};
use crate::Error;

use super::matrix::{matrix_properad, random_conjugation, random_matrix_data, small};

/// Matrix size used by the random families.
pub const MATRIX_SIZE: usize = 3;

/// A random degree −1 map to `I` on the one-vertex part of `c`.
pub fn random_a(c: &CurvedCoproperad, seed: u64) -> ScalarMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = c.domain_basis();
    ScalarMap::tabulate(-1, &basis, |x| {
        let b = x.biarity();
        if x.len() == 1 && b.outputs == 1 && b.inputs == 1 && x.degree() == 1 && rng.gen_bool(0.6) {
            small(&mut rng)
        } else {
            Scalar::zero()
        }
    })
}

/// The twist `C^a`, with `d' = d + (id ⊗ a − a ⊗ id)Δ` and
/// `θ' = θ − a·d − a⋆a`, together with the lax morphism `(id, a) : C → C^a`.
pub fn twist(c: &Arc<CurvedCoproperad>, a: &ScalarMap, name: &str) -> (Arc<CurvedCoproperad>, LaxMorphism) {
    let mut probe = LaxMorphism::identity(c.clone());
    probe.a = a.clone();
    let basis = c.domain_basis();
    let theta_of = |x: &Graph| {
        let dx = c.differential(&crate::FormalSum::monomial(x.clone()));
        c.theta(x) - a.apply_sum(&dx) - probe.a_star_a(x)
    };
    let kind = match &c.kind {
        CoKind::Explicit { cogens, delta, d, .. } => {
            let mut d2 = BTreeMap::new();
            let mut theta = BTreeMap::new();
            for g in cogens {
                let x = Graph::single(g.clone());
                let v = d.get(&g.name).cloned().unwrap_or_default() + probe.mixed_term(&x);
                if !v.is_zero() {
                    d2.insert(g.name.clone(), v);
                }
                let t = theta_of(&x);
                if !t.is_zero() {
                    theta.insert(g.name.clone(), t);
                }
            }
            CoKind::Explicit { cogens: cogens.clone(), delta: delta.clone(), d: d2, theta }
        }
        CoKind::Cofree { cogens, d, .. } => {
            let mut pairs = BTreeMap::new();
            let mut theta = BTreeMap::new();
            for x in basis.iter().filter(|x| x.len() <= 2) {
                if x.len() == 2 {
                    let v = d.corestriction(x) + probe.mixed_term(x);
                    if !v.is_zero() {
                        pairs.insert(x.clone(), v);
                    }
                }
                let t = theta_of(x);
                if !t.is_zero() {
                    theta.insert(x.clone(), t);
                }
            }
            let d2 = Coderivation { degree: d.degree, on_single: d.on_single.clone(), on_pairs: pairs };
            CoKind::Cofree { cogens: cogens.clone(), d: d2, theta }
        }
    };
    let mut out = CurvedCoproperad::new(name, kind, c.policy);
    out.conilpotent = c.conilpotent;
    let out = Arc::new(out);
    let lax = LaxMorphism { source: c.clone(), target: out.clone(), f: probe.f, a: a.clone() };
    (out, lax)
}

/// A random matrix algebra of size [`MATRIX_SIZE`].
pub fn random_matrix_properad(seed: u64, policy: TruncationPolicy) -> Arc<SemiAugProperad> {
    let data = random_matrix_data(MATRIX_SIZE, seed);
    Arc::new(matrix_properad(&format!("Mat{MATRIX_SIZE}#{seed}"), &data, policy))
}

/// `B(P)^a` for a random matrix algebra `P` and random `a`.
pub fn random_curved_coproperad(seed: u64, policy: TruncationPolicy) -> CurvedCoproperad {
    let p = random_matrix_properad(seed, policy);
    let bp = Arc::new(bar(&p, policy));
    let a = random_a(&bp, seed ^ 0x5eed);
    let (c, _) = twist(&bp, &a, &format!("B({})^a{seed}", p.name));
    (*c).clone()
}

/// A random lax morphism out of `c`: either a twist `(id, a)` or, when `c`
/// is a bar construction of a matrix algebra, the bar image of a random
/// conjugation.
pub fn random_lax(seed: u64, c: &Arc<CurvedCoproperad>) -> LaxMorphism {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_a(c, rng.gen());
    twist(c, &a, &format!("{}^a{seed}", c.name)).1
}

/// The bar image of a random conjugation of a random matrix algebra, with
/// the algebra, its bar construction and the target's.
pub fn random_bar_lax(seed: u64, policy: TruncationPolicy) -> Result<LaxMorphism, Error> {
    let data = random_matrix_data(MATRIX_SIZE, seed);
    let p = Arc::new(matrix_properad(&format!("Mat{MATRIX_SIZE}#{seed}"), &data, policy));
    let phi = random_conjugation(&p, &data, seed.wrapping_add(1000));
    let bp = Arc::new(bar(&p, policy));
    let bq = Arc::new(bar(&phi.target, policy));
    bar_morphism(&phi, &bp, &bq)
}

/// A random curved twisting morphism `B(P)^a → P′`: `π` pulled back along
/// the inverse twist `(id, −a)` and pushed forward along a conjugation.
pub fn random_twisting(seed: u64, policy: TruncationPolicy) -> Result<TwistingMorphism, Error> {
    let data = random_matrix_data(MATRIX_SIZE, seed);
    let p = Arc::new(matrix_properad(&format!("Mat{MATRIX_SIZE}#{seed}"), &data, policy));
    let bp = Arc::new(bar(&p, policy));
    let a = random_a(&bp, seed ^ 0x5eed);
    let (c, _) = twist(&bp, &a, &format!("B({})^a{seed}", p.name));
    let minus = ScalarMap { degree: -1, values: a.values.iter().map(|(g, v)| (g.clone(), -v.clone())).collect() };
    let mut back = LaxMorphism::identity(c.clone());
    back.target = bp.clone();
    back.a = minus;
    let alpha = tw_pullback(&back, &pi(&bp, &p)?)?;
    let phi = random_conjugation(&p, &data, seed.wrapping_add(2000));
    tw_pushforward(&phi, &alpha)
}
