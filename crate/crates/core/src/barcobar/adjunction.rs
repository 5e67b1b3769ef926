//! Universal twisting morphisms, bar and cobar on morphisms, and the
//! bijections `Hom(ΩC, P) ≅ Tw(C, P) ≅ Lax(C, BP)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::glinalg::Scalar;
use crate::graphcalc::{delta_graph, graft, Dec, FormalSum, Graph};
use crate::structures::{
    tw_pullback, CheckReport, CurvedCoproperad, LaxMorphism, LinearMap, PropMorphism, ScalarMap, SemiAugProperad,
    TwistingMorphism,
};
use crate::Error;

use super::bar::rename_terms;

/// Sign of `π(s b̄) = σ b̄`, and of the corestriction of `g_α`.
pub const PI_SIGN: i64 = 1;
/// Sign of `ι(c) = σ s⁻¹c`, and of `f_α(s⁻¹c) = σ α(c)`.
pub const IOTA_SIGN: i64 = -1;
/// Sign of `a(s b̄) = σ ε'(φ b̄)` in the bar construction of a morphism.
pub const BAR_MORPHISM_SIGN: i64 = 1;
/// Sign of the unit term `σ a(c)·1` in the cobar construction of a lax morphism.
pub const COBAR_MORPHISM_SIGN: i64 = -1;

/// Representative of `b` to the cogenerator (or generator) suspending it.
fn index(sources: &BTreeMap<Arc<str>, Graph>, gens: &[Dec]) -> BTreeMap<Graph, Dec> {
    gens.iter().filter_map(|d| sources.get(&d.name).map(|r| (r.clone(), d.clone()))).collect()
}

fn require_bar_of(bp: &CurvedCoproperad, p: &SemiAugProperad) -> Result<(), Error> {
    if bp.name != format!("B({})", p.name) {
        return Err(Error::Argument(format!("{} is not the bar construction of {}", bp.name, p.name)));
    }
    Ok(())
}

fn require_cobar_of(op: &SemiAugProperad, c: &CurvedCoproperad) -> Result<(), Error> {
    if op.name != format!("Omega({})", c.name) {
        return Err(Error::Argument(format!("{} is not the cobar construction of {}", op.name, c.name)));
    }
    Ok(())
}

/// `π : BP → P`, `s b̄ ↦ b̄`.
pub fn pi(bp: &Arc<CurvedCoproperad>, p: &Arc<SemiAugProperad>) -> Result<TwistingMorphism, Error> {
    require_bar_of(bp, p)?;
    let sign = Scalar::int(PI_SIGN);
    let mut values = BTreeMap::new();
    for dec in bp.cogenerators() {
        let b = &bp.sources[&dec.name];
        values.insert(Graph::single(dec.clone()), p.lift(&FormalSum::monomial(b.clone())).scale(&sign));
    }
    TwistingMorphism::new(bp.clone(), p.clone(), LinearMap { degree: -1, values })
}

/// `ι : C → ΩC`, `c ↦ s⁻¹c`.
pub fn iota(c: &Arc<CurvedCoproperad>, op: &Arc<SemiAugProperad>) -> Result<TwistingMorphism, Error> {
    require_cobar_of(op, c)?;
    let gens = index(&op.sources, op.generators());
    let sign = Scalar::int(IOTA_SIGN);
    let basis = c.domain_basis();
    let alpha = LinearMap::tabulate(-1, &basis, |x| match gens.get(x) {
        Some(d) => FormalSum::term(Graph::single(d.clone()), sign.clone()),
        None => FormalSum::zero(),
    });
    TwistingMorphism::new(c.clone(), op.clone(), alpha)
}

/// `f_α : ΩC → P`, generated by `s⁻¹c ↦ α(c)`.
pub fn adjoint_left(alpha: &TwistingMorphism, op: &Arc<SemiAugProperad>) -> Result<PropMorphism, Error> {
    require_cobar_of(op, &alpha.c)?;
    let sign = Scalar::int(IOTA_SIGN);
    let mut images = BTreeMap::new();
    for d in op.generators() {
        let c = &op.sources[&d.name];
        images.insert(d.name.clone(), alpha.alpha.apply(c).scale(&sign));
    }
    Ok(PropMorphism { source: op.clone(), target: alpha.p.clone(), images })
}

/// Restricts to generators and desuspends: `c ↦ f(s⁻¹c)`.
pub fn from_left(f: &PropMorphism, c: &Arc<CurvedCoproperad>) -> Result<TwistingMorphism, Error> {
    require_cobar_of(&f.source, c)?;
    let gens = index(&f.source.sources, f.source.generators());
    let sign = Scalar::int(IOTA_SIGN);
    let basis = c.domain_basis();
    let alpha = LinearMap::tabulate(-1, &basis, |x| match gens.get(x) {
        Some(d) => f.apply(&Graph::single(d.clone())).scale(&sign),
        None => FormalSum::zero(),
    });
    TwistingMorphism::new(c.clone(), f.target.clone(), alpha)
}

/// `(g_α, ε·α) : C → BP`, with `g_α` the coproperad morphism whose
/// corestriction is `s ᾱ`.
pub fn adjoint_right(alpha: &TwistingMorphism, bp: &Arc<CurvedCoproperad>) -> Result<LaxMorphism, Error> {
    let p = &alpha.p;
    require_bar_of(bp, p)?;
    let cogens = index(&bp.sources, bp.cogenerators());
    let sign = Scalar::int(PI_SIGN);
    let c = &alpha.c;
    let basis = c.domain_basis();
    let a = ScalarMap::tabulate(-1, &basis, |x| p.epsilon_of(&alpha.alpha.apply(x)));
    let corestriction = |x: &Graph| {
        let bar = p.reduce(&alpha.alpha.apply(x));
        rename_terms(&bar, |r| cogens.get(r).cloned()).0.scale(&sign)
    };
    // g is determined weight by weight: Δ̄'(g x) = (g ⊗ g) Δ̄(x), and a sum of
    // graphs with at least two vertices is recovered from its Δ̄ by dividing
    // each graph's coefficient by its number of cuts.
    let mut values: BTreeMap<Graph, FormalSum> = BTreeMap::new();
    let mut order = basis.clone();
    order.sort_by_key(|g| (g.weight(), g.len()));
    let g_of = |x: &Graph, values: &BTreeMap<Graph, FormalSum>| -> FormalSum {
        let mut glued = FormalSum::zero();
        for s in c.delta(x) {
            let gu = apply_table(values, &s.upper, &corestriction);
            let gl = apply_table(values, &s.lower, &corestriction);
            if gu.is_zero() || gl.is_zero() {
                continue;
            }
            glued.add_scaled(&graft(&s.skeleton, &[gu, gl]).expect("biarity"), &s.coeff);
        }
        let mut out = corestriction(x);
        for (h, k) in glued.iter() {
            // cuts leaving the window were dropped from `glued` as well
            let cuts = delta_graph(h)
                .iter()
                .filter(|s| bp.policy.admits_piece(&s.upper) && bp.policy.admits_piece(&s.lower))
                .count() as i64;
            if cuts == 0 {
                continue;
            }
            out.add_term(h, k / &Scalar::int(cuts));
        }
        out.filter(|h| bp.policy.admits_piece(h))
    };
    for x in &order {
        let v = g_of(x, &values);
        values.insert(x.clone(), v);
    }
    values.retain(|_, v| !v.is_zero());
    Ok(LaxMorphism { source: c.clone(), target: bp.clone(), f: LinearMap { degree: 0, values }, a })
}

fn apply_table(values: &BTreeMap<Graph, FormalSum>, x: &Graph, fallback: &dyn Fn(&Graph) -> FormalSum) -> FormalSum {
    let (rep, om, im, sign) = crate::graphcalc::orbit_rep(x);
    match values.get(&rep) {
        Some(v) => v.relabel(&om, &im).scale(&sign),
        None if rep.len() == 1 => fallback(&rep).relabel(&om, &im).scale(&sign),
        None => FormalSum::zero(),
    }
}

/// `π·f + e·a`.
pub fn from_right(l: &LaxMorphism, p: &Arc<SemiAugProperad>) -> Result<TwistingMorphism, Error> {
    let pi = pi(&l.target, p)?;
    tw_pullback(l, &pi)
}

/// `(𝓕^c(φ̄), ε'·s⁻¹φ) : BP → BP'`.
pub fn bar_morphism(phi: &PropMorphism, bp: &Arc<CurvedCoproperad>, bq: &Arc<CurvedCoproperad>) -> Result<LaxMorphism, Error> {
    let (p, q) = (&phi.source, &phi.target);
    require_bar_of(bp, p)?;
    require_bar_of(bq, q)?;
    if !phi.check().passed() {
        return Err(Error::Argument("not a morphism of dg properads".into()));
    }
    let target_cogens = index(&bq.sources, bq.cogenerators());
    let sign = Scalar::int(BAR_MORPHISM_SIGN);
    let mut vertex_image = BTreeMap::new();
    let mut a_values = BTreeMap::new();
    for dec in bp.cogenerators() {
        let b = p.lift(&FormalSum::monomial(bp.sources[&dec.name].clone()));
        let image = phi.apply_sum(&b);
        let sbar = rename_terms(&q.reduce(&image), |r| target_cogens.get(r).cloned()).0;
        vertex_image.insert(dec.name.clone(), sbar);
        let e = q.epsilon_of(&image);
        if !e.is_zero() {
            a_values.insert(Graph::single(dec.clone()), e * &sign);
        }
    }
    let basis = bp.domain_basis();
    let f = LinearMap::tabulate(0, &basis, |x| {
        let blocks: Vec<FormalSum> = x.vertices.iter().map(|v| vertex_image[&v.name].clone()).collect();
        graft(x, &blocks).expect("biarity").filter(|h| bq.policy.admits_piece(h))
    });
    Ok(LaxMorphism { source: bp.clone(), target: bq.clone(), f, a: ScalarMap { degree: -1, values: a_values } })
}

/// The properad morphism `ΩC → ΩC'` generated by `s⁻¹c ↦ σ a(c)·1 + s⁻¹f(c)`.
pub fn cobar_morphism(l: &LaxMorphism, oc: &Arc<SemiAugProperad>, od: &Arc<SemiAugProperad>) -> Result<PropMorphism, Error> {
    require_cobar_of(oc, &l.source)?;
    require_cobar_of(od, &l.target)?;
    let target_gens = index(&od.sources, od.generators());
    let sign = Scalar::int(COBAR_MORPHISM_SIGN);
    let mut images = BTreeMap::new();
    for d in oc.generators() {
        let c = &oc.sources[&d.name];
        let mut v = rename_terms(&l.apply_f(c), |r| target_gens.get(r).cloned()).0;
        v.add_scaled(&FormalSum::unit(), &(l.a.apply(c) * &sign));
        images.insert(d.name.clone(), v);
    }
    Ok(PropMorphism { source: oc.clone(), target: od.clone(), images })
}

/// Checks `α = f_α·ι` through `ΩC` and `α = π·g_α + e·a_α` through `BP`.
pub fn check_factorization(
    alpha: &TwistingMorphism,
    op: &Arc<SemiAugProperad>,
    bp: &Arc<CurvedCoproperad>,
) -> Result<CheckReport, Error> {
    let c = &alpha.c;
    let f = adjoint_left(alpha, op)?;
    let iota = iota(c, op)?;
    let top = LinearMap::tabulate(-1, &c.domain_basis(), |x| f.apply_sum(&iota.alpha.apply(x)));
    let l = adjoint_right(alpha, bp)?;
    let bottom = from_right(&l, &alpha.p)?;
    let basis = c.domain_basis();
    let policy = c.policy;
    let r1 = CheckReport::check_each("alpha = f_alpha iota", policy, false, &basis, |x| (alpha.alpha.apply(x), top.apply(x)));
    let r2 = CheckReport::check_each("alpha = pi g_alpha + e a_alpha", policy, false, &basis, |x| {
        (alpha.alpha.apply(x), bottom.alpha.apply(x))
    });
    Ok(CheckReport::all("factorization", vec![r1, r2]).with_truncated(c.was_truncated()))
}
