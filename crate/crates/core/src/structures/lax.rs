//! Lax morphisms of curved coproperads.

use std::sync::Arc;

use crate::glinalg::Scalar;
use crate::graphcalc::{encode_blocks, encode_tensor, graft, rep_dec, FormalSum, Graph};
use crate::Error;

use super::convolution::TwistingMorphism;
use super::coproperad::CurvedCoproperad;
use super::maps::{LinearMap, ScalarMap};
use super::report::{in_unit, CheckReport};

/// A pair `(f, a)`: `f` a coproperad morphism given on `C̄`, `a : C → I` of
/// degree −1.
#[derive(Clone, Debug)]
pub struct LaxMorphism {
    pub source: Arc<CurvedCoproperad>,
    pub target: Arc<CurvedCoproperad>,
    pub f: LinearMap,
    pub a: ScalarMap,
}

impl LaxMorphism {
    pub fn identity(c: Arc<CurvedCoproperad>) -> Self {
        let basis = c.domain_basis();
        let f = LinearMap::tabulate(0, &basis, |x| FormalSum::monomial(x.clone()));
        LaxMorphism { source: c.clone(), target: c, f, a: ScalarMap::zero(-1) }
    }

    pub fn apply_f(&self, g: &Graph) -> FormalSum {
        if g.is_unit() {
            FormalSum::unit()
        } else {
            self.f.apply(g)
        }
    }

    pub fn apply_f_sum(&self, x: &FormalSum) -> FormalSum {
        x.map_linear(|g| self.apply_f(g))
    }

    /// `(f ⊗ a − a ⊗ f)·Δ_(1,1)(x)`.
    pub fn mixed_term(&self, x: &Graph) -> FormalSum {
        let mut out = FormalSum::zero();
        let unit = FormalSum::unit();
        for s in self.source.delta(x) {
            let al = self.a.apply(&s.lower);
            if !al.is_zero() {
                let t = graft(&s.skeleton, &[self.apply_f(&s.upper), unit.clone()]).expect("biarity");
                out.add_scaled(&t, &(&s.coeff * &al * Scalar::sign(self.a.degree * s.upper.degree())));
            }
            let au = self.a.apply(&s.upper);
            if !au.is_zero() {
                let t = graft(&s.skeleton, &[unit.clone(), self.apply_f(&s.lower)]).expect("biarity");
                out.add_scaled(&t, &-(&s.coeff * &au));
            }
        }
        out
    }

    /// `a⋆a(x) = γ_I (a ⊗ a) Δ_(1,1)(x)`.
    pub fn a_star_a(&self, x: &Graph) -> Scalar {
        self.source
            .delta(x)
            .iter()
            .map(|s| s.coeff.clone() * Scalar::sign(self.a.degree * s.upper.degree()) * self.a.apply(&s.upper) * self.a.apply(&s.lower))
            .sum()
    }
}

fn delta_encoded(c: &CurvedCoproperad, x: &FormalSum) -> FormalSum {
    let mut out = FormalSum::zero();
    for s in c.delta_sum(x) {
        let (g, sign) = encode_blocks(&s.skeleton, &[&s.upper, &s.lower], rep_dec);
        out.add_term(&g, sign * s.coeff);
    }
    out
}

/// Checks that `f` is a morphism and Eqs. (1), (2) on every basis element.
pub fn check_lax(l: &LaxMorphism) -> CheckReport {
    let (c, c2) = (&l.source, &l.target);
    c.reset_truncated();
    c2.reset_truncated();
    let basis = c.basis();
    let policy = c.policy;
    let degree = CheckReport::check_each("f has degree 0", policy, false, &basis, |x| {
        (l.f.apply(x).filter(|y| y.degree() != x.degree() || y.is_unit()), FormalSum::zero())
    });
    let coalg = CheckReport::check_each("Delta' f = (f x f) Delta", policy, false, &basis, |x| {
        let lhs = delta_encoded(c2, &l.f.apply(x));
        let mut rhs = FormalSum::zero();
        for s in c.delta(x) {
            let t = encode_tensor(&s.skeleton, &[l.apply_f(&s.upper), l.apply_f(&s.lower)], rep_dec);
            rhs.add_scaled(&t, &s.coeff);
        }
        (lhs, rhs)
    });
    let eq1 = CheckReport::check_each("Eq. (1): d' f = f d + (f x a - a x f) Delta", policy, false, &basis, |x| {
        let m = FormalSum::monomial(x.clone());
        let lhs = c2.differential(&l.apply_f_sum(&m));
        let rhs = l.apply_f_sum(&c.differential(&m)) + l.mixed_term(x);
        (lhs, rhs)
    });
    let eq2 = CheckReport::check_each("Eq. (2): theta' f + a d + a*a = theta", policy, false, &basis, |x| {
        // written the way the pullback of twisting morphisms needs it
        let m = FormalSum::monomial(x.clone());
        let lhs = c2.theta_sum(&l.apply_f_sum(&m)) + l.a.apply_sum(&c.differential(&m)) + l.a_star_a(x);
        let rhs = c.theta(x);
        (in_unit(lhs), in_unit(rhs))
    });
    CheckReport::all("lax morphism", vec![degree, coalg, eq1, eq2]).with_truncated(c.was_truncated() || c2.was_truncated())
}

/// `(g, b)·(f, a) = (g·f, a + b·f)`.
pub fn compose_lax(gb: &LaxMorphism, fa: &LaxMorphism) -> Result<LaxMorphism, Error> {
    if fa.target.name != gb.source.name {
        return Err(Error::Argument(format!("cannot compose: {} is not {}", fa.target.name, gb.source.name)));
    }
    let basis = fa.source.domain_basis();
    let f = LinearMap::tabulate(0, &basis, |x| gb.apply_f_sum(&fa.f.apply(x)));
    let bf = ScalarMap::tabulate(-1, &basis, |x| gb.a.apply_sum(&fa.f.apply(x)));
    Ok(LaxMorphism { source: fa.source.clone(), target: gb.target.clone(), f, a: fa.a.add(&bf) })
}

/// `α·f + e·a`.
pub fn tw_pullback(fa: &LaxMorphism, alpha: &TwistingMorphism) -> Result<TwistingMorphism, Error> {
    if fa.target.name != alpha.c.name {
        return Err(Error::Argument(format!("lax morphism lands in {}, twisting morphism starts at {}", fa.target.name, alpha.c.name)));
    }
    let p = alpha.p.clone();
    let e = p.unit_element();
    let basis = fa.source.domain_basis();
    let values = LinearMap::tabulate(-1, &basis, |x| alpha.alpha.apply_sum(&fa.f.apply(x)) + e.scale(&fa.a.apply(x)));
    TwistingMorphism::new(fa.source.clone(), p, values)
}
