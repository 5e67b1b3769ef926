//! The convolution curved Lie algebra `Hom_𝕊(C̄, P)` and twisting morphisms.

use std::sync::Arc;

use crate::glinalg::Scalar;
use crate::graphcalc::{FormalSum, Graph};
use crate::Error;

use super::coproperad::CurvedCoproperad;
use super::maps::LinearMap;
use super::properad::SemiAugProperad;
use super::report::CheckReport;

/// A curved Lie algebra: `d² = [−, θ]` and `d(θ) = 0`.
pub trait CurvedLieAlgebra {
    type Elem: Clone;
    fn d(&self, x: &Self::Elem) -> Self::Elem;
    fn bracket(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn curvature(&self) -> Self::Elem;
    fn zero(&self, degree: i64) -> Self::Elem;
    /// Reports whether two elements agree.
    fn compare(&self, axiom: &str, lhs: &Self::Elem, rhs: &Self::Elem) -> CheckReport;
}

/// Checks both curved Lie axioms on the sample elements.
pub fn check_curved_lie<A: CurvedLieAlgebra>(alg: &A, samples: &[A::Elem]) -> CheckReport {
    let mut reports = vec![];
    let theta = alg.curvature();
    for x in samples {
        let lhs = alg.d(&alg.d(x));
        let rhs = alg.bracket(x, &theta);
        reports.push(alg.compare("curved Lie (a): d^2 = [-, theta]", &lhs, &rhs));
    }
    reports.push(alg.compare("curved Lie (b): d(theta) = 0", &alg.d(&theta), &alg.zero(-3)));
    CheckReport::all("curved Lie algebra", reports)
}

/// `Hom_𝕊(C, P)` restricted to maps vanishing on `I`, evaluated on a basis
/// of `C̄` within `C`'s policy.
#[derive(Clone, Debug)]
pub struct ConvolutionCLA {
    pub c: Arc<CurvedCoproperad>,
    pub p: Arc<SemiAugProperad>,
    pub basis: Vec<Graph>,
    /// Representatives of all pieces of basis elements; maps are tabulated here.
    pub domain: Vec<Graph>,
    /// Whether the basis itself was cut off by the policy.
    pub basis_truncated: bool,
}

pub fn convolution(c: Arc<CurvedCoproperad>, p: Arc<SemiAugProperad>) -> ConvolutionCLA {
    c.reset_truncated();
    let basis = c.basis();
    let basis_truncated = c.was_truncated();
    let domain = c.domain_basis();
    ConvolutionCLA { c, p, basis, domain, basis_truncated }
}

impl ConvolutionCLA {
    pub fn truncated(&self) -> bool {
        self.basis_truncated || self.c.was_truncated() || self.p.was_truncated()
    }

    pub fn reset_truncated(&self) {
        self.c.reset_truncated();
        self.p.reset_truncated();
    }

    /// `∂(α)(x) = d_P α(x) − (−1)^{|α|} α(d_C x)`.
    pub fn partial_at(&self, alpha: &LinearMap, x: &Graph) -> FormalSum {
        let a = self.p.differential(&alpha.apply(x));
        let b = alpha.apply_sum(&self.c.differential(&FormalSum::monomial(x.clone())));
        a - b.scale(&Scalar::sign(alpha.degree))
    }

    /// `(α ⋆ β)(x) = γ (α ⊗ β) Δ_(1,1)(x)`.
    pub fn star_at(&self, alpha: &LinearMap, beta: &LinearMap, x: &Graph) -> FormalSum {
        let mut out = FormalSum::zero();
        for s in self.c.delta(x) {
            let u = alpha.apply(&s.upper);
            if u.is_zero() {
                continue;
            }
            let l = beta.apply(&s.lower);
            if l.is_zero() {
                continue;
            }
            let sign = Scalar::sign(beta.degree * s.upper.degree());
            let v = self.p.compose(&s.skeleton, &[u, l]).expect("Δ pieces fit the skeleton");
            out.add_scaled(&v, &(s.coeff * sign));
        }
        out
    }

    pub fn theta_at(&self, x: &Graph) -> FormalSum {
        self.p.unit_element().scale(&self.c.theta(x))
    }

    pub fn partial(&self, alpha: &LinearMap) -> LinearMap {
        LinearMap::tabulate(alpha.degree - 1, &self.domain, |x| self.partial_at(alpha, x))
    }

    pub fn star(&self, alpha: &LinearMap, beta: &LinearMap) -> LinearMap {
        LinearMap::tabulate(alpha.degree + beta.degree, &self.domain, |x| self.star_at(alpha, beta, x))
    }

    pub fn theta_map(&self) -> LinearMap {
        LinearMap::tabulate(-2, &self.domain, |x| self.theta_at(x))
    }

    /// First basis element where the maps differ.
    pub fn compare_maps(&self, axiom: &str, lhs: &LinearMap, rhs: &LinearMap) -> CheckReport {
        let truncated = self.truncated();
        CheckReport::check_each(axiom, self.c.policy, truncated, &self.basis, |x| (lhs.apply(x), rhs.apply(x)))
    }
}

impl CurvedLieAlgebra for ConvolutionCLA {
    type Elem = LinearMap;

    fn d(&self, x: &LinearMap) -> LinearMap {
        self.partial(x)
    }

    fn bracket(&self, x: &LinearMap, y: &LinearMap) -> LinearMap {
        let a = self.star(x, y);
        let b = self.star(y, x).scale(&-Scalar::sign(x.degree * y.degree));
        a.add(&b)
    }

    fn curvature(&self) -> LinearMap {
        self.theta_map()
    }

    fn zero(&self, degree: i64) -> LinearMap {
        LinearMap::zero(degree)
    }

    fn compare(&self, axiom: &str, lhs: &LinearMap, rhs: &LinearMap) -> CheckReport {
        self.compare_maps(axiom, lhs, rhs)
    }
}

/// A degree −1 map `C → P` vanishing on `I`.
#[derive(Clone, Debug)]
pub struct TwistingMorphism {
    pub c: Arc<CurvedCoproperad>,
    pub p: Arc<SemiAugProperad>,
    pub alpha: LinearMap,
}

impl TwistingMorphism {
    pub fn new(c: Arc<CurvedCoproperad>, p: Arc<SemiAugProperad>, alpha: LinearMap) -> Result<Self, Error> {
        if alpha.degree != -1 {
            return Err(Error::Argument(format!("twisting morphisms have degree -1, got {}", alpha.degree)));
        }
        if alpha.values.keys().any(Graph::is_unit) {
            return Err(Error::Argument("twisting morphisms vanish on I".into()));
        }
        Ok(TwistingMorphism { c, p, alpha })
    }
}

/// Verifies `α·η = 0` and `∂(α) + α⋆α = Θ` on every basis element.
pub fn check_twisting(a: &ConvolutionCLA, alpha: &LinearMap) -> Result<CheckReport, Error> {
    if alpha.degree != -1 {
        return Err(Error::Argument(format!("twisting morphisms have degree -1, got {}", alpha.degree)));
    }
    a.reset_truncated();
    let policy = a.c.policy;
    let eta = CheckReport::check_each("alpha eta = 0", policy, false, std::iter::once(&Graph::unit()), |u| {
        (alpha.values.get(u).cloned().unwrap_or_default(), FormalSum::zero())
    });
    let mc = CheckReport::check_each("curved Maurer-Cartan: d(alpha) + alpha*alpha = Theta", policy, false, &a.basis, |x| {
        (a.partial_at(alpha, x) + a.star_at(alpha, alpha, x), a.theta_at(x))
    });
    Ok(CheckReport::all("twisting morphism", vec![eta, mc]).with_truncated(a.truncated()))
}
