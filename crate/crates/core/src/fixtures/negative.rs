//! Small hand-made structures, some deliberately broken.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::glinalg::Scalar;
use crate::graphcalc::{orbit_rep, two_level_composites, Coderivation, Dec, FormalSum, Graph, TruncationPolicy};
use crate::structures::{CoKind, CurvedCoproperad, LaxMorphism};

/// One cogenerator `x` of biarity (1,1) and the given degree, with `Δ̄ = 0`,
/// `d = 0` and `θ(x) = theta`.
pub fn one_cogenerator(name: &str, degree: i64, theta: Scalar) -> CurvedCoproperad {
    let x = Dec::new("x", degree, 1, 1);
    let mut th = BTreeMap::new();
    if !theta.is_zero() {
        th.insert(x.name.clone(), theta);
    }
    let kind = CoKind::Explicit { cogens: vec![x], delta: BTreeMap::new(), d: BTreeMap::new(), theta: th };
    CurvedCoproperad::new(name, kind, TruncationPolicy::new(2, 1, 1))
}

/// Cofree on `x, y` of degree 1 in biarity (1,1), `θ = 0`, with the
/// coderivation contracting `x` over `y` to `x` and every other pair to 0.
/// This is the bar construction of a non-associative product
/// (`(XY)Y = X`, `X(YY) = 0`), so `d² ≠ 0` first at weight 3.
pub fn non_associative() -> CurvedCoproperad {
    let x = Dec::new("x", 1, 1, 1);
    let y = Dec::new("y", 1, 1, 1);
    let mut pairs = BTreeMap::new();
    for g in two_level_composites(&Graph::single(x.clone()), &Graph::single(y.clone())) {
        pairs.insert(orbit_rep(&g).0, FormalSum::monomial(Graph::single(x.clone())));
    }
    let d = Coderivation { degree: -1, on_single: BTreeMap::new(), on_pairs: pairs };
    let kind = CoKind::Cofree { cogens: vec![x, y], d, theta: BTreeMap::new() };
    CurvedCoproperad::new("NonAssoc", kind, TruncationPolicy::new(3, 1, 1))
}

/// Cofree on `x` (degree 1) and `y` (degree 2) in biarity (1,1), `θ = 0`,
/// with `d(y) = x` and `x` over `y` contracting to `y`. Then `d² = 0` on
/// cogenerators but `d²(x∘y) = x`, so axiom (a) fails at weight 2.
pub fn d_squared_nonzero() -> CurvedCoproperad {
    let x = Dec::new("x", 1, 1, 1);
    let y = Dec::new("y", 2, 1, 1);
    let single = BTreeMap::from([(Graph::single(y.clone()), FormalSum::monomial(Graph::single(x.clone())))]);
    let mut pairs = BTreeMap::new();
    for g in two_level_composites(&Graph::single(x.clone()), &Graph::single(y.clone())) {
        let (rep, _, _, sign) = orbit_rep(&g);
        pairs.insert(rep, FormalSum::term(Graph::single(y.clone()), sign));
    }
    let d = Coderivation { degree: -1, on_single: single, on_pairs: pairs };
    let kind = CoKind::Cofree { cogens: vec![x, y], d, theta: BTreeMap::new() };
    CurvedCoproperad::new("DSquared", kind, TruncationPolicy::new(2, 1, 1))
}

/// `(id, 0)` between one-cogenerator structures whose curvatures differ
/// (`θ(x) = 1`, `θ′(x) = 2`); fails Eq. (2) at `x`.
pub fn curvature_mismatch() -> LaxMorphism {
    let c = Arc::new(one_cogenerator("X[1]", 2, Scalar::one()));
    let c2 = Arc::new(one_cogenerator("X[2]", 2, Scalar::int(2)));
    let mut l = LaxMorphism::identity(c);
    l.target = c2;
    l
}
