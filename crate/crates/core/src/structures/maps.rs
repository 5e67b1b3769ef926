//! Equivariant maps stored by their values on orbit representatives.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_with::serde_as;

use crate::glinalg::Scalar;
use crate::graphcalc::{lookup_equivariant, lookup_scalar, FormalSum, Graph};

/// An 𝕊-equivariant map of a fixed degree into graph sums. Representatives
/// missing from `values` map to zero.
#[serde_as]
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearMap {
    pub degree: i64,
    #[serde_as(as = "Vec<(_, _)>")]
    pub values: BTreeMap<Graph, FormalSum>,
}

impl LinearMap {
    pub fn zero(degree: i64) -> Self {
        LinearMap { degree, values: BTreeMap::new() }
    }

    /// Tabulates `f` on the given representatives, dropping zero values.
    pub fn tabulate<'a>(degree: i64, reps: impl IntoIterator<Item = &'a Graph>, mut f: impl FnMut(&Graph) -> FormalSum) -> Self {
        let mut values = BTreeMap::new();
        for r in reps {
            let v = f(r);
            if !v.is_zero() {
                values.insert(r.clone(), v);
            }
        }
        LinearMap { degree, values }
    }

    pub fn apply(&self, g: &Graph) -> FormalSum {
        lookup_equivariant(&self.values, g)
    }

    pub fn apply_sum(&self, x: &FormalSum) -> FormalSum {
        x.map_linear(|g| self.apply(g))
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(FormalSum::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = LinearMap::zero(self.degree);
        for (k, v) in &self.values {
            let w = v.scale(c);
            if !w.is_zero() {
                out.values.insert(k.clone(), w);
            }
        }
        out
    }

    pub fn add(&self, other: &LinearMap) -> Self {
        let mut values = self.values.clone();
        for (k, v) in &other.values {
            let e = values.entry(k.clone()).or_default();
            *e = &*e + v;
            if e.is_zero() {
                values.remove(k);
            }
        }
        LinearMap { degree: self.degree, values }
    }
}

/// A map to `I`, i.e. scalars on biarity (1,1).
#[serde_as]
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarMap {
    pub degree: i64,
    #[serde_as(as = "Vec<(_, _)>")]
    pub values: BTreeMap<Graph, Scalar>,
}

impl ScalarMap {
    pub fn zero(degree: i64) -> Self {
        ScalarMap { degree, values: BTreeMap::new() }
    }

    pub fn tabulate<'a>(degree: i64, reps: impl IntoIterator<Item = &'a Graph>, mut f: impl FnMut(&Graph) -> Scalar) -> Self {
        let mut values = BTreeMap::new();
        for r in reps {
            let v = f(r);
            if !v.is_zero() {
                values.insert(r.clone(), v);
            }
        }
        ScalarMap { degree, values }
    }

    pub fn apply(&self, g: &Graph) -> Scalar {
        if g.is_unit() || g.biarity() != crate::glinalg::Biarity::UNIT {
            return Scalar::zero();
        }
        lookup_scalar(&self.values, g)
    }

    pub fn apply_sum(&self, x: &FormalSum) -> Scalar {
        x.eval_linear(|g| self.apply(g))
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &ScalarMap) -> Self {
        let mut values = self.values.clone();
        for (k, v) in &other.values {
            let s = values.get(k).cloned().unwrap_or_else(Scalar::zero) + v;
            if s.is_zero() {
                values.remove(k);
            } else {
                values.insert(k.clone(), s);
            }
        }
        ScalarMap { degree: self.degree, values }
    }
}
