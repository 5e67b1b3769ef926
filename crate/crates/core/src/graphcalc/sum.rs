//! Finite rational linear combinations of canonical graph monomials.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::glinalg::Scalar;
use crate::Error;

use super::canon::{canonicalize, canonicalize_unchecked};
use super::graph::Graph;

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormalSum {
    terms: BTreeMap<Graph, Scalar>,
}

impl FormalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::monomial(Graph::unit())
    }

    pub fn monomial(g: Graph) -> Self {
        Self::term(g, Scalar::one())
    }

    /// `c * g`, canonicalized. Panics on graphs breaking the structural
    /// invariants; use [`FormalSum::try_term`] for untrusted input.
    pub fn term(g: Graph, c: Scalar) -> Self {
        let mut s = Self::zero();
        s.add_term(&g, c);
        s
    }

    pub fn try_term(g: Graph, c: Scalar) -> Result<Self, Error> {
        let (g, sign) = canonicalize(&g)?;
        let mut s = Self::zero();
        s.add_canonical(g, c * sign);
        Ok(s)
    }

    pub fn add_term(&mut self, g: &Graph, c: Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert!(g.validate().is_ok(), "invalid graph {g}");
        let (g, sign) = canonicalize_unchecked(g);
        self.add_canonical(g, c * sign);
    }

    fn add_canonical(&mut self, g: Graph, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FormalSum, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (g, v) in &other.terms {
            self.add_canonical(g.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> FormalSum {
        let mut out = FormalSum::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Graph, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &Graph) -> Scalar {
        let (g, sign) = canonicalize_unchecked(g);
        self.terms.get(&g).map_or_else(Scalar::zero, |c| c * &sign)
    }

    /// Applies a linear map given on monomials.
    pub fn map_linear(&self, mut f: impl FnMut(&Graph) -> FormalSum) -> FormalSum {
        let mut out = FormalSum::zero();
        for (g, c) in &self.terms {
            out.add_scaled(&f(g), c);
        }
        out
    }

    /// Applies a linear functional given on monomials.
    pub fn eval_linear(&self, mut f: impl FnMut(&Graph) -> Scalar) -> Scalar {
        self.terms.iter().map(|(g, c)| f(g) * c).sum()
    }

    pub fn filter(&self, mut keep: impl FnMut(&Graph) -> bool) -> FormalSum {
        FormalSum { terms: self.terms.iter().filter(|(g, _)| keep(g)).map(|(g, c)| (g.clone(), c.clone())).collect() }
    }

    /// Drops terms rejected by `keep`, reporting whether anything was dropped.
    pub fn truncate(&self, keep: impl FnMut(&Graph) -> bool) -> (FormalSum, bool) {
        let kept = self.filter(keep);
        let dropped = kept.len() != self.len();
        (kept, dropped)
    }
}

impl Add for FormalSum {
    type Output = FormalSum;
    fn add(mut self, rhs: FormalSum) -> FormalSum {
        self.add_scaled(&rhs, &Scalar::one());
        self
    }
}

impl<'a> Add<&'a FormalSum> for &'a FormalSum {
    type Output = FormalSum;
    fn add(self, rhs: &'a FormalSum) -> FormalSum {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub for FormalSum {
    type Output = FormalSum;
    fn sub(mut self, rhs: FormalSum) -> FormalSum {
        self.add_scaled(&rhs, &-Scalar::one());
        self
    }
}

impl<'a> Sub<&'a FormalSum> for &'a FormalSum {
    type Output = FormalSum;
    fn sub(self, rhs: &'a FormalSum) -> FormalSum {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

impl Neg for FormalSum {
    type Output = FormalSum;
    fn neg(self) -> FormalSum {
        self.scale(&-Scalar::one())
    }
}

impl std::iter::Sum for FormalSum {
    fn sum<I: Iterator<Item = FormalSum>>(iter: I) -> FormalSum {
        iter.fold(FormalSum::zero(), |a, b| a + b)
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{g}")?;
            } else {
                write!(f, "({c}) {g}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: Scalar,
    graph: Graph,
}

impl Serialize for FormalSum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> =
            self.terms.iter().map(|(g, c)| TermJson { coeff: c.clone(), graph: g.clone() }).collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FormalSum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        let mut out = FormalSum::zero();
        for t in terms {
            let term = FormalSum::try_term(t.graph, t.coeff).map_err(serde::de::Error::custom)?;
            out = out + term;
        }
        Ok(out)
    }
}
