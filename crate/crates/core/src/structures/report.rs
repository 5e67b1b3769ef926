//! Structured results of the identity checkers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::glinalg::Biarity;
use crate::graphcalc::{FormalSum, Graph, TruncationPolicy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Location {
    pub biarity: Biarity,
    pub weight: usize,
    pub element: String,
    pub graph: Graph,
}

impl Location {
    pub fn of(g: &Graph) -> Self {
        Location { biarity: g.biarity(), weight: g.weight(), element: g.to_string(), graph: g.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub status: Status,
    pub axiom: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub location: Option<Location>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<FormalSum>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<FormalSum>,
    pub truncated: bool,
    pub policy: TruncationPolicy,
    /// Number of basis elements on which the identity was evaluated.
    pub checked: usize,
    pub summary: String,
}

impl CheckReport {
    pub fn pass(axiom: &str, policy: TruncationPolicy, truncated: bool, checked: usize) -> Self {
        let summary = if truncated {
            format!("{axiom}: verified up to weight {}", policy.max_weight)
        } else {
            format!("{axiom}: verified")
        };
        CheckReport { status: Status::Pass, axiom: axiom.into(), location: None, lhs: None, rhs: None, truncated, policy, checked, summary }
    }

    pub fn fail(axiom: &str, policy: TruncationPolicy, truncated: bool, checked: usize, at: &Graph, lhs: FormalSum, rhs: FormalSum) -> Self {
        let summary = format!("{axiom}: fails at {at} (biarity {}, weight {})", at.biarity(), at.weight());
        CheckReport {
            status: Status::Fail,
            axiom: axiom.into(),
            location: Some(Location::of(at)),
            lhs: Some(lhs),
            rhs: Some(rhs),
            truncated,
            policy,
            checked,
            summary,
        }
    }

    /// Marks the report as truncated (or not) and refreshes the summary.
    pub fn with_truncated(mut self, t: bool) -> Self {
        self.truncated |= t;
        if self.passed() {
            self.summary = if self.truncated {
                format!("{}: verified up to weight {}", self.axiom, self.policy.max_weight)
            } else {
                format!("{}: verified", self.axiom)
            };
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Evaluates `lhs(x) == rhs(x)` on every basis element in order and
    /// reports the first disagreement.
    pub fn check_each<'a>(
        axiom: &str,
        policy: TruncationPolicy,
        truncated: bool,
        basis: impl IntoIterator<Item = &'a Graph>,
        mut sides: impl FnMut(&Graph) -> (FormalSum, FormalSum),
    ) -> Self {
        let mut n = 0;
        for x in basis {
            let (l, r) = sides(x);
            n += 1;
            if l != r {
                return Self::fail(axiom, policy, truncated, n, x, l, r);
            }
        }
        Self::pass(axiom, policy, truncated, n)
    }

    /// First failing report, or a combined pass.
    pub fn all(axiom: &str, reports: Vec<CheckReport>) -> Self {
        let policy = reports.first().map(|r| r.policy).unwrap_or_default();
        let truncated = reports.iter().any(|r| r.truncated);
        let checked = reports.iter().map(|r| r.checked).sum();
        if let Some(f) = reports.into_iter().find(|r| !r.passed()) {
            return CheckReport { truncated, ..f };
        }
        Self::pass(axiom, policy, truncated, checked)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.summary)?;
        if let (Some(l), Some(r)) = (&self.lhs, &self.rhs) {
            write!(f, "\n  lhs = {l}\n  rhs = {r}")?;
        }
        Ok(())
    }
}

/// Scalars as elements of `I`.
pub fn in_unit(c: crate::Scalar) -> FormalSum {
    FormalSum::term(Graph::unit(), c)
}
