use serde::{Deserialize, Serialize};

use super::graph::Graph;

/// Bounds every constructed element must respect.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationPolicy {
    /// Total weight (sum of decoration weights).
    pub max_weight: usize,
    pub max_inputs: usize,
    pub max_outputs: usize,
    pub min_degree: i64,
    pub max_degree: i64,
}

impl TruncationPolicy {
    pub fn new(max_weight: usize, max_inputs: usize, max_outputs: usize) -> Self {
        TruncationPolicy { max_weight, max_inputs, max_outputs, min_degree: -64, max_degree: 64 }
    }

    pub fn with_weight(mut self, w: usize) -> Self {
        self.max_weight = w;
        self
    }

    pub fn admits(&self, g: &Graph) -> bool {
        let b = g.biarity();
        let d = g.degree();
        g.weight() <= self.max_weight
            && b.inputs <= self.max_inputs
            && b.outputs <= self.max_outputs
            && d >= self.min_degree
            && d <= self.max_degree
    }

    /// True when a graph of this shape may appear.
    pub fn admits_arity(&self, outs: usize, ins: usize) -> bool {
        outs <= self.max_outputs && ins <= self.max_inputs
    }

    /// The bounds met by every connected piece of an admitted graph (pieces
    /// cut out by Δ_(1,1) or contracted by a differential).
    pub fn widened(&self) -> Self {
        let slack = self.max_weight.saturating_sub(1);
        TruncationPolicy { max_inputs: self.max_inputs + slack, max_outputs: self.max_outputs + slack, ..*self }
    }

    pub fn admits_piece(&self, g: &Graph) -> bool {
        self.widened().admits(g)
    }

    /// True when a vertex of this shape may appear inside an admitted graph.
    /// Contracting part of a tree of weight `w` can leave a vertex with up
    /// to `w - 1` more legs than the whole graph, so vertices get that slack.
    pub fn admits_vertex(&self, outs: usize, ins: usize) -> bool {
        let slack = self.max_weight.saturating_sub(1);
        outs <= self.max_outputs + slack && ins <= self.max_inputs + slack
    }
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy::new(3, 4, 1)
    }
}
