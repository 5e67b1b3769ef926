//! Directed acyclic connected graphs whose vertices carry generator
//! decorations.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::glinalg::Biarity;
use crate::Error;

/// `(vertex index, slot index)`.
pub type Slot = (usize, usize);

/// A basis element of a generating collection placed at a vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Dec {
    pub name: Arc<str>,
    pub degree: i64,
    pub outs: usize,
    pub ins: usize,
    /// Contribution to the weight filtration (1 for plain generators).
    #[serde(default = "one")]
    pub weight: usize,
}

fn one() -> usize {
    1
}

impl Dec {
    pub fn new(name: &str, degree: i64, outs: usize, ins: usize) -> Self {
        Dec { name: name.into(), degree, outs, ins, weight: 1 }
    }

    pub fn with_weight(mut self, weight: usize) -> Self {
        self.weight = weight;
        self
    }

    pub fn biarity(&self) -> Biarity {
        Biarity::new(self.outs, self.ins)
    }
}

/// A graph monomial. The vertex order is the orientation datum: it is read
/// as the tensor word `v_0 ⊗ v_1 ⊗ ...` for Koszul signs.
///
/// `edges` run from an output slot of the lower vertex to an input slot of
/// the upper vertex. Global input leg `k` is plugged into `inputs[k]`, global
/// output leg `k` leaves from `outputs[k]`. The graph without vertices is the
/// unit of biarity (1,1).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Graph {
    pub vertices: Vec<Dec>,
    #[serde(default)]
    pub edges: Vec<(Slot, Slot)>,
    #[serde(default)]
    pub inputs: Vec<Slot>,
    #[serde(default)]
    pub outputs: Vec<Slot>,
}

impl Graph {
    pub fn unit() -> Self {
        Graph { vertices: vec![], edges: vec![], inputs: vec![], outputs: vec![] }
    }

    /// One vertex with legs in slot order.
    pub fn single(dec: Dec) -> Self {
        let inputs = (0..dec.ins).map(|s| (0, s)).collect();
        let outputs = (0..dec.outs).map(|s| (0, s)).collect();
        Graph { vertices: vec![dec], edges: vec![], inputs, outputs }
    }

    pub fn is_unit(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn biarity(&self) -> Biarity {
        if self.is_unit() {
            Biarity::UNIT
        } else {
            Biarity::new(self.outputs.len(), self.inputs.len())
        }
    }

    pub fn degree(&self) -> i64 {
        self.vertices.iter().map(|v| v.degree).sum()
    }

    pub fn weight(&self) -> usize {
        self.vertices.iter().map(|v| v.weight).sum()
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// True when legs are numbered in slot order of a single vertex.
    pub fn is_plain_single(&self) -> bool {
        self.vertices.len() == 1 && *self == Graph::single(self.vertices[0].clone())
    }

    /// Renames legs: output leg `k` becomes `out_map[k]`, input leg `k`
    /// becomes `in_map[k]`.
    pub fn relabel(&self, out_map: &[usize], in_map: &[usize]) -> Graph {
        if self.is_unit() {
            return self.clone();
        }
        let mut g = self.clone();
        for (k, &slot) in self.outputs.iter().enumerate() {
            g.outputs[out_map[k]] = slot;
        }
        for (k, &slot) in self.inputs.iter().enumerate() {
            g.inputs[in_map[k]] = slot;
        }
        g
    }

    /// For every vertex and output slot: `Ok((upper, in_slot))` or
    /// `Err(global output leg)`.
    pub fn out_links(&self) -> Vec<Vec<Result<Slot, usize>>> {
        let mut links: Vec<Vec<Result<Slot, usize>>> =
            self.vertices.iter().map(|v| vec![Err(usize::MAX); v.outs]).collect();
        for &((lv, ls), up) in &self.edges {
            links[lv][ls] = Ok(up);
        }
        for (k, &(v, s)) in self.outputs.iter().enumerate() {
            links[v][s] = Err(k);
        }
        links
    }

    /// For every vertex and input slot: `Ok((lower, out_slot))` or
    /// `Err(global input leg)`.
    pub fn in_links(&self) -> Vec<Vec<Result<Slot, usize>>> {
        let mut links: Vec<Vec<Result<Slot, usize>>> =
            self.vertices.iter().map(|v| vec![Err(usize::MAX); v.ins]).collect();
        for &(low, (uv, us)) in &self.edges {
            links[uv][us] = Ok(low);
        }
        for (k, &(v, s)) in self.inputs.iter().enumerate() {
            links[v][s] = Err(k);
        }
        links
    }

    /// Checks slot bookkeeping, connectivity and acyclicity.
    pub fn validate(&self) -> Result<(), Error> {
        let bad = |m: String| Err(Error::Structure(m));
        if self.is_unit() {
            if !self.edges.is_empty() || !self.inputs.is_empty() || !self.outputs.is_empty() {
                return bad("vertex-free graph must be the bare unit".into());
            }
            return Ok(());
        }
        let n = self.vertices.len();
        let mut used_out = BTreeSet::new();
        let mut used_in = BTreeSet::new();
        for &((lv, ls), (uv, us)) in &self.edges {
            if lv >= n || uv >= n || ls >= self.vertices[lv].outs || us >= self.vertices[uv].ins {
                return bad(format!("edge ({lv},{ls})->({uv},{us}) out of range"));
            }
            if !used_out.insert((lv, ls)) || !used_in.insert((uv, us)) {
                return bad(format!("slot used twice by edge ({lv},{ls})->({uv},{us})"));
            }
        }
        for &(v, s) in &self.outputs {
            if v >= n || s >= self.vertices[v].outs || !used_out.insert((v, s)) {
                return bad(format!("invalid or reused output slot ({v},{s})"));
            }
        }
        for &(v, s) in &self.inputs {
            if v >= n || s >= self.vertices[v].ins || !used_in.insert((v, s)) {
                return bad(format!("invalid or reused input slot ({v},{s})"));
            }
        }
        let total_out: usize = self.vertices.iter().map(|v| v.outs).sum();
        let total_in: usize = self.vertices.iter().map(|v| v.ins).sum();
        if used_out.len() != total_out || used_in.len() != total_in {
            return bad("dangling slot without a leg label".into());
        }
        if !self.is_connected() {
            return bad("graph is disconnected".into());
        }
        if self.topological_order().is_none() {
            return bad("graph has a directed cycle".into());
        }
        if self.inputs.is_empty() && self.outputs.is_empty() {
            return bad("graphs of biarity (0,0) are not supported".into());
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_subset(&(0..self.vertices.len()).collect::<Vec<_>>())
    }

    /// Undirected connectivity of the induced subgraph on `subset`.
    pub fn is_connected_subset(&self, subset: &[usize]) -> bool {
        let Some(&first) = subset.first() else { return false };
        let inside: BTreeSet<usize> = subset.iter().copied().collect();
        let mut seen = BTreeSet::from([first]);
        let mut stack = vec![first];
        while let Some(v) = stack.pop() {
            for &((a, _), (b, _)) in &self.edges {
                let other = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if inside.contains(&other) && seen.insert(other) {
                    stack.push(other);
                }
            }
        }
        seen.len() == inside.len()
    }

    /// Bottom-up order, or `None` when there is a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for &((_, _), (u, _)) in &self.edges {
            indeg[u] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = vec![];
        while let Some(v) = ready.pop() {
            order.push(v);
            for &((l, _), (u, _)) in &self.edges {
                if l == v {
                    indeg[u] -= 1;
                    if indeg[u] == 0 {
                        ready.push(u);
                    }
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Vertices reachable upward from `v` (excluding `v`).
    pub fn above(&self, v: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for &((l, _), (u, _)) in &self.edges {
                if l == x && seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "|");
        }
        if self.is_plain_single() {
            return write!(f, "{}", self.vertices[0].name);
        }
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v.name)?;
        }
        write!(f, ";")?;
        for ((a, b), (c, d)) in &self.edges {
            write!(f, " {a}.{b}>{c}.{d}")?;
        }
        write!(f, "; in")?;
        for (v, s) in &self.inputs {
            write!(f, " {v}.{s}")?;
        }
        write!(f, "; out")?;
        for (v, s) in &self.outputs {
            write!(f, " {v}.{s}")?;
        }
        write!(f, "]")
    }
}
