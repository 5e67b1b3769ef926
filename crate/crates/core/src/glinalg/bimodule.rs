//! Graded spaces with named bases, 𝕊-bimodules and equivariant maps.
//!
//! Symmetric-group actions are stored on the adjacent transpositions
//! `(i, i+1)` only; the action of an arbitrary permutation is obtained by
//! factoring it into adjacent transpositions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Biarity {
    pub outputs: usize,
    pub inputs: usize,
}

impl std::fmt::Display for Biarity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.outputs, self.inputs)
    }
}

impl Biarity {
    pub const UNIT: Biarity = Biarity { outputs: 1, inputs: 1 };

    pub fn new(outputs: usize, inputs: usize) -> Self {
        Biarity { outputs, inputs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisElement {
    pub name: String,
    pub degree: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedBasisSpace {
    pub basis: Vec<BasisElement>,
}

impl GradedBasisSpace {
    pub fn new(basis: Vec<(&str, i64)>) -> Result<Self, Error> {
        let space = GradedBasisSpace {
            basis: basis
                .into_iter()
                .map(|(n, d)| BasisElement { name: n.to_string(), degree: d })
                .collect(),
        };
        space.validate()?;
        Ok(space)
    }

    pub fn validate(&self) -> Result<(), Error> {
        let mut names: Vec<&str> = self.basis.iter().map(|b| b.name.as_str()).collect();
        names.sort_unstable();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Argument(format!("duplicate basis name `{}`", w[0])));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A graded collection indexed by biarity with symmetric-group actions on
/// outputs (left) and inputs (right).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SBimodule {
    pub components: BTreeMap<Biarity, GradedBasisSpace>,
    /// Matrices of the adjacent transpositions; absent entries act trivially.
    pub actions: BTreeMap<(Biarity, Side, usize), Matrix>,
}

impl SBimodule {
    /// The unit bimodule `I`: one element `id` in biarity (1,1), degree 0.
    pub fn unit() -> Self {
        let mut components = BTreeMap::new();
        components.insert(Biarity::UNIT, GradedBasisSpace::new(vec![("id", 0)]).unwrap());
        SBimodule { components, actions: BTreeMap::new() }
    }

    pub fn dim(&self, b: Biarity) -> usize {
        self.components.get(&b).map_or(0, GradedBasisSpace::dim)
    }

    /// Matrix of the adjacent transposition `(g, g+1)` on the given side.
    pub fn generator(&self, b: Biarity, side: Side, g: usize) -> Matrix {
        self.actions
            .get(&(b, side, g))
            .cloned()
            .unwrap_or_else(|| Matrix::identity(self.dim(b)))
    }

    /// Action matrix of an arbitrary permutation, `perm[k]` = image of `k`.
    pub fn action(&self, b: Biarity, side: Side, perm: &[usize]) -> Result<Matrix, Error> {
        let arity = match side {
            Side::Left => b.outputs,
            Side::Right => b.inputs,
        };
        if perm.len() != arity {
            return Err(Error::Argument(format!("permutation of length {} on arity {arity}", perm.len())));
        }
        // Write perm as a product of adjacent transpositions via bubble sort:
        // sorting perm by swaps s_{g1}, ..., s_{gk} gives perm = s_{gk} ... s_{g1}.
        let mut word = perm.to_vec();
        let mut gens = vec![];
        for i in 0..word.len() {
            for j in 0..word.len().saturating_sub(i + 1) {
                if word[j] > word[j + 1] {
                    word.swap(j, j + 1);
                    gens.push(j);
                }
            }
        }
        let mut m = Matrix::identity(self.dim(b));
        for g in gens.into_iter().rev() {
            m = m.mul(&self.generator(b, side, g))?;
        }
        Ok(m)
    }

    /// Checks the stored action: identity acts as identity, transpositions
    /// square to the identity, braid relations hold, the two sides commute,
    /// and every matrix is block diagonal by degree.
    pub fn validate(&self) -> Result<(), Error> {
        for space in self.components.values() {
            space.validate()?;
        }
        for (&b, space) in &self.components {
            let n = space.dim();
            let id = Matrix::identity(n);
            for side in [Side::Left, Side::Right] {
                let arity = if side == Side::Left { b.outputs } else { b.inputs };
                let identity_perm: Vec<usize> = (0..arity).collect();
                if self.action(b, side, &identity_perm)? != id {
                    return Err(Error::Structure(format!("identity permutation acts nontrivially on {b:?}")));
                }
                for g in 0..arity.saturating_sub(1) {
                    let s = self.generator(b, side, g);
                    if s.rows != n || s.cols != n {
                        return Err(Error::Structure(format!("action matrix has wrong size on {b:?}")));
                    }
                    for i in 0..n {
                        for j in 0..n {
                            if !s[(i, j)].is_zero() && space.basis[i].degree != space.basis[j].degree {
                                return Err(Error::Structure(format!("action on {b:?} does not preserve degree")));
                            }
                        }
                    }
                    if s.mul(&s)? != id {
                        return Err(Error::Structure(format!("transposition {g} on {b:?} is not an involution")));
                    }
                    if g + 2 < arity {
                        let t = self.generator(b, side, g + 1);
                        let lhs = s.mul(&t)?.mul(&s)?;
                        let rhs = t.mul(&s)?.mul(&t)?;
                        if lhs != rhs {
                            return Err(Error::Structure(format!("braid relation fails at {g} on {b:?}")));
                        }
                    }
                }
            }
            for g in 0..b.outputs.saturating_sub(1) {
                for h in 0..b.inputs.saturating_sub(1) {
                    let l = self.generator(b, Side::Left, g);
                    let r = self.generator(b, Side::Right, h);
                    if l.mul(&r)? != r.mul(&l)? {
                        return Err(Error::Structure(format!("left and right actions do not commute on {b:?}")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Wraps a basis name in `shift` suspensions; `s^a(s^b(x)) = s^(a+b)(x)`.
pub fn shifted_name(name: &str, shift: i64) -> String {
    let (inner, current) = match name.strip_prefix("s^").and_then(|r| r.split_once('(')) {
        Some((k, rest)) if rest.ends_with(')') && k.parse::<i64>().is_ok() => {
            (&rest[..rest.len() - 1], k.parse::<i64>().unwrap())
        }
        _ => (name, 0),
    };
    let total = current + shift;
    if total == 0 {
        inner.to_string()
    } else {
        format!("s^{total}({inner})")
    }
}

/// Raises every degree by `shift` and renames basis elements accordingly.
pub fn suspend(m: &SBimodule, shift: i64) -> SBimodule {
    let components = m
        .components
        .iter()
        .map(|(&b, space)| {
            let basis = space
                .basis
                .iter()
                .map(|e| BasisElement { name: shifted_name(&e.name, shift), degree: e.degree + shift })
                .collect();
            (b, GradedBasisSpace { basis })
        })
        .collect();
    SBimodule { components, actions: m.actions.clone() }
}

/// A homogeneous equivariant map between 𝕊-bimodules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SMap {
    pub source: SBimodule,
    pub target: SBimodule,
    pub degree: i64,
    /// Per biarity: `dim(target) x dim(source)`.
    pub blocks: BTreeMap<Biarity, Matrix>,
}

impl SMap {
    pub fn zero(source: SBimodule, target: SBimodule, degree: i64) -> Self {
        SMap { source, target, degree, blocks: BTreeMap::new() }
    }

    pub fn identity(m: &SBimodule) -> Self {
        let blocks = m.components.keys().map(|&b| (b, Matrix::identity(m.dim(b)))).collect();
        SMap { source: m.clone(), target: m.clone(), degree: 0, blocks }
    }

    pub fn block(&self, b: Biarity) -> Matrix {
        self.blocks
            .get(&b)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.target.dim(b), self.source.dim(b)))
    }

    /// Checks block shapes, degree homogeneity and equivariance under every
    /// stored generator.
    pub fn validate(&self) -> Result<(), Error> {
        for (&b, m) in &self.blocks {
            let (Some(src), Some(tgt)) = (self.source.components.get(&b), self.target.components.get(&b)) else {
                if m.is_zero() {
                    continue;
                }
                return Err(Error::Argument(format!("map has a block on missing component {b:?}")));
            };
            if m.rows != tgt.dim() || m.cols != src.dim() {
                return Err(Error::Argument(format!("block {b:?} has the wrong shape")));
            }
            for i in 0..m.rows {
                for j in 0..m.cols {
                    if !m[(i, j)].is_zero() && tgt.basis[i].degree != src.basis[j].degree + self.degree {
                        return Err(Error::Argument(format!("block {b:?} is not of degree {}", self.degree)));
                    }
                }
            }
            for side in [Side::Left, Side::Right] {
                let arity = if side == Side::Left { b.outputs } else { b.inputs };
                for g in 0..arity.saturating_sub(1) {
                    let lhs = self.target.generator(b, side, g).mul(m)?;
                    let rhs = m.mul(&self.source.generator(b, side, g))?;
                    if lhs != rhs {
                        return Err(Error::Structure(format!("map is not equivariant on {b:?}")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `g ∘ f`.
pub fn compose_smap(g: &SMap, f: &SMap) -> Result<SMap, Error> {
    if f.target != g.source {
        return Err(Error::Argument("composing maps with mismatched source/target".into()));
    }
    let mut blocks = BTreeMap::new();
    for &b in f.source.components.keys() {
        let m = g.block(b).mul(&f.block(b))?;
        if !m.is_zero() {
            blocks.insert(b, m);
        }
    }
    Ok(SMap { source: f.source.clone(), target: g.target.clone(), degree: f.degree + g.degree, blocks })
}

/// Conjugates `f` by `shift` suspensions, `s^k f s^-k`, with the sign rule
/// `(s f)(s x) = (-1)^|f| s (f x)` iterated `k` times.
pub fn suspend_smap(f: &SMap, shift: i64) -> SMap {
    let sign = Scalar::sign(shift * f.degree);
    SMap {
        source: suspend(&f.source, shift),
        target: suspend(&f.target, shift),
        degree: f.degree,
        blocks: f.blocks.iter().map(|(&b, m)| (b, m.scale(&sign))).collect(),
    }
}

#[derive(Serialize, Deserialize)]
struct ComponentJson {
    outputs: usize,
    inputs: usize,
    basis: Vec<BasisElement>,
}

#[derive(Serialize, Deserialize)]
struct ActionJson {
    outputs: usize,
    inputs: usize,
    side: Side,
    generator: usize,
    matrix: Vec<Vec<Scalar>>,
}

#[derive(Serialize, Deserialize)]
struct SBimoduleJson {
    components: Vec<ComponentJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    actions: Vec<ActionJson>,
}

impl Serialize for SBimodule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let components = self
            .components
            .iter()
            .map(|(b, sp)| ComponentJson { outputs: b.outputs, inputs: b.inputs, basis: sp.basis.clone() })
            .collect();
        let actions = self
            .actions
            .iter()
            .map(|(&(b, side, g), m)| ActionJson {
                outputs: b.outputs,
                inputs: b.inputs,
                side,
                generator: g,
                matrix: (0..m.rows).map(|i| (0..m.cols).map(|j| m[(i, j)].clone()).collect()).collect(),
            })
            .collect();
        SBimoduleJson { components, actions }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SBimodule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = SBimoduleJson::deserialize(d)?;
        let mut m = SBimodule::default();
        for c in json.components {
            m.components.insert(Biarity::new(c.outputs, c.inputs), GradedBasisSpace { basis: c.basis });
        }
        for a in json.actions {
            let mat = Matrix::from_rows(a.matrix).map_err(D::Error::custom)?;
            m.actions.insert((Biarity::new(a.outputs, a.inputs), a.side, a.generator), mat);
        }
        m.validate().map_err(D::Error::custom)?;
        Ok(m)
    }
}
