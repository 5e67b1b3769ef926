//! JSON documents for the structures the command line reads and writes.
//! Maps keyed by graphs are stored as lists of pairs; everything else is
//! keyed by name. Output goes through [`to_canonical_json`] so keys come
//! out sorted.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::de::{DeserializeOwned, Error as _};
use serde::{Deserialize, Deserializer, Serialize};
use serde_json::Value;
use serde_with::serde_as;

use crate::glinalg::Scalar;
use crate::graphcalc::{Coderivation, Dec, FormalSum, Graph, TruncationPolicy};
use crate::structures::{
    CoKind, CurvedCoproperad, LaxMorphism, LinearMap, PropKind, PropMorphism, ScalarMap, SemiAugProperad,
    TwistingMorphism,
};
use crate::Error;

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "presentation", rename_all = "snake_case")]
pub enum ProperadBody {
    Explicit {
        ops: Vec<Dec>,
        unit: Arc<str>,
        #[serde_as(as = "Vec<(_, _)>")]
        table: BTreeMap<Graph, FormalSum>,
    },
    Free {
        generators: Vec<Dec>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProperadDoc {
    pub name: String,
    pub policy: TruncationPolicy,
    #[serde(flatten)]
    pub body: ProperadBody,
    #[serde(default)]
    pub d: BTreeMap<Arc<str>, FormalSum>,
    #[serde(default)]
    pub epsilon: BTreeMap<Arc<str>, Scalar>,
    #[serde(default)]
    pub sources: BTreeMap<Arc<str>, Graph>,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "presentation", rename_all = "snake_case")]
pub enum CoproperadBody {
    Explicit {
        cogens: Vec<Dec>,
        delta: BTreeMap<Arc<str>, FormalSum>,
        #[serde(default)]
        d: BTreeMap<Arc<str>, FormalSum>,
        #[serde(default)]
        theta: BTreeMap<Arc<str>, Scalar>,
    },
    Cofree {
        cogens: Vec<Dec>,
        #[serde_as(as = "Vec<(_, _)>")]
        #[serde(default)]
        d_single: BTreeMap<Graph, FormalSum>,
        #[serde_as(as = "Vec<(_, _)>")]
        #[serde(default)]
        d_pairs: BTreeMap<Graph, FormalSum>,
        #[serde_as(as = "Vec<(_, _)>")]
        #[serde(default)]
        theta: BTreeMap<Graph, Scalar>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoproperadDoc {
    pub name: String,
    pub policy: TruncationPolicy,
    #[serde(default = "yes")]
    pub conilpotent: bool,
    #[serde(flatten)]
    pub body: CoproperadBody,
    #[serde(default)]
    pub sources: BTreeMap<Arc<str>, Graph>,
}

fn yes() -> bool {
    true
}

// The bodies are flattened and tagged, which makes serde buffer them and
// forget the JSON path of any error inside. These documents are therefore
// read in two passes over a `Value`: the shared fields with the tag, then
// the fields of the tagged variant.

/// Brackets the inner path in messages from the two-pass readers.
const INNER: char = '\u{1}';

fn part<T: DeserializeOwned>(v: &Value) -> Result<T, String> {
    serde_path_to_error::deserialize(v).map_err(|e| format!("{INNER}{}{INNER}{}", e.path(), e.inner()))
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case")]
enum Presentation {
    Explicit,
    Free,
    Cofree,
}

#[derive(Deserialize)]
struct ProperadHead {
    name: String,
    policy: TruncationPolicy,
    presentation: Presentation,
    #[serde(default)]
    d: BTreeMap<Arc<str>, FormalSum>,
    #[serde(default)]
    epsilon: BTreeMap<Arc<str>, Scalar>,
    #[serde(default)]
    sources: BTreeMap<Arc<str>, Graph>,
}

#[serde_as]
#[derive(Deserialize)]
struct ExplicitProperad {
    ops: Vec<Dec>,
    unit: Arc<str>,
    #[serde_as(as = "Vec<(_, _)>")]
    table: BTreeMap<Graph, FormalSum>,
}

#[derive(Deserialize)]
struct FreeProperad {
    generators: Vec<Dec>,
}

impl<'de> Deserialize<'de> for ProperadDoc {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(de)?;
        let h: ProperadHead = part(&v).map_err(D::Error::custom)?;
        let body = match h.presentation {
            Presentation::Explicit => {
                let b: ExplicitProperad = part(&v).map_err(D::Error::custom)?;
                ProperadBody::Explicit { ops: b.ops, unit: b.unit, table: b.table }
            }
            Presentation::Free => ProperadBody::Free { generators: part::<FreeProperad>(&v).map_err(D::Error::custom)?.generators },
            Presentation::Cofree => return Err(D::Error::custom("a properad is `explicit` or `free`")),
        };
        Ok(ProperadDoc { name: h.name, policy: h.policy, body, d: h.d, epsilon: h.epsilon, sources: h.sources })
    }
}

#[derive(Deserialize)]
struct CoproperadHead {
    name: String,
    policy: TruncationPolicy,
    presentation: Presentation,
    #[serde(default = "yes")]
    conilpotent: bool,
    #[serde(default)]
    sources: BTreeMap<Arc<str>, Graph>,
}

#[derive(Deserialize)]
struct ExplicitCoproperad {
    cogens: Vec<Dec>,
    delta: BTreeMap<Arc<str>, FormalSum>,
    #[serde(default)]
    d: BTreeMap<Arc<str>, FormalSum>,
    #[serde(default)]
    theta: BTreeMap<Arc<str>, Scalar>,
}

#[serde_as]
#[derive(Deserialize)]
struct CofreeCoproperad {
    cogens: Vec<Dec>,
    #[serde_as(as = "Vec<(_, _)>")]
    #[serde(default)]
    d_single: BTreeMap<Graph, FormalSum>,
    #[serde_as(as = "Vec<(_, _)>")]
    #[serde(default)]
    d_pairs: BTreeMap<Graph, FormalSum>,
    #[serde_as(as = "Vec<(_, _)>")]
    #[serde(default)]
    theta: BTreeMap<Graph, Scalar>,
}

impl<'de> Deserialize<'de> for CoproperadDoc {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(de)?;
        let h: CoproperadHead = part(&v).map_err(D::Error::custom)?;
        let body = match h.presentation {
            Presentation::Explicit => {
                let b: ExplicitCoproperad = part(&v).map_err(D::Error::custom)?;
                CoproperadBody::Explicit { cogens: b.cogens, delta: b.delta, d: b.d, theta: b.theta }
            }
            Presentation::Cofree => {
                let b: CofreeCoproperad = part(&v).map_err(D::Error::custom)?;
                CoproperadBody::Cofree { cogens: b.cogens, d_single: b.d_single, d_pairs: b.d_pairs, theta: b.theta }
            }
            Presentation::Free => return Err(D::Error::custom("a coproperad is `explicit` or `cofree`")),
        };
        Ok(CoproperadDoc { name: h.name, policy: h.policy, conilpotent: h.conilpotent, body, sources: h.sources })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropMorphismDoc {
    pub source: ProperadDoc,
    pub target: ProperadDoc,
    pub images: BTreeMap<Arc<str>, FormalSum>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaxDoc {
    pub source: CoproperadDoc,
    pub target: CoproperadDoc,
    pub f: LinearMap,
    pub a: ScalarMap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistingDoc {
    pub coproperad: CoproperadDoc,
    pub properad: ProperadDoc,
    pub alpha: LinearMap,
}

impl From<&SemiAugProperad> for ProperadDoc {
    fn from(p: &SemiAugProperad) -> Self {
        let body = match &p.kind {
            PropKind::Explicit { ops, unit, table } => {
                ProperadBody::Explicit { ops: ops.clone(), unit: unit.clone(), table: table.clone() }
            }
            PropKind::Free { generators } => ProperadBody::Free { generators: generators.clone() },
        };
        ProperadDoc {
            name: p.name.clone(),
            policy: p.policy,
            body,
            d: p.d.clone(),
            epsilon: p.epsilon.clone(),
            sources: p.sources.clone(),
        }
    }
}

impl ProperadDoc {
    pub fn build(&self) -> Result<SemiAugProperad, Error> {
        let kind = match &self.body {
            ProperadBody::Explicit { ops, unit, table } => {
                if !ops.iter().any(|o| o.name == *unit) {
                    return Err(schema("unit", format!("unit `{unit}` is not among the operations")));
                }
                PropKind::Explicit { ops: ops.clone(), unit: unit.clone(), table: table.clone() }
            }
            ProperadBody::Free { generators } => PropKind::Free { generators: generators.clone() },
        };
        let mut p = SemiAugProperad::new(&self.name, kind, self.policy);
        for (k, v) in &self.d {
            if p.generator(k).is_none() {
                return Err(schema(&format!("d.{k}"), "unknown generator".into()));
            }
            for (g, _) in v.iter() {
                g.validate().map_err(|e| schema(&format!("d.{k}"), e.to_string()))?;
            }
        }
        for k in self.epsilon.keys() {
            if p.generator(k).is_none() {
                return Err(schema(&format!("epsilon.{k}"), "unknown generator".into()));
            }
        }
        p.d = self.d.clone();
        p.epsilon = self.epsilon.clone();
        p.sources = self.sources.clone();
        Ok(p)
    }
}

impl From<&CurvedCoproperad> for CoproperadDoc {
    fn from(c: &CurvedCoproperad) -> Self {
        let body = match &c.kind {
            CoKind::Explicit { cogens, delta, d, theta } => CoproperadBody::Explicit {
                cogens: cogens.clone(),
                delta: delta.clone(),
                d: d.clone(),
                theta: theta.clone(),
            },
            CoKind::Cofree { cogens, d, theta } => CoproperadBody::Cofree {
                cogens: cogens.clone(),
                d_single: d.on_single.clone(),
                d_pairs: d.on_pairs.clone(),
                theta: theta.clone(),
            },
        };
        CoproperadDoc { name: c.name.clone(), policy: c.policy, conilpotent: c.conilpotent, body, sources: c.sources.clone() }
    }
}

impl CoproperadDoc {
    pub fn build(&self) -> Result<CurvedCoproperad, Error> {
        let kind = match &self.body {
            CoproperadBody::Explicit { cogens, delta, d, theta } => {
                for k in delta.keys().chain(d.keys()).chain(theta.keys()) {
                    if !cogens.iter().any(|c| c.name == *k) {
                        return Err(schema(&format!("cogenerator {k}"), "unknown cogenerator".into()));
                    }
                }
                CoKind::Explicit { cogens: cogens.clone(), delta: delta.clone(), d: d.clone(), theta: theta.clone() }
            }
            CoproperadBody::Cofree { cogens, d_single, d_pairs, theta } => {
                let d = Coderivation::new(-1, d_single.clone(), d_pairs.clone())
                    .map_err(|e| schema("d_single", e.to_string()))?;
                CoKind::Cofree { cogens: cogens.clone(), d, theta: theta.clone() }
            }
        };
        let mut c = CurvedCoproperad::new(&self.name, kind, self.policy);
        c.conilpotent = self.conilpotent;
        c.sources = self.sources.clone();
        Ok(c)
    }
}

impl From<&PropMorphism> for PropMorphismDoc {
    fn from(f: &PropMorphism) -> Self {
        PropMorphismDoc { source: (&*f.source).into(), target: (&*f.target).into(), images: f.images.clone() }
    }
}

impl PropMorphismDoc {
    pub fn build(&self) -> Result<PropMorphism, Error> {
        let source = Arc::new(self.source.build()?);
        let target = Arc::new(self.target.build()?);
        for k in self.images.keys() {
            if source.generator(k).is_none() {
                return Err(schema(&format!("images.{k}"), "unknown generator".into()));
            }
        }
        Ok(PropMorphism { source, target, images: self.images.clone() })
    }
}

impl From<&LaxMorphism> for LaxDoc {
    fn from(l: &LaxMorphism) -> Self {
        LaxDoc { source: (&*l.source).into(), target: (&*l.target).into(), f: l.f.clone(), a: l.a.clone() }
    }
}

impl LaxDoc {
    pub fn build(&self) -> Result<LaxMorphism, Error> {
        Ok(LaxMorphism {
            source: Arc::new(self.source.build()?),
            target: Arc::new(self.target.build()?),
            f: self.f.clone(),
            a: self.a.clone(),
        })
    }
}

impl From<&TwistingMorphism> for TwistingDoc {
    fn from(t: &TwistingMorphism) -> Self {
        TwistingDoc { coproperad: (&*t.c).into(), properad: (&*t.p).into(), alpha: t.alpha.clone() }
    }
}

impl TwistingDoc {
    pub fn build(&self) -> Result<TwistingMorphism, Error> {
        TwistingMorphism::new(Arc::new(self.coproperad.build()?), Arc::new(self.properad.build()?), self.alpha.clone())
    }
}

fn schema(path: &str, message: String) -> Error {
    Error::Schema { path: path.into(), message }
}

/// Parses a document, reporting the JSON path of the first mismatch.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T, Error> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let outer = e.path().to_string();
        let message = e.inner().to_string();
        let mut pieces = message.splitn(3, INNER);
        match (pieces.next(), pieces.next(), pieces.next()) {
            (Some(""), Some(inner), Some(rest)) => {
                let path = match (outer.as_str(), inner) {
                    (".", p) | (p, ".") => p.to_string(),
                    (o, i) => format!("{o}.{i}"),
                };
                schema(&path, rest.to_string())
            }
            _ => schema(&outer, message),
        }
    })
}

/// Pretty JSON with every object's keys in sorted order.
pub fn to_canonical_json<T: Serialize>(x: &T) -> String {
    let v = serde_json::to_value(x).expect("documents serialize");
    serde_json::to_string_pretty(&v).expect("values print")
}
