//! Named fixtures and their JSON documents.

use std::sync::Arc;

use serde_json::Value;

use crate::barcobar::{bar, pi};
use crate::doc::{CoproperadDoc, LaxDoc, PropMorphismDoc, ProperadDoc, TwistingDoc};
use crate::graphcalc::TruncationPolicy;
use crate::Error;

use super::{negative, random, uas, uas_dual};

/// Fixture names with a one-line description; `seeded` ones take `--seed`.
pub const CATALOG: &[(&str, &str)] = &[
    ("uas", "unital associative operad uAs"),
    ("uas-dual", "curved Koszul dual coproperad uAs^! (shipped tables)"),
    ("bar-uas", "bar construction B(uAs)"),
    ("pi-uas", "universal twisting morphism B(uAs) -> uAs"),
    ("kappa", "twisting morphism uAs^! -> uAs"),
    ("g-kappa", "dg morphism Omega(uAs^!) -> uAs"),
    ("matrix", "seeded random matrix algebra with semi-augmentation"),
    ("curved", "seeded random curved coproperad B(P)^a"),
    ("lax", "seeded random lax morphism (id, a) out of a random curved coproperad"),
    ("bar-lax", "seeded bar image of a random conjugation"),
    ("twisting", "seeded random curved twisting morphism"),
    ("non-associative", "negative: theta = 0 and d^2 != 0 at weight 3"),
    ("d-squared-nonzero", "negative: theta = 0 and d^2 != 0 at weight 2"),
    ("curvature-mismatch", "negative: (id, 0) with theta' f != theta"),
];

pub fn uas_policy() -> TruncationPolicy {
    TruncationPolicy::new(3, 2, 1)
}

pub fn random_policy() -> TruncationPolicy {
    TruncationPolicy::new(3, 1, 1)
}

fn json<T: serde::Serialize>(x: T) -> Value {
    serde_json::to_value(x).expect("documents serialize")
}

/// The JSON document of a named fixture. `adjust` maps the fixture's default
/// window to the one used; `uas-dual` and its morphisms have a fixed window.
pub fn dump(name: &str, seed: u64, adjust: impl Fn(TruncationPolicy) -> TruncationPolicy) -> Result<Value, Error> {
    let up = adjust(uas_policy());
    let rp = adjust(random_policy());
    Ok(match name {
        "uas" => json(ProperadDoc::from(&uas::uas(up))),
        "uas-dual" => json(CoproperadDoc::from(&uas_dual::uas_koszul_dual())),
        "bar-uas" => json(CoproperadDoc::from(&bar(&Arc::new(uas::uas(up)), up))),
        "pi-uas" => {
            let u = Arc::new(uas::uas(up));
            let bu = Arc::new(bar(&u, up));
            json(TwistingDoc::from(&pi(&bu, &u)?))
        }
        "kappa" => {
            let c = Arc::new(uas_dual::uas_koszul_dual());
            let u = Arc::new(uas::uas(uas_dual::dual_policy()));
            json(TwistingDoc::from(&uas_dual::kappa(&c, &u)?))
        }
        "g-kappa" => json(PropMorphismDoc::from(&uas_dual::g_kappa())),
        "matrix" => json(ProperadDoc::from(&*random::random_matrix_properad(seed, rp))),
        "curved" => json(CoproperadDoc::from(&random::random_curved_coproperad(seed, rp))),
        "lax" => {
            let c = Arc::new(random::random_curved_coproperad(seed, rp));
            json(LaxDoc::from(&random::random_lax(seed, &c)))
        }
        "bar-lax" => json(LaxDoc::from(&random::random_bar_lax(seed, rp)?)),
        "twisting" => json(TwistingDoc::from(&random::random_twisting(seed, rp)?)),
        "non-associative" => json(CoproperadDoc::from(&negative::non_associative())),
        "d-squared-nonzero" => json(CoproperadDoc::from(&negative::d_squared_nonzero())),
        "curvature-mismatch" => json(LaxDoc::from(&negative::curvature_mismatch())),
        _ => return Err(Error::Argument(format!("unknown fixture `{name}`; try `fixtures list`"))),
    })
}
