//! A fast battery of positive and negative checks over the built-in fixtures.

use std::sync::Arc;

use serde_json::{json, Value};

use super::Outcome;
use crate::barcobar::{bar, check_factorization, cobar, pi};
use crate::fixtures::{catalog, curvature_mismatch, d_squared_nonzero, kappa, non_associative, random_twisting, uas, uas_koszul_dual};
use crate::structures::{check_curved_coproperad, check_lax, check_twisting, convolution, CheckReport};
use crate::Error;

fn twisting_report(t: &crate::structures::TwistingMorphism) -> Result<CheckReport, Error> {
    check_twisting(&convolution(t.c.clone(), t.p.clone()), &t.alpha)
}

fn battery() -> Result<Vec<(&'static str, bool, CheckReport)>, Error> {
    let up = catalog::uas_policy();
    let u = Arc::new(uas(up));
    let bu = Arc::new(bar(&u, up));
    let dual = Arc::new(uas_koszul_dual());
    let ud = Arc::new(uas(dual.policy));
    let rt = random_twisting(0, catalog::random_policy())?;
    let factor = |t: &crate::structures::TwistingMorphism| {
        check_factorization(t, &Arc::new(cobar(&t.c, t.c.policy)), &Arc::new(bar(&t.p, t.c.policy)))
    };
    Ok(vec![
        ("bar-uas curved axioms", true, check_curved_coproperad(&bu, false)),
        ("bar-uas curved axioms with the old sign", false, check_curved_coproperad(&bu, true)),
        ("uas-dual curved axioms", true, check_curved_coproperad(&dual, false)),
        ("kappa twisting", true, twisting_report(&kappa(&dual, &ud)?)?),
        ("pi-uas factorization", true, factor(&pi(&bu, &u)?)?),
        ("random twisting", true, twisting_report(&rt)?),
        ("random twisting factorization", true, factor(&rt)?),
        ("non-associative curved axioms", false, check_curved_coproperad(&non_associative(), false)),
        ("d-squared-nonzero curved axioms", false, check_curved_coproperad(&d_squared_nonzero(), false)),
        ("curvature-mismatch lax axioms", false, check_lax(&curvature_mismatch())),
    ])
}

pub fn run() -> Outcome {
    let checks = match battery() {
        Ok(c) => c,
        Err(e) => return Outcome::error(&e),
    };
    let ok = checks.iter().all(|(_, expect, r)| r.passed() == *expect);
    let rows: Vec<Value> = checks
        .iter()
        .map(|(name, expect, r)| {
            json!({
                "name": name,
                "expect": if *expect { "pass" } else { "fail" },
                "status": r.status,
                "summary": r.summary,
            })
        })
        .collect();
    Outcome { code: if ok { 0 } else { 1 }, output: json!({"status": if ok { "pass" } else { "fail" }, "checks": rows}) }
}
