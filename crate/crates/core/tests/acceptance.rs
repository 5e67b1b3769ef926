//! One line per acceptance criterion; the test fails if any criterion fails.

mod common;

use std::io::Write;
use std::time::Duration;

use common::criteria::*;

#[test]
fn acceptance() {
    let s = Duration::from_secs;
    let verdicts = [
        ("uAs counterexample", timed(s(1), uas_counterexample)),
        ("corrected axiom (a)", timed(s(10), corrected_axiom)),
        ("cobar squares to zero", timed(s(30), cobar_squares_to_zero)),
        ("adjunction roundtrips", timed(s(60), || adjunction_roundtrips(100))),
        ("lax category laws", timed(s(60), || lax_category_laws(100))),
        ("functoriality", timed(s(60), || functoriality(50))),
        ("factorization", timed(s(60), || factorization(100))),
        ("oracle equivalence", timed(s(60), oracles)),
    ];
    // Written to the stderr handle directly so the lines survive output capture.
    let mut err = std::io::stderr().lock();
    for (n, (name, v)) in verdicts.iter().enumerate() {
        writeln!(err, "{}", v.line(n + 1, name)).unwrap();
    }
    let failed: Vec<_> = verdicts.iter().filter(|(_, v)| v.status == Status::Fail).map(|(n, _)| *n).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
