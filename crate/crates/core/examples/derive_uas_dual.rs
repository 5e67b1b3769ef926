//! Regenerates `src/fixtures/uas_dual.json`.

fn main() {
    let doc = koszul_core::fixtures::uas_dual::derive_document().expect("derivation succeeds");
    println!("{}", koszul_core::doc::to_canonical_json(&doc));
}
