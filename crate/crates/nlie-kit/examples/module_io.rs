//! Module interchange: export a representation to JSON, re-import it (the
//! parser re-verifies the homomorphism property), and feed it onward —
//! plus the semidirect construction it certifies.
//!
//! Run with: cargo run --example module_io

use nlie_kit::basiclie::iso_to_so;
use nlie_kit::nlie::vector_product_algebra;
use nlie_kit::prolong::can_prolong;
use nlie_kit::sorep::{casimir_values, harmonic_module, rep_from_json, rep_to_json};
use nlie_kit::Error;

fn main() {
    let rep = harmonic_module(4, 2).unwrap();
    let json = rep_to_json(&rep).unwrap();
    println!("exported degree-2 harmonics (size 4) as JSON: {} bytes", json.len());
    println!("first lines:");
    for line in json.lines().take(6) {
        println!("  {line}");
    }
    println!("  …");

    // Re-import: byte-identical re-export, identical matrices.
    let back = rep_from_json(&json).unwrap();
    assert_eq!(rep_to_json(&back).unwrap(), json);
    println!("\nre-imported: canonical re-export is byte-identical");
    let (c1, c2) = casimir_values(&back).unwrap();
    println!("casimir scalars after the round trip: ({c1}, {c2})");

    // The parser re-verifies the algebra relations; a tampered entry is
    // rejected as inconsistent rather than silently accepted.
    let tampered = json.replacen("\"-1\"", "\"-2\"", 1);
    match rep_from_json(&tampered) {
        Err(Error::Inconsistent(msg)) => println!("tampered copy rejected: {msg}"),
        other => panic!("expected the tampered module to be rejected, got {other:?}"),
    }

    // A verified import is ready for the downstream machinery: decide
    // prolongation and build the extended 13-dimensional 3-ary algebra.
    assert!(can_prolong(3, &back).unwrap().ok);
    let alg = vector_product_algebra(3).unwrap();
    let pulled = iso_to_so(3).unwrap().pull_rep(&back).unwrap();
    let extended = alg.semidirect_sum(&pulled).unwrap();
    assert!(extended.is_filippov().ok);
    println!(
        "\nextended algebra on A ⊕ M: arity {}, dimension {}, identity verified",
        extended.arity(),
        extended.dim()
    );
    println!("sample bracket row from its text form:");
    let text = extended.to_text();
    for line in text.lines().take(4) {
        println!("  {line}");
    }
    println!("  …");
}
