//! The plain-text structure-constant format: emit, parse, round-trip, and
//! see how parse errors carry exact line/column positions.
//!
//! Run with: cargo run --example text_format

use nlie_kit::nlie::{vector_product_algebra, NLieAlgebra};
use nlie_kit::Error;

fn main() {
    let alg = vector_product_algebra(3).unwrap();
    let text = alg.to_text();
    println!("--- vector products, arity 3, as text ---");
    print!("{text}");

    // The format round-trips exactly.
    let parsed = NLieAlgebra::from_text(&text).unwrap();
    assert_eq!(parsed, alg);
    println!("--- parsed back: equal to the original ---\n");

    // Comments, blank lines, and fractional coefficients are fine; entries
    // may be given in any index order (signs are normalized).
    let fancy = "\
# a 2-ary algebra with fractional constants
nlie 2 3

2 1 -> 0 0 -1/2     # same as 1 2 -> 0 0 1/2
1 3 -> 0 -3 0
2 3 -> 1/4 0 0
";
    let alg = NLieAlgebra::from_text(fancy).unwrap();
    println!("parsed a table with comments and fractions: dimension {}", alg.dim());
    println!("normalized form:\n{}", alg.to_text());

    // Parse errors point at the exact spot.
    let bad_inputs = [
        "nlie 2 3\n1 2 => 0 0 1\n",   // wrong arrow
        "nlie 2 3\n1 9 -> 0 0 1\n",   // index out of range
        "nlie 2 3\n1 2 -> 0 0 1/0\n", // zero denominator
    ];
    for input in bad_inputs {
        match NLieAlgebra::from_text(input) {
            Err(Error::Parse { line, col, msg }) => {
                println!("rejected (line {line}, column {col}): {msg}")
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    // Conflicting duplicate entries are rejected during ingestion.
    let conflict = "nlie 2 3\n1 2 -> 0 0 1\n2 1 -> 0 0 1\n";
    assert!(matches!(NLieAlgebra::from_text(conflict), Err(Error::Parse { line: 3, .. })));
    println!("conflicting duplicate entry rejected with its position");
}
