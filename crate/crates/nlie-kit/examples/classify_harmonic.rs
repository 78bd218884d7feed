//! The positive half of the classification for every arity: harmonic
//! polynomial modules always extend to modules of the n-ary bracket, and
//! their dimensions follow a closed formula.
//!
//! Run with: cargo run --example classify_harmonic

use nlie_kit::prolong::{can_prolong, dimension_formula, is_irreducible};
use nlie_kit::sorep::harmonic_module;

fn main() {
    println!("harmonic modules over the orthogonal algebra of size n+1:\n");
    println!("  n  t  dim  formula  irreducible  verdict");
    for n in 2..=5usize {
        for t in 0..=3usize {
            let rep = harmonic_module(n + 1, t).unwrap();
            let report = can_prolong(n, &rep).unwrap();
            let formula = dimension_formula(n, t);
            assert_eq!(rep.dim() as u128, formula);
            assert!(report.ok, "harmonic (n={n}, t={t}) must prolong");
            // Keep the irreducibility probe to small modules in this demo.
            let irr = if rep.dim() <= 25 {
                if is_irreducible(&rep) { "yes" } else { "no" }
            } else {
                "(skipped)"
            };
            println!(
                "  {n}  {t}  {dim:<4} {formula:<8} {irr:<12} {verdict}",
                dim = rep.dim(),
                verdict = if report.ok { "prolongs" } else { "obstructed" }
            );
        }
    }
    println!("\nevery harmonic module prolongs — these are exactly the irreducibles that do");
    println!("(dimension formula: (n+2t-1)/(n+t-1) · C(n+t-1, t))");
}
