//! The arity-3 classification at work: sweep the weight pairs (t, r) of
//! the size-4 orthogonal algebra and watch prolongation succeed exactly on
//! the diagonal t = r.
//!
//! Run with: cargo run --example classify_weight_pairs

use nlie_kit::prolong::can_prolong;
use nlie_kit::sorep::{casimir_values, so4_tensor_module};
use nlie_kit::Error;

fn main() {
    println!("weight pairs (t, r) over the size-4 orthogonal algebra, t, r in 0..=3:\n");
    println!("  t r  dim  casimirs          verdict");
    let mut diagonal_prolongs = true;
    let mut off_diagonal_obstructed = true;
    for t in 0..=3u64 {
        for r in 0..=3u64 {
            match so4_tensor_module(t, r) {
                Err(Error::NotRealizable(_)) => {
                    // Mixed parity: these modules are quaternionic — they
                    // have no matrix realization over the rationals, so
                    // exact arithmetic cannot (and does not) construct them.
                    assert_ne!(t % 2, r % 2);
                    println!("  {t} {r}  -    -                 no rational realization (mixed parity)");
                }
                Err(e) => panic!("unexpected error: {e}"),
                Ok(rep) => {
                    let (c1, c2) = casimir_values(&rep).unwrap();
                    let report = can_prolong(3, &rep).unwrap();
                    let verdict = if report.ok { "prolongs" } else { "obstructed" };
                    println!(
                        "  {t} {r}  {dim:<4} ({c1}, {c2}){pad} {verdict}",
                        dim = rep.dim(),
                        pad = " ".repeat(10usize.saturating_sub(format!("({c1}, {c2})").len()))
                    );
                    if t == r {
                        diagonal_prolongs &= report.ok;
                    } else {
                        off_diagonal_obstructed &= !report.ok;
                    }
                }
            }
        }
    }
    assert!(diagonal_prolongs && off_diagonal_obstructed);
    println!("\nresult: a weight pair extends to a module of the 3-ary bracket exactly when t = r");
    println!("        (equal Casimir scalars — the obstruction operator acts as their difference)");
}
