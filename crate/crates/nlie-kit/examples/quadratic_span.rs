//! The span of the quadratic obstruction generators inside (the filtered
//! degree-2 part of) the universal envelope: how much genuine obstruction
//! is there for each arity?
//!
//! Run with: cargo run --example quadratic_span

use nlie_kit::prolong::{obstruction_indices, q2_span_report};

fn main() {
    println!("span of the obstruction generators, per arity:\n");
    println!("  n  size  generators  symbol span  lifted span");
    for n in 2..=5usize {
        let report = q2_span_report(n).unwrap();
        assert_eq!(report.generators, obstruction_indices(n + 1).len());
        assert_eq!(report.symbol_dim, report.lifted_dim);
        println!(
            "  {n}  {m:<5} {gens:<11} {sym:<12} {lift}",
            m = n + 1,
            gens = report.generators,
            sym = report.symbol_dim,
            lift = report.lifted_dim
        );
    }
    println!("\nreadings:");
    println!("  arity 2: no generators at all — every module extends (the classical case)");
    println!("  arity 3: a single line — one scalar condition (the Casimir difference)");
    println!("  arity 4: a 5-dimensional space of conditions");
    println!("  the lifted span always equals the symbol span: each generator's three");
    println!("  products pair generators with disjoint index pairs, so the degree-1");
    println!("  correction terms vanish identically");
}
