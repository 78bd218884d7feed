//! The closed-form dimension of the weight-t module for each arity,
//! cross-checked against harmonic polynomial kernels computed from
//! scratch by exact linear algebra.
//!
//! Run with: cargo run --example dimension_table

use nlie_kit::prolong::dimension_formula;
use nlie_kit::sorep::{laplacian, laplacian_kernel_dim, monomials};

fn main() {
    println!("dim of the weight-t module for the arity-n bracket:");
    println!("(formula: (n+2t-1)/(n+t-1) · C(n+t-1, t))\n");
    print!("  n\\t ");
    for t in 0..=4 {
        print!("{t:>6}");
    }
    println!();
    for n in 2..=5usize {
        print!("  {n}   ");
        for t in 0..=4usize {
            let d = dimension_formula(n, t);
            let kernel = laplacian_kernel_dim(n + 1, t);
            assert_eq!(d, kernel as u128, "(n={n}, t={t})");
            print!("{d:>6}");
        }
        println!();
    }
    println!("\nevery entry equals the dimension of the space of degree-t harmonic");
    println!("polynomials in n+1 variables, recomputed per entry as the kernel of the");
    println!("exact Laplacian matrix. Familiar rows: arity 2 gives 2t+1, arity 3 gives (t+1)².");

    // One kernel in detail: degree 2 in 4 variables.
    let lap = laplacian(4, 2);
    println!(
        "\nLaplacian on degree-2 monomials in 4 variables: a {}×{} integer matrix;",
        lap.rows(),
        lap.cols()
    );
    println!(
        "rank {} ⇒ kernel dimension {} (the degree-2 harmonics)",
        lap.rank(),
        laplacian_kernel_dim(4, 2)
    );
    let names: Vec<String> = monomials(4, 2)
        .iter()
        .map(|m| nlie_kit::sorep::monomial_label(m))
        .collect();
    println!("monomial basis: {}", names.join(", "));
}
