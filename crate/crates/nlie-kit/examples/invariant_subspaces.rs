//! Finding invariant subspaces with exact linear algebra: common kernels,
//! cyclic closures, irreducibility verdicts — and the fact that invariant
//! pieces of extendable modules stay extendable.
//!
//! Run with: cargo run --example invariant_subspaces

use nlie_kit::exact::rat;
use nlie_kit::prolong::{can_prolong, common_kernel, cyclic_closure, is_irreducible};
use nlie_kit::sorep::{harmonic_module, polynomial_module};
use nlie_kit::Rational;
use num_traits::Zero;

fn main() {
    // Degree-2 polynomials in 4 variables: reducible, because the squared
    // radius spans an invariant line.
    let poly2 = polynomial_module(4, 2).unwrap();
    println!("degree-2 polynomials, size 4 (dimension {}):", poly2.dim());
    println!("  irreducible: {}", is_irreducible(&poly2));
    let kernel = common_kernel(&poly2).unwrap();
    println!("  common kernel dimension: {}", kernel.len());
    let terms: Vec<String> = kernel[0]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("{c}·{}", poly2.labels()[k]))
        .collect();
    println!("  spanned by: {}", terms.join(" + "));

    // Both invariant pieces are themselves modules of the 3-ary bracket.
    let line = poly2.restrict(&kernel).unwrap();
    assert!(can_prolong(3, &line).unwrap().ok);
    let harm = harmonic_module(4, 2).unwrap();
    assert!(is_irreducible(&harm));
    assert!(can_prolong(3, &harm).unwrap().ok);
    println!("  both pieces (the line and the {}-dim harmonic layer) extend\n", harm.dim());

    // Degree 3: no trivial line this time (the common kernel is zero), but
    // the cyclic closure of a harmonic monomial exposes the proper layer.
    let poly3 = polynomial_module(4, 3).unwrap();
    println!("degree-3 polynomials, size 4 (dimension {}):", poly3.dim());
    assert!(common_kernel(&poly3).unwrap().is_empty());
    println!("  common kernel: zero (no trivial summand)");
    let seed = poly3.labels().iter().position(|l| l == "x1*x2*x3").unwrap();
    let mut v = vec![Rational::zero(); poly3.dim()];
    v[seed] = rat(1);
    let closure = cyclic_closure(&poly3, &v).unwrap();
    println!(
        "  cyclic closure of x1*x2*x3: dimension {} (the degree-3 harmonic layer)",
        closure.len()
    );
    assert_eq!(closure.len(), 16);
    assert!(!is_irreducible(&poly3));
    let layer = poly3.restrict(&closure).unwrap();
    assert!(is_irreducible(&layer));
    assert!(can_prolong(3, &layer).unwrap().ok);
    println!("  restricted layer: irreducible, and it extends to the 3-ary bracket");
}
