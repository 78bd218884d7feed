//! Check the fundamental identity for the built-in vector-products
//! algebras, then watch the checker catch a genuinely broken table.
//!
//! Run with: cargo run --example verify_filippov

use nlie_kit::exact::rat;
use nlie_kit::nlie::{vector_product_algebra, NLieAlgebra};
use nlie_kit::Rational;
use num_traits::Zero;

fn main() {
    // The n-ary vector products: dimension n+1, one structure constant per
    // basis n-tuple. All of them satisfy the fundamental identity.
    for n in 2..=5 {
        let alg = vector_product_algebra(n).unwrap();
        let report = alg.is_filippov();
        println!(
            "vector products, arity {n} (dimension {}): identity {}",
            alg.dim(),
            if report.ok { "holds" } else { "FAILS" }
        );
        assert!(report.ok);
    }

    // Rescaling a single constant — even flipping its sign — produces
    // another valid algebra: the diagonal family is a deformation family.
    let v3 = vector_product_algebra(3).unwrap();
    let mut rescaled = NLieAlgebra::new(3, 4).unwrap();
    for (tuple, value) in v3.entries() {
        let v: Vec<Rational> = if tuple == &vec![0, 1, 2] {
            value.iter().map(|x| x * rat(2)).collect()
        } else {
            value.clone()
        };
        rescaled.set_bracket(tuple, v).unwrap();
    }
    assert!(rescaled.is_filippov().ok);
    println!("\nrescaling one constant by 2: identity still holds (scalings are harmless)");

    // Mixing directions is what breaks the identity: send [e1,e2,e3] to
    // e4 + e1 instead of e4.
    let mut broken = NLieAlgebra::new(3, 4).unwrap();
    let mut mixed = vec![Rational::zero(); 4];
    mixed[3] = rat(1);
    mixed[0] = rat(1);
    broken.set_bracket(&[0, 1, 2], mixed).unwrap();
    broken.set_bracket(&[0, 1, 3], vec![rat(0), rat(0), rat(-1), rat(0)]).unwrap();
    broken.set_bracket(&[0, 2, 3], vec![rat(0), rat(1), rat(0), rat(0)]).unwrap();
    broken.set_bracket(&[1, 2, 3], vec![rat(-1), rat(0), rat(0), rat(0)]).unwrap();
    let report = broken.is_filippov();
    assert!(!report.ok);
    let w = report.violation.unwrap();
    let show = |t: &[usize]| {
        let parts: Vec<String> = t.iter().map(|i| (i + 1).to_string()).collect();
        format!("({})", parts.join(","))
    };
    println!("\nmixing e1 into [e1,e2,e3]: identity FAILS with witness");
    println!("  outer (n-1)-tuple: {}", show(&w.first));
    println!("  inner n-tuple:     {}", show(&w.second));
    let fmt = |v: &[Rational]| {
        let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        format!("[{}]", parts.join(", "))
    };
    println!("  nested side:   {}", fmt(&w.lhs));
    println!("  expanded side: {}", fmt(&w.rhs));

    // Both displays of the identity agree, witness for witness.
    let front = broken.is_filippov_front_form();
    assert!(!front.ok);
    assert_eq!(front.violation, Some(w));
    println!("\nthe move-to-front form of the identity reports the identical witness");
}
