//! Three independent decision procedures for the same question — does a
//! module of the wedge algebra extend to the n-ary bracket? — and a look
//! at exactly which module axiom fails when the answer is no.
//!
//! Run with: cargo run --example three_deciders

use nlie_kit::basiclie::iso_to_so;
use nlie_kit::nlie::vector_product_algebra;
use nlie_kit::prolong::{can_prolong, check_module_axioms, prolong_check_general};
use nlie_kit::sorep::{harmonic_module, so4_tensor_module};

fn main() {
    let alg = vector_product_algebra(3).unwrap();
    let iso = iso_to_so(3).unwrap();

    let cases = [
        ("degree-2 harmonics (weight pair (2,2))", harmonic_module(4, 2).unwrap()),
        ("weight pair (2,0)", so4_tensor_module(2, 0).unwrap()),
    ];

    for (name, rep) in &cases {
        println!("module: {name}, dimension {}", rep.dim());

        // Decider 1: the finite family of quadratic obstruction operators.
        let a = can_prolong(3, rep).unwrap();
        println!("  obstruction operators ({} checked): {}", a.obstructions_checked, verdict(a.ok));

        // Decider 2: the linearized extension identity on every basis
        // instance (heads of 3 indices, tails of 1).
        let b = prolong_check_general(3, rep).unwrap();
        println!("  linearized identity ({} instances): {}", b.instances, verdict(b.ok));

        // Decider 3: build the extended algebra on A ⊕ M and run the full
        // identity checker on it.
        let pulled = iso.pull_rep(rep).unwrap();
        let extended = alg.semidirect_sum(&pulled).unwrap();
        let c = extended.is_filippov();
        println!(
            "  extended algebra (dimension {}): {}",
            extended.dim(),
            verdict(c.ok)
        );
        assert_eq!(a.ok, b.ok);
        assert_eq!(b.ok, c.ok);

        // The module-axiom report shows the failure is always in the
        // compatibility with the n-ary bracket, never in the Lie-level
        // axioms (those hold for every verified representation).
        let axioms = check_module_axioms(&alg, &pulled).unwrap();
        println!(
            "  axioms: skew={} shift={} wedge-bracket={} n-ary-bracket={}\n",
            axioms.skew, axioms.position_shift, axioms.action_bracket, axioms.prolongation
        );
        if !a.ok {
            assert!(axioms.skew && axioms.position_shift && axioms.action_bracket);
            assert!(!axioms.prolongation);
        }
    }
    println!("all three deciders agree on every module, by construction of the theory —");
    println!("and the test suite pins that agreement across 15 modules of arities 2..5");
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "extends"
    } else {
        "OBSTRUCTED"
    }
}
