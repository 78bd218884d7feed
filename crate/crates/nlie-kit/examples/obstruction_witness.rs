//! The negative half of the classification: modules that do not extend,
//! caught by a concrete quadratic operator with a nonzero residual — and
//! how the operator family degenerates outside its validity pattern.
//!
//! Run with: cargo run --example obstruction_witness

use nlie_kit::prolong::{can_prolong, obstruction_indices, r_operator, r_operator_unguarded};
use nlie_kit::sorep::{harmonic_module, pair_index, wedge_square_module};
use num_traits::Zero;

fn main() {
    // The wedge square of the defining module of the size-5 orthogonal
    // algebra (its adjoint module) does not prolong to the 4-ary bracket.
    let rep = wedge_square_module(5).unwrap();
    let report = can_prolong(4, &rep).unwrap();
    assert!(!report.ok);
    let w = report.witness.unwrap();
    println!("wedge square, size 5 (dimension {}):", rep.dim());
    println!("  obstruction operators checked: {}", report.obstructions_checked);
    println!("  first nonzero operator: R{}", w.index);
    println!("  first moved basis vector: {} (index {})", w.basis_label, w.basis_index);
    let terms: Vec<String> = w
        .residual
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("{c}·{}", rep.labels()[k]))
        .collect();
    println!("  R{}({}) = {}", w.index, w.basis_label, terms.join(" + "));

    // Re-derive the residual independently from the operator itself.
    let op = r_operator(&rep, w.index).unwrap();
    assert_eq!(op.column(w.basis_index), w.residual);
    println!("  (residual re-verified from the operator matrix)\n");

    // Outside the validity pattern the operator collapses — a consequence
    // of the homomorphism property alone, visible on any module.
    let probe = harmonic_module(4, 2).unwrap();
    let zero = r_operator_unguarded(&probe, 1, 2, 2, 3).unwrap();
    assert!(zero.is_zero());
    println!("degenerate indices on a sample module (degree-2 harmonics, size 4):");
    println!("  repeated index among (j,s,k): R(1,2,2,3) = 0 identically");
    let collapsed = r_operator_unguarded(&probe, 1, 1, 2, 3).unwrap();
    assert_eq!(&collapsed, probe.matrix(pair_index(2, 3, 4).unwrap()));
    println!("  i = j: R(1,1,2,3) collapses to +ρ(e_2_3) — a single generator image");
    let collapsed = r_operator_unguarded(&probe, 2, 1, 2, 3).unwrap();
    assert_eq!(collapsed, probe.matrix(pair_index(1, 3, 4).unwrap()).neg());
    println!("  i = s: R(2,1,2,3) collapses to -ρ(e_1_3)");

    // The guarded constructor refuses such indices.
    assert!(nlie_kit::prolong::ObstructionIndex::new(1, 1, 2, 3, 4).is_err());
    println!("  (the validated index type rejects all degenerate patterns)\n");

    // Obstruction counts grow as (m-3)·C(m,3).
    for m in 4..=7usize {
        println!("size {m}: {} valid obstruction indices", obstruction_indices(m).len());
    }
}
