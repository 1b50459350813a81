//! Searching for an operator that sends c^2 to 1.
//!
//! Whether the invariant ring is simple over its differential operators
//! is governed by a single element: a discriminant of a separable
//! Noether normalization. This example searches the quadric cone for an
//! operator sending the square of c = x^2 to 1, level by level in
//! q = p^e. At q = 3 the summand holding x^4 has two incomparable
//! generators and no monomial map works; at q = 9 the summand is free
//! and the projection-and-root map is a verified witness.
//!
//! Run with: cargo run --example witness_search

use frobenius_forge::diffop::dsimplicity_witness_search;
use frobenius_forge::lattice::{GradingGroup, WeightSystem};

fn main() {
    let grading = GradingGroup::new(0, vec![2]).unwrap();
    let sign = grading.character(vec![], vec![1]).unwrap();
    let ws = WeightSystem::new(grading, vec![sign.clone(), sign], 3, None).unwrap();

    println!("quadric cone, p = 3; c = x^2 (an invariant monomial)");

    // level q = 3 only: no witness yet
    match dsimplicity_witness_search(&ws, &[2, 0], 3).unwrap() {
        Some(w) => println!("unexpected witness at q = {}", w.q),
        None => println!("q <= 3: no witness (the summand of x^4 needs two generators)"),
    }

    // allow q = 9
    let witness = dsimplicity_witness_search(&ws, &[2, 0], 9)
        .unwrap()
        .unwrap();
    println!("\nwitness found at q = {} (e = {}):", witness.q, witness.e);
    println!("  residue of 2c mod q: {:?}", witness.residue);
    println!("  untwisted base exponent: {:?}", witness.base_exponent);
    println!("  summand degree: {}", witness.class_degree);
    for (g, img) in &witness.generator_images {
        println!("  generator {g:?} maps to x^{img:?}");
    }

    // replaying by hand: the witness projects onto the residue class of
    // 2c = (4,0) mod 9 and takes q-th roots after shifting
    println!("\nspot checks:");
    println!(
        "  theta(x^(4,0))  = x^{:?}",
        witness.apply(&[4, 0]).unwrap().unwrap()
    );
    println!(
        "  theta(x^(22,0)) = x^{:?}  (22 = 4 + 2*9)",
        witness.apply(&[22, 0]).unwrap().unwrap()
    );
    println!(
        "  theta(x^(2,0))  = {:?}   (wrong residue class, killed)",
        witness.apply(&[2, 0]).unwrap()
    );

    // c = 1 always has the splitting projection as its witness
    let trivial = dsimplicity_witness_search(&ws, &[0, 0], 3)
        .unwrap()
        .unwrap();
    println!(
        "\nc = 1: witness at q = {} (the identity-component projection)",
        trivial.q
    );
}
