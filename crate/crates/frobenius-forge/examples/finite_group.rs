//! The finite-group engine and its agreement with the diagonal engine.
//!
//! Z/3 acts on a 2-dimensional space with eigenvalues zeta, zeta^2 in
//! characteristic 7. The pushforward of the invariant ring decomposes
//! into covariant components with multiplicities (17, 16, 16), computed
//! from exact cyclotomic character arithmetic. Encoding the same action
//! as a torsion grading reproduces the numbers monomial by monomial.
//!
//! Run with: cargo run --example finite_group

use frobenius_forge::commands::abelian_cross_check;
use frobenius_forge::groupchar::{
    cyclic_group, frobenius_twist, group_multiplicity_matrix, pushforward_multiplicities,
    truncation_character,
};
use frobenius_forge::lattice::{GradingGroup, WeightSystem};

fn main() {
    let gd = cyclic_group(3, &[1, 2], 7).unwrap();
    println!(
        "Z/3 with eigenvalue exponents (1,2) on W, p = 7, |G| = {}",
        gd.order()
    );

    let trunc = truncation_character(&gd, 7);
    println!("\ntruncation character of S/S_+^[7] (exact cyclotomic values):");
    for (class, value) in gd.classes.iter().zip(&trunc) {
        println!("  class of size {}: {}", class.size, gd.field.render(value));
    }

    let twisted = frobenius_twist(&gd, &trunc, 1).unwrap();
    println!("twist by the Galois map z -> z^t with t*p = 1 (mod 3): unchanged here, p = 1 mod 3");
    assert_eq!(twisted, trunc);

    let mults = pushforward_multiplicities(&gd, 1).unwrap();
    println!("\ncovariant multiplicities in ^1R:");
    for (name, mult) in gd.names.iter().zip(&mults) {
        println!("  R({name}): {mult}");
    }

    let matrix = group_multiplicity_matrix(&gd).unwrap();
    println!("\none-step multiplicity matrix over the irreducibles:");
    for (i, row) in matrix.entries().iter().enumerate() {
        println!("  {:<6} {:?}", matrix.labels()[i], row);
    }
    matrix.verify_rank_eigenvector().unwrap();
    println!(
        "degree-weighted column sums all equal p^dimW = {}",
        matrix.lambda()
    );

    // Same action as a torsion grading: weights (1, 2) in Z/3.
    let grading = GradingGroup::new(0, vec![3]).unwrap();
    let weights = vec![
        grading.character(vec![], vec![1]).unwrap(),
        grading.character(vec![], vec![2]).unwrap(),
    ];
    let ws = WeightSystem::new(grading, weights, 7, None).unwrap();
    println!("\ncross-engine agreement with the diagonal encoding (e = 1, 2):");
    for e in 1..=2 {
        let pairs = abelian_cross_check(&gd, &ws, e).unwrap();
        for ((name, (group_mult, diag_mult)), _) in gd.names.iter().zip(&pairs).zip(0..) {
            assert_eq!(group_mult, diag_mult);
            println!("  e = {e}: {name}: group engine {group_mult} = diagonal engine {diag_mult}");
        }
    }
}
