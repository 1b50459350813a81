//! Frobenius pushforwards of the quadric cone.
//!
//! The sign action of Z/2 on k[x, y] has invariant ring k[x^2, xy, y^2],
//! the A_1 surface singularity. This example decomposes its pushforwards
//! in characteristic 3, iterates the decomposition to a fixed point, and
//! prints the one-step multiplicity matrix.
//!
//! Run with: cargo run --example quadric_cone

use frobenius_forge::diag::{
    closure_classes, multiplicity_matrix, pushforward_decompose, DEFAULT_CELL_BUDGET,
};
use frobenius_forge::lattice::{GradingGroup, WeightSystem};
use frobenius_forge::monomial::CovariantClass;

fn main() {
    // Z/2 grading, both variables of weight 1 (the sign character).
    let grading = GradingGroup::new(0, vec![2]).unwrap();
    let sign = grading.character(vec![], vec![1]).unwrap();
    let ws = WeightSystem::new(grading, vec![sign.clone(), sign], 3, None).unwrap();

    println!(
        "quadric cone: Z/2 weights (1,1), p = 3, Krull dim {}",
        ws.krull_dim()
    );

    let unit = CovariantClass::unit(&ws);
    for e in 1..=2 {
        let report = pushforward_decompose(&ws, &unit, e, DEFAULT_CELL_BUDGET).unwrap();
        println!("\npushforward at e = {e} (q = {}):", report.q);
        for (key, (class, mult)) in &report.entries {
            println!("  {mult:>3} x class {key} of degree {}", class.degree());
        }
        println!("  empty residue pieces: {}", report.zero_piece_count);
    }

    let closure = closure_classes(&ws, 16, DEFAULT_CELL_BUDGET).unwrap();
    println!(
        "\nclosure after {} rounds: {} classes, verdict {:?}",
        closure.rounds,
        closure.classes.len(),
        closure.verdict
    );

    let matrix = multiplicity_matrix(&ws, &closure, DEFAULT_CELL_BUDGET).unwrap();
    println!("\none-step multiplicity matrix (columns = pushforward of that class):");
    for (i, row) in matrix.entries().iter().enumerate() {
        println!("  {:<16} {:?}", matrix.labels()[i], row);
    }
    matrix.verify_rank_eigenvector().unwrap();
    println!(
        "\nrank vector {:?} is an exact left eigenvector for p^dim = {}",
        matrix.ranks(),
        matrix.lambda()
    );
}
