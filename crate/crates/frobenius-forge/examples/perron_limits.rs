//! Multiplicity growth: exact Perron data and limit multiplicities.
//!
//! The multiplicities m(e, M, R) grow like p^(dim e). This example
//! certifies the dominant eigenvalue p^dim against the rank vector in
//! exact integer arithmetic, computes the limit of E^e / p^(dim e) by
//! exact rational squaring, runs the positivity certificate that strong
//! F-regularity implies, and prints the minimal-finite-dimensional-
//! representation sequence with the semisimple block structure.
//!
//! Run with: cargo run --example perron_limits

use frobenius_forge::diag::{closure_classes, multiplicity_matrix, DEFAULT_CELL_BUDGET};
use frobenius_forge::dynamics::{
    parse_tolerance, rat_to_decimal, semisimple_block_report, MultiplicityMatrix, SfrCertificate,
};
use frobenius_forge::lattice::{GradingGroup, WeightSystem};

fn segre(p: u64) -> WeightSystem {
    let grading = GradingGroup::new(1, vec![]).unwrap();
    let weights: Vec<_> = [1i64, 1, -1, -1]
        .iter()
        .map(|&w| grading.character(vec![w], vec![]).unwrap())
        .collect();
    WeightSystem::new(grading, weights, p, None).unwrap()
}

fn main() {
    let ws = segre(2);
    let closure = closure_classes(&ws, 16, DEFAULT_CELL_BUDGET).unwrap();
    let matrix = multiplicity_matrix(&ws, &closure, DEFAULT_CELL_BUDGET).unwrap();

    println!("Segre weights (1,1,-1,-1), p = 2, dim = {}", matrix.dim());
    for (i, row) in matrix.entries().iter().enumerate() {
        println!("  {:<24} {:?}", matrix.labels()[i], row);
    }

    let u = matrix
        .primitivity()
        .expect("primitive within the Wielandt bound");
    println!(
        "\nprimitivity exponent: E^{u} > 0 (Wielandt bound {})",
        matrix.wielandt_bound()
    );

    let tol = parse_tolerance("1e-9").unwrap();
    let perron = matrix.perron(&tol).unwrap();
    println!(
        "dominant eigenvalue: {} (verified: rank vector is an exact left eigenvector)",
        perron.lambda
    );
    println!(
        "limit of E^e / p^(dim e), after {} exact squarings:",
        perron.doublings
    );
    for (i, row) in perron.limit.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|x| rat_to_decimal(x, 9)).collect();
        println!("  {:<24} [{}]", matrix.labels()[i], cells.join(", "));
    }

    let unit = closure.index_of_unit(&ws);
    match matrix.sfr_positivity_certificate(unit) {
        SfrCertificate::CertifiedPositivity { exponent } => println!(
            "\npositivity certificate: unit row and column of E^{exponent} strictly positive\n\
             (the pattern strong F-regularity implies; necessary direction only)"
        ),
        SfrCertificate::Failed { bound } => {
            println!("\npositivity certificate failed within the bound {bound}")
        }
    }

    let findim = matrix.min_findim_sequence(unit, 4, None).unwrap();
    println!("\nminimal finite-dimensional representation bounds:");
    for (e, u_e) in &findim.sequence {
        println!("  e = {e}: u_e = {u_e}");
    }
    println!("verdict: {:?}", findim.verdict);

    // Block structure of End(^1 R) modulo its radical.
    let col = matrix.power_column(1, unit);
    let mults: Vec<(String, u64)> = matrix
        .labels()
        .iter()
        .zip(&col)
        .filter(|(_, m)| *m > &0u32.into())
        .map(|(l, m)| (l.clone(), u64::try_from(m).unwrap()))
        .collect();
    println!("\nsemisimple blocks of End(^1R):");
    for block in semisimple_block_report(&mults, None).unwrap() {
        println!(
            "  M({}, D) with simple module of dimension {}",
            block.multiplicity, block.simple_dim
        );
    }

    // A matrix that never mixes: the identity pattern fails the certificate.
    let id = MultiplicityMatrix::new(
        vec![vec![1, 0], vec![0, 1]],
        vec!["a".into(), "b".into()],
        vec![1, 1],
        2,
        0,
    )
    .unwrap();
    println!(
        "\nblock-diagonal counterexample: {:?}",
        id.sfr_positivity_certificate(0)
    );
}
