//! The order filtration by commutators, on truncated windows.
//!
//! An operator has order n when every (n+1)-fold nested commutator with
//! the coordinate functions vanishes. In characteristic p, an operator
//! is linear over q-th powers exactly when its order is below d*q; this
//! example walks both directions on explicit operators.
//!
//! Run with: cargo run --example operator_order

use frobenius_forge::diffop::{is_rq_linear, operator_order, TruncatedOperator, Window};

fn main() {
    let w = Window::new(1, 2, 14);
    println!(
        "window: one variable, characteristic 2, degrees < {}",
        w.bound()
    );

    let mult = TruncatedOperator::multiplication(&w, &[1]);
    println!(
        "\nmultiplication by x:        order {:?}",
        operator_order(&mult, 6).unwrap()
    );

    let d1 = TruncatedOperator::divided_partial(&w, &[1]);
    println!(
        "d/dx:                       order {:?}",
        operator_order(&d1, 6).unwrap()
    );

    let d3 = TruncatedOperator::divided_partial(&w, &[3]);
    println!(
        "divided power D^[3]:        order {:?}",
        operator_order(&d3, 6).unwrap()
    );

    let proj = TruncatedOperator::residue_projection(&w, 2, &[0]);
    println!(
        "projection onto even part:  order {:?}",
        operator_order(&proj, 6).unwrap()
    );

    println!("\nlinearity over subrings of q-th powers:");
    for (name, op) in [("d/dx", &d1), ("even projection", &proj), ("D^[3]", &d3)] {
        for q in [2u64, 4] {
            println!("  {name:<16} q = {q}: {}", is_rq_linear(op, q).unwrap());
        }
    }

    // The same derivative fails x^2-linearity in characteristic 3:
    // d(x^2 f) = 2x f + x^2 df.
    let w3 = Window::new(1, 3, 14);
    let d1_char3 = TruncatedOperator::divided_partial(&w3, &[1]);
    println!("\nd/dx in characteristic 3, q = 2-th... q = 3 powers:");
    println!(
        "  is_rq_linear(d/dx, 3) = {}",
        is_rq_linear(&d1_char3, 3).unwrap()
    );
    println!(
        "  order(d/dx) = {:?} < d*q = 3, as the filtration demands",
        operator_order(&d1_char3, 6).unwrap()
    );

    // Two variables: orders add across divided powers.
    let w2 = Window::new(2, 3, 10);
    let dxy = TruncatedOperator::divided_partial(&w2, &[1, 2]);
    println!(
        "\ntwo variables, D^[1,2]: order {:?}",
        operator_order(&dxy, 6).unwrap()
    );
}
