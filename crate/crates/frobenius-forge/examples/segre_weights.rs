//! Mixed-sign torus weights: the Segre product.
//!
//! A one-dimensional torus acts on four variables with weights
//! (1, 1, -1, -1); the invariant ring is generated by the four products
//! x_i y_j, the cone over a smooth quadric surface. This example shows
//! the empty residue pieces at p = 2, the FFRT closure, and the match
//! between the closure classes and the strongly-critical enumeration.
//!
//! Run with: cargo run --example segre_weights

use frobenius_forge::diag::{
    closure_classes, pushforward_decompose, strongly_critical_classes, DEFAULT_CELL_BUDGET,
};
use frobenius_forge::lattice::{GradingGroup, WeightSystem};
use frobenius_forge::monomial::CovariantClass;

fn main() {
    let grading = GradingGroup::new(1, vec![]).unwrap();
    let weights: Vec<_> = [1i64, 1, -1, -1]
        .iter()
        .map(|&w| grading.character(vec![w], vec![]).unwrap())
        .collect();

    for p in [2u64, 3] {
        let ws = WeightSystem::new(grading.clone(), weights.clone(), p, None).unwrap();
        println!(
            "== weights (1,1,-1,-1), p = {p}, Krull dim {}",
            ws.krull_dim()
        );

        let unit = CovariantClass::unit(&ws);
        let report = pushforward_decompose(&ws, &unit, 1, DEFAULT_CELL_BUDGET).unwrap();
        println!("one-step decomposition:");
        for (key, (class, mult)) in &report.entries {
            println!("  {mult:>3} x {key}  (degree {})", class.degree());
        }
        println!(
            "  empty pieces: {} (odd residue sums untwist to non-integral degrees)",
            report.zero_piece_count
        );

        let closure = closure_classes(&ws, 16, DEFAULT_CELL_BUDGET).unwrap();
        let critical = strongly_critical_classes(&ws, DEFAULT_CELL_BUDGET).unwrap();
        println!(
            "closure: {} classes ({:?});  strongly-critical support classes: {}",
            closure.classes.len(),
            closure.verdict,
            critical.len()
        );
        let match_ok = closure
            .classes
            .iter()
            .map(|c| c.key())
            .eq(critical.iter().map(|c| c.key()));
        println!("cross-check: closure classes = strongly-critical classes? {match_ok}\n");
    }

    // The strongly-critical test itself, on the boundary: chi = 2 needs
    // u = (-1, -1, 0, 0), and -1 is excluded from the half-open interval.
    let ws = WeightSystem::new(grading.clone(), weights, 5, None).unwrap();
    for chi in -2i64..=2 {
        let c = grading.character(vec![chi], vec![]).unwrap();
        println!(
            "chi = {chi:>2}: strongly critical = {}",
            ws.is_strongly_critical(&c)
        );
    }
}
