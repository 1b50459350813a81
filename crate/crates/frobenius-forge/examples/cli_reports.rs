//! Driving the command layer directly: one deterministic report per
//! command, over the same plain-text specs the CLI reads.
//!
//! Run with: cargo run --example cli_reports

use frobenius_forge::commands::{cmd_closure, cmd_decompose, cmd_ematrix, Options};
use frobenius_forge::report::{digest_bytes, Format};
use frobenius_forge::ringspec::parse_ring_spec;

const QUADRIC: &str = "\
kind = diagonal

[grading]
free_rank = 0
torsion_orders = 2

[weights]
weight = 1
weight = 1

[prime]
p = 3
";

fn main() {
    let digest = digest_bytes(QUADRIC.as_bytes());
    let spec = parse_ring_spec(QUADRIC).unwrap();
    let opts = Options::default();

    let decompose = cmd_decompose(&spec, &digest, &opts).unwrap();
    println!("{}", decompose.render(Format::Human, 0));

    let closure = cmd_closure(&spec, &digest, &opts).unwrap();
    println!("{}", closure.render(Format::Human, 0));

    let ematrix = cmd_ematrix(&spec, &digest, &opts).unwrap();
    // machine format: flat key = value lines with stable ordering
    println!("{}", ematrix.render(Format::Machine, 0));
}
