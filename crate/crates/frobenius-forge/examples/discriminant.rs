//! Trace-form discriminants of module-finite extensions.
//!
//! For R module-finite over a polynomial ring T with basis r_1..r_n,
//! the discriminant is det(trace(r_i r_j)), computed in the regular
//! representation with exact polynomial entries. A zero determinant
//! flags a non-generically-separable extension, where the discriminant
//! test for D-simplicity does not apply.
//!
//! Run with: cargo run --example discriminant

use frobenius_forge::diffop::{parse_poly, CoeffField, Poly, RingExtensionPresentation};

fn sqrt_extension(field: CoeffField) -> RingExtensionPresentation {
    // T = k[x] inside R = k[x, y]/(y^2 - x), basis (1, y).
    let vars = vec!["x".to_string()];
    let zero = Poly::zero(field);
    let one = Poly::constant(field, 1, 1);
    let x = parse_poly("x", &vars, field).unwrap();
    RingExtensionPresentation::new(
        vars,
        field,
        2,
        vec![
            vec![
                vec![one.clone(), zero.clone()],
                vec![zero.clone(), one.clone()],
            ],
            vec![vec![zero.clone(), one], vec![x, zero]],
        ],
    )
    .unwrap()
}

fn main() {
    for field in [
        CoeffField::Rational,
        CoeffField::Prime(5),
        CoeffField::Prime(2),
    ] {
        let ext = sqrt_extension(field);
        println!(
            "== k[x] inside k[x,y]/(y^2 - x), characteristic {}",
            field.characteristic()
        );
        let trace = ext.trace_matrix();
        for (i, row) in trace.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|p| p.render(&ext.base_vars)).collect();
            println!("  trace row r{}: [{}]", i + 1, cells.join(", "));
        }
        let disc = ext.discriminant();
        if disc.is_zero {
            println!("  discriminant = 0: not generically separable in characteristic 2\n");
        } else {
            println!("  discriminant = {}\n", disc.poly.render(&ext.base_vars));
        }
    }

    // A cubic: T = k[x] inside k[x,y]/(y^3 - x), basis (1, y, y^2), char 0.
    let field = CoeffField::Rational;
    let vars = vec!["x".to_string()];
    let zero = Poly::zero(field);
    let one = Poly::constant(field, 1, 1);
    let x = parse_poly("x", &vars, field).unwrap();
    let ext = RingExtensionPresentation::new(
        vars,
        field,
        3,
        vec![
            vec![
                vec![one.clone(), zero.clone(), zero.clone()],
                vec![zero.clone(), one.clone(), zero.clone()],
                vec![zero.clone(), zero.clone(), one.clone()],
            ],
            vec![
                vec![zero.clone(), one.clone(), zero.clone()],
                vec![zero.clone(), zero.clone(), one.clone()],
                vec![x.clone(), zero.clone(), zero.clone()],
            ],
            vec![
                vec![zero.clone(), zero.clone(), one],
                vec![x.clone(), zero.clone(), zero.clone()],
                vec![zero.clone(), x, zero],
            ],
        ],
    )
    .unwrap();
    let disc = ext.discriminant();
    println!("== k[x] inside k[x,y]/(y^3 - x), characteristic 0");
    println!("  discriminant = {}", disc.poly.render(&ext.base_vars));
}
