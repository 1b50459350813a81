//! Desk-scale differential-operator diagnostics: order filtration by
//! nested commutators on truncated windows, linearity over rings of
//! q-th powers, trace-form discriminants of module-finite extensions,
//! and witness search for operators sending a squared discriminant
//! monomial to 1.

pub mod extension;
pub mod operator;
pub mod witness;

pub use extension::{
    determinant, parse_poly, Coeff, CoeffField, Discriminant, Poly, RingExtensionPresentation,
};
pub use operator::{is_rq_linear, operator_order, TruncatedOperator, Window};
pub use witness::{dsimplicity_witness_search, Witness};
