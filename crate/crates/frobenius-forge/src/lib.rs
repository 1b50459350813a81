//! Exact computations with Frobenius pushforwards of invariant rings in
//! characteristic p.
//!
//! The crate decomposes the pushforwards `^e R` of diagonalizable and
//! finite-group invariant rings into indecomposable summand classes,
//! iterates the decomposition to detect finite F-representation type,
//! analyzes the resulting multiplicity matrix (primitivity, exact Perron
//! data, limit multiplicities, positivity certificates, endomorphism
//! block structure), and runs desk-scale differential-operator
//! diagnostics (order filtration by commutators, trace-form
//! discriminants, witness search for operators sending a squared
//! discriminant monomial to 1).
//!
//! Everything is exact: big-rational linear programming, lattice-point
//! searches, cyclotomic character arithmetic, and big-integer matrix
//! powering. Floating point appears only when a report formats an exact
//! rational for display.
//!
//! Start with the `examples/` directory: each example is a runnable tour
//! of one capability. The `frobenius-forge` binary exposes the same
//! functionality as subcommands over plain-text ring specifications.

pub mod diag;
pub mod diffop;
pub mod diophantine;
pub mod dynamics;
pub mod error;
pub mod groupchar;
pub mod intmat;
pub mod lattice;
pub mod monomial;
pub mod simplex;

pub mod commands;
pub mod report;
pub mod ringspec;

pub use error::{Error, Result};
pub mod cyclotomic;
