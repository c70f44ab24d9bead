//! The polynomial ring `S = Sym(𝔥*)` in the simple-root variables, with the
//! Weyl action, exact division by linear forms, and fractions whose
//! denominators are products of linear forms.

mod fraction;
mod monomial;
mod parse;
mod polynomial;

pub use fraction::{fraction_sum, fraction_to_polynomial, LinearCombFraction};
pub use monomial::Monomial;
pub use polynomial::{poly_arith, ArithOp, Polynomial};
