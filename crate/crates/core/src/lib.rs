//! Torus-equivariant cohomology of Bott–Samelson varieties in exact
//! arithmetic: fixed-point restrictions of the canonical basis, products,
//! localization integrals, the ordinary cohomology ring, and Billey's
//! restriction formula for Schubert classes.
//!
//! All algebra is generic over an exact [`Scalar`]; the aliases below fix the
//! default arbitrary-precision rational field.

pub mod bott_samelson;
mod display;
pub mod error;
pub mod ordinary;
pub mod polyring;
pub mod root_system;
pub mod scalar;
pub mod schubert;

pub use bott_samelson::{BsWord, CohClass, Gallery, RestrictionFn};
pub use error::{Error, Result};
pub use ordinary::{evaluate_at_origin, ordinary_multiply, relations, OrdinaryClass, Relation};
pub use polyring::{
    fraction_sum, fraction_to_polynomial, poly_arith, ArithOp, LinearCombFraction, Monomial, Polynomial,
};
pub use root_system::{CartanSpec, RootSystem, SimpleWord, Weight, WeylElement};
pub use scalar::Scalar;
pub use schubert::{
    beta_sequence, billey, billey_identity_sides, check_billey_identity, fiber, BilleyQuery, WordScope,
};

/// Arbitrary-precision rationals, the default coefficient field.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals; faster, overflow panics.
pub type Rational64 = num_rational::Rational64;

pub type Poly = Polynomial<Rational>;
pub type Wt = Weight<Rational>;
pub type Fraction = LinearCombFraction<Rational>;
pub type Class = CohClass<Rational>;
