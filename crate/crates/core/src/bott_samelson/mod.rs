//! Galleries, the fixed-point weights `α_i(ε)`, the restriction basis
//! `σ_ε`, change of basis between restriction functions and basis
//! coordinates, products, and localization integrals.

mod class;
mod gallery;
pub(crate) mod ops;
mod word;

pub use class::{CohClass, CohClassJson, RestrictionFn};
pub use gallery::{Gallery, MAX_GALLERY_LEN};
pub use ops::{
    alpha, alphas, expand, gallery_leq, integrate, multiply, multiply_generator, restriction_table, sigma, v_segment,
};
pub use word::{BsWord, DEFAULT_GALLERY_CAP};

#[cfg(test)]
mod tests;
