use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::display::write_sum;
use crate::scalar::Scalar;

/// An element of the weight space, in coordinates over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight<C> {
    coords: Vec<C>,
}

impl<C: Scalar> Weight<C> {
    pub fn new(coords: Vec<C>) -> Self {
        Self { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Self { coords: vec![C::zero(); rank] }
    }

    /// The simple root `α_i` (1-based). Panics if `i` is out of range.
    pub fn simple_root(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank, "simple root index {i} out of range 1..={rank}");
        let mut coords = vec![C::zero(); rank];
        coords[i - 1] = C::one();
        Self { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self { coords: coords.iter().map(|&c| C::from_int(c)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[C] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &C {
        &self.coords[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integral())
    }

    pub fn scale(&self, s: &C) -> Self {
        Self { coords: self.coords.iter().map(|c| c.clone() * s.clone()).collect() }
    }

    /// Index (0-based) of the first nonzero coordinate.
    pub(crate) fn leading_index(&self) -> Option<usize> {
        self.coords.iter().position(|c| !c.is_zero())
    }

    /// Returns `(sign, form)` with `form` having a positive first nonzero
    /// coordinate and `sign * form == self`.
    pub fn sign_normalized(&self) -> (bool, Self) {
        match self.leading_index() {
            Some(k) if self.coords[k].is_negative() => (true, -self.clone()),
            _ => (false, self.clone()),
        }
    }

    /// Integer coordinates, if every coordinate is an integer that fits in i64.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(|c| c.to_int()).collect()
    }
}

impl<C: Scalar> Add for &Weight<C> {
    type Output = Weight<C>;
    fn add(self, rhs: &Weight<C>) -> Weight<C> {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.clone() + b.clone()).collect() }
    }
}

impl<C: Scalar> Sub for &Weight<C> {
    type Output = Weight<C>;
    fn sub(self, rhs: &Weight<C>) -> Weight<C> {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.clone() - b.clone()).collect() }
    }
}

impl<C: Scalar> Neg for Weight<C> {
    type Output = Weight<C>;
    fn neg(self) -> Weight<C> {
        Weight { coords: self.coords.into_iter().map(|c| -c).collect() }
    }
}

impl<C: Scalar> fmt::Display for Weight<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms =
            self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (c, format!("a{}", k + 1)));
        write_sum(f, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type W = Weight<BigRational>;

    #[test]
    fn display() {
        assert_eq!(W::from_ints(&[1, 1]).to_string(), "a1 + a2");
        assert_eq!(W::from_ints(&[-1, 0]).to_string(), "-a1");
        assert_eq!(W::from_ints(&[2, -1]).to_string(), "2*a1 - a2");
        assert_eq!(W::zero(3).to_string(), "0");
        let half = W::new(vec![BigRational::new(1.into(), 2.into()), BigRational::from_int(0)]);
        assert_eq!(half.to_string(), "1/2*a1");
    }

    #[test]
    fn sign_normalization() {
        let (neg, form) = W::from_ints(&[0, -1, 2]).sign_normalized();
        assert!(neg);
        assert_eq!(form, W::from_ints(&[0, 1, -2]));
        let (neg, form) = W::from_ints(&[1, -1]).sign_normalized();
        assert!(!neg);
        assert_eq!(form, W::from_ints(&[1, -1]));
    }

    #[test]
    fn integer_roundtrip() {
        let w = W::from_ints(&[3, -7, 0, 1 << 40]);
        assert_eq!(w.to_ints(), Some(vec![3, -7, 0, 1 << 40]));
        let half = W::new(vec![BigRational::new(1.into(), 2.into())]);
        assert_eq!(half.to_ints(), None);
    }
}
