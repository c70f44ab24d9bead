use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::Polynomial;
use crate::root_system::Weight;
use crate::scalar::Scalar;

/// `numerator / ∏ denominator`, with the denominator kept as a factored
/// multiset of sign-normalized linear forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCombFraction<C> {
    numerator: Polynomial<C>,
    /// Sorted, so equal multisets compare equal.
    denominator: Vec<Weight<C>>,
}

impl<C: Scalar> LinearCombFraction<C> {
    pub fn new(numerator: Polynomial<C>, forms: impl IntoIterator<Item = Weight<C>>) -> Result<Self> {
        let rank = numerator.rank();
        let mut negate = false;
        let mut denominator = Vec::new();
        for form in forms {
            if form.rank() != rank {
                return Err(Error::RankMismatch { expected: rank, found: form.rank() });
            }
            if form.is_zero() {
                return Err(Error::ZeroForm);
            }
            let (flip, normalized) = form.sign_normalized();
            negate ^= flip;
            denominator.push(normalized);
        }
        denominator.sort();
        let numerator = if negate { -numerator } else { numerator };
        Ok(Self { numerator, denominator })
    }

    pub fn from_polynomial(p: Polynomial<C>) -> Self {
        Self { numerator: p, denominator: Vec::new() }
    }

    pub fn numerator(&self) -> &Polynomial<C> {
        &self.numerator
    }

    pub fn denominator(&self) -> &[Weight<C>] {
        &self.denominator
    }

    pub fn rank(&self) -> usize {
        self.numerator.rank()
    }

    /// Cancels every denominator form that divides the numerator exactly.
    pub fn reduce(mut self) -> Self {
        if self.numerator.is_zero() {
            self.denominator.clear();
            return self;
        }
        let mut kept = Vec::with_capacity(self.denominator.len());
        for form in std::mem::take(&mut self.denominator) {
            match self.numerator.divide_exact(&form) {
                Ok(q) => self.numerator = q,
                Err(_) => kept.push(form),
            }
        }
        self.denominator = kept;
        self
    }

    /// The numerator after reduction, provided the denominator cancels fully.
    pub fn into_polynomial(self) -> Result<Polynomial<C>> {
        let reduced = self.reduce();
        if reduced.denominator.is_empty() {
            Ok(reduced.numerator)
        } else {
            Err(Error::ResidualDenominator(reduced.to_string()))
        }
    }
}

/// Free-function form of [`LinearCombFraction::into_polynomial`].
pub fn fraction_to_polynomial<C: Scalar>(f: LinearCombFraction<C>) -> Result<Polynomial<C>> {
    f.into_polynomial()
}

/// Exact sum over the least common multiple of the denominator multisets,
/// followed by `reduce`.
pub fn fraction_sum<C: Scalar>(
    rank: usize,
    fs: impl IntoIterator<Item = LinearCombFraction<C>>,
) -> Result<LinearCombFraction<C>> {
    let fs: Vec<LinearCombFraction<C>> = fs.into_iter().filter(|f| !f.numerator.is_zero()).collect();
    if let Some(f) = fs.iter().find(|f| f.rank() != rank) {
        return Err(Error::RankMismatch { expected: rank, found: f.rank() });
    }
    // lcm as (form, multiplicity) pairs
    let mut lcm: Vec<(Weight<C>, usize)> = Vec::new();
    for f in &fs {
        for (form, count) in multiplicities(&f.denominator) {
            match lcm.iter_mut().find(|(g, _)| *g == form) {
                Some((_, m)) => *m = (*m).max(count),
                None => lcm.push((form, count)),
            }
        }
    }
    let mut numerator = Polynomial::zero(rank);
    for f in &fs {
        let own = multiplicities(&f.denominator);
        let mut term = f.numerator.clone();
        for (form, m) in &lcm {
            let have = own.iter().find(|(g, _)| g == form).map_or(0, |(_, c)| *c);
            if *m > have {
                term = &term * &Polynomial::from_weight(form).pow((m - have) as u32);
            }
        }
        numerator += &term;
    }
    let mut denominator: Vec<Weight<C>> = lcm.into_iter().flat_map(|(form, m)| std::iter::repeat_n(form, m)).collect();
    denominator.sort();
    Ok(LinearCombFraction { numerator, denominator }.reduce())
}

fn multiplicities<C: Scalar>(sorted: &[Weight<C>]) -> Vec<(Weight<C>, usize)> {
    let mut out: Vec<(Weight<C>, usize)> = Vec::new();
    for form in sorted {
        match out.last_mut() {
            Some((g, m)) if g == form => *m += 1,
            _ => out.push((form.clone(), 1)),
        }
    }
    out
}

impl<C: Scalar> fmt::Display for LinearCombFraction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        let forms: Vec<String> = self.denominator.iter().map(|w| format!("({w})")).collect();
        write!(f, "({}) / ({})", self.numerator, forms.join("*"))
    }
}
