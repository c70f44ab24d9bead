use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::display::write_sum;
use crate::error::{Error, Result};
use crate::polyring::Monomial;
use crate::root_system::{Weight, WeylElement};
use crate::scalar::Scalar;

/// Sparse polynomial in the simple-root variables `a1..ar`.
///
/// No zero coefficients are stored; the zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    rank: usize,
    terms: BTreeMap<Monomial, C>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring operation.
pub fn poly_arith<C: Scalar>(a: &Polynomial<C>, b: &Polynomial<C>, op: ArithOp) -> Result<Polynomial<C>> {
    if a.rank != b.rank {
        return Err(Error::RankMismatch { expected: a.rank, found: b.rank });
    }
    Ok(match op {
        ArithOp::Add => a.add_unchecked(b, false),
        ArithOp::Sub => a.add_unchecked(b, true),
        ArithOp::Mul => a.mul_unchecked(b),
    })
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, C::one())
    }

    pub fn constant(rank: usize, c: C) -> Self {
        let mut p = Self::zero(rank);
        p.add_term(Monomial::one(rank), c);
        p
    }

    /// The variable `a_i` (1-based).
    pub fn var(rank: usize, i: usize) -> Self {
        let mut p = Self::zero(rank);
        p.add_term(Monomial::var(rank, i - 1), C::one());
        p
    }

    /// The linear form of a weight.
    pub fn from_weight(lam: &Weight<C>) -> Self {
        let rank = lam.rank();
        let mut p = Self::zero(rank);
        for (k, c) in lam.coords().iter().enumerate() {
            p.add_term(Monomial::var(rank, k), c.clone());
        }
        p
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(rank);
        for (m, c) in terms {
            assert_eq!(m.exponents().len(), rank, "monomial rank mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// `f(0)`.
    pub fn constant_term(&self) -> C {
        self.coefficient(&Monomial::one(self.rank))
    }

    /// The single coefficient of a constant polynomial.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::one(self.rank)).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.rank);
        }
        Self { rank: self.rank, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.clone() * s.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.rank), |acc, _| acc.mul_unchecked(self))
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        poly_arith(self, rhs, ArithOp::Add)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        poly_arith(self, rhs, ArithOp::Sub)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        poly_arith(self, rhs, ArithOp::Mul)
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn add_unchecked(&self, rhs: &Self, negate: bool) -> Self {
        let mut out = self.clone();
        out.accumulate(rhs, negate);
        out
    }

    fn accumulate(&mut self, rhs: &Self, negate: bool) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), if negate { -c.clone() } else { c.clone() });
        }
    }

    fn mul_unchecked(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.rank);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Ring automorphism induced by the Weyl action on the variables.
    pub fn weyl_act(&self, w: &WeylElement) -> Result<Self> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: w.rank() });
        }
        let r = self.rank;
        let images: Vec<Self> = (1..=r)
            .map(|i| w.apply(&Weight::simple_root(r, i)).map(|img| Self::from_weight(&img)))
            .collect::<Result<_>>()?;
        // powers[k][e] = image_k^e, grown on demand
        let mut powers: Vec<Vec<Self>> = images.iter().map(|_| vec![Self::one(r)]).collect();
        let mut out = Self::zero(r);
        for (m, c) in &self.terms {
            let mut term = Self::constant(r, c.clone());
            for (k, &e) in m.exponents().iter().enumerate() {
                while powers[k].len() <= e as usize {
                    let next = powers[k].last().unwrap().mul_unchecked(&images[k]);
                    powers[k].push(next);
                }
                if e > 0 {
                    term = term.mul_unchecked(&powers[k][e as usize]);
                }
            }
            out.accumulate(&term, false);
        }
        Ok(out)
    }

    /// Exact quotient by a nonzero linear form.
    ///
    /// Division algorithm in graded-lex order: the leading term of the form
    /// is `c·a_v` with `v` its first nonzero coordinate. Division by a single
    /// divisor has a unique remainder, so the first leading term not
    /// divisible by `a_v` proves the quotient does not exist.
    pub fn divide_exact(&self, form: &Weight<C>) -> Result<Self> {
        if form.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: form.rank() });
        }
        let v = form.leading_index().ok_or(Error::ZeroForm)?;
        let lead = form.coords()[v].clone();
        let divisor = Self::from_weight(form);
        let mut rest = self.clone();
        let mut quotient = Self::zero(self.rank);
        while let Some((m, c)) = rest.leading_term() {
            let not_divisible = || Error::NotDivisible(format!("{self} by {form}"));
            let qm = m.div_var(v).ok_or_else(not_divisible)?;
            let qc = c.checked_exact_div(&lead).ok_or_else(not_divisible)?;
            let step = Self::from_terms(self.rank, [(qm, qc)]);
            rest.accumulate(&step.mul_unchecked(&divisor), true);
            quotient.accumulate(&step, false);
        }
        Ok(quotient)
    }

    /// Parses the text syntax produced by `Display`, e.g.
    /// `-2*a1^2*a2 + a1*a2 + 3` or `1/2*a1`.
    pub fn parse(rank: usize, text: &str) -> Result<Self> {
        crate::polyring::parse::parse_polynomial(rank, text)
    }
}

impl<C: Scalar> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().rev().map(|(m, c)| (c, m.render())))
    }
}

impl<C: Scalar> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.checked_add(rhs).expect("polynomial rank mismatch")
    }
}

impl<C: Scalar> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.checked_sub(rhs).expect("polynomial rank mismatch")
    }
}

impl<C: Scalar> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.checked_mul(rhs).expect("polynomial rank mismatch")
    }
}

impl<C: Scalar> AddAssign<&Polynomial<C>> for Polynomial<C> {
    fn add_assign(&mut self, rhs: &Polynomial<C>) {
        assert_eq!(self.rank, rhs.rank, "polynomial rank mismatch");
        self.accumulate(rhs, false);
    }
}

impl<C: Scalar> SubAssign<&Polynomial<C>> for Polynomial<C> {
    fn sub_assign(&mut self, rhs: &Polynomial<C>) {
        assert_eq!(self.rank, rhs.rank, "polynomial rank mismatch");
        self.accumulate(rhs, true);
    }
}

impl<C: Scalar> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial { rank: self.rank, terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}
