use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A fixed point `ε ∈ {0,1}^N`. Position `i` (1-based) is bit `i-1`.
///
/// Ordered by length `ℓ(ε)` first, then by the bit mask read as an integer
/// with position 1 least significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gallery {
    bits: u64,
    len: u8,
}

pub const MAX_GALLERY_LEN: usize = 63;

impl Gallery {
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_GALLERY_LEN);
        Self { bits: 0, len: len as u8 }
    }

    /// The unit gallery `(i)`.
    pub fn unit(len: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= len, "position {i} out of range 1..={len}");
        Self { bits: 1 << (i - 1), len: len as u8 }
    }

    pub fn from_bits(len: usize, bits: u64) -> Self {
        assert!(len <= MAX_GALLERY_LEN);
        assert!(bits >> len == 0, "bits beyond gallery length");
        Self { bits, len: len as u8 }
    }

    pub fn from_positions(len: usize, positions: impl IntoIterator<Item = usize>) -> Self {
        positions.into_iter().fold(Self::zero(len), |g, i| g.with(i))
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// `N`.
    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// `ℓ(ε)`, the number of selected positions.
    pub fn length(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.len() && self.bits >> (i - 1) & 1 == 1
    }

    /// `ε + (i)` with position `i` switched on.
    pub fn with(&self, i: usize) -> Self {
        assert!(i >= 1 && i <= self.len());
        Self { bits: self.bits | 1 << (i - 1), len: self.len }
    }

    pub fn without(&self, i: usize) -> Self {
        assert!(i >= 1 && i <= self.len());
        Self { bits: self.bits & !(1 << (i - 1)), len: self.len }
    }

    /// `π₊(ε)`, increasing.
    pub fn plus(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len()).filter(move |&i| self.contains(i))
    }

    /// `π₋(ε)`, increasing.
    pub fn minus(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len()).filter(move |&i| !self.contains(i))
    }

    /// `π₊(self) ⊂ π₊(other)`.
    pub fn leq(&self, other: &Gallery) -> Result<bool> {
        if self.len != other.len {
            return Err(Error::LengthMismatch { expected: self.len(), found: other.len() });
        }
        Ok(self.bits & !other.bits == 0)
    }

    pub(crate) fn leq_unchecked(&self, other: &Gallery) -> bool {
        self.bits & !other.bits == 0
    }

    /// All galleries `ε' ≤ self`.
    pub fn below(&self) -> impl Iterator<Item = Gallery> + '_ {
        // subset enumeration of the mask, descending, then the empty set
        let full = self.bits;
        let len = self.len;
        let mut cur = Some(full);
        std::iter::from_fn(move || {
            let here = cur?;
            cur = if here == 0 { None } else { Some((here - 1) & full) };
            Some(Gallery { bits: here, len })
        })
    }

    /// All `2^N` galleries in canonical order.
    pub fn all(len: usize) -> Vec<Gallery> {
        assert!(len <= MAX_GALLERY_LEN);
        let mut out: Vec<Gallery> = (0..1u64 << len).map(|b| Gallery::from_bits(len, b)).collect();
        out.sort();
        out
    }

    /// Parses a bit string, leftmost character is position 1.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.len() > MAX_GALLERY_LEN {
            return Err(Error::Parse(format!("gallery longer than {MAX_GALLERY_LEN}")));
        }
        let mut bits = 0u64;
        for (k, ch) in text.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << k,
                _ => return Err(Error::Parse(format!("gallery {text:?} is not a bit string"))),
            }
        }
        Ok(Self { bits, len: text.len() as u8 })
    }
}

impl Ord for Gallery {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.length().cmp(&other.length()))
            .then_with(|| self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for Gallery {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Gallery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len() {
            f.write_str(if self.contains(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}
