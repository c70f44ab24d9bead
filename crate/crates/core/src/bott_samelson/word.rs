use std::fmt;
use std::sync::Arc;

use crate::bott_samelson::{Gallery, MAX_GALLERY_LEN};
use crate::error::{Error, Result};
use crate::root_system::{RootSystem, SimpleWord, WeylElement};

pub const DEFAULT_GALLERY_CAP: usize = 20;

/// The word `(μ_1, …, μ_N)` of simple roots defining a Bott–Samelson
/// variety, bundled with its root system.
#[derive(Debug, Clone)]
pub struct BsWord {
    rs: Arc<RootSystem>,
    letters: Arc<[usize]>,
}

impl PartialEq for BsWord {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && (Arc::ptr_eq(&self.rs, &other.rs) || self.rs == other.rs)
    }
}

impl Eq for BsWord {}

impl BsWord {
    pub fn new(rs: Arc<RootSystem>, word: &SimpleWord) -> Result<Self> {
        Self::with_cap(rs, word, DEFAULT_GALLERY_CAP)
    }

    /// Everything downstream enumerates up to `2^N` galleries; `cap` bounds
    /// `N` (hard limit 63).
    pub fn with_cap(rs: Arc<RootSystem>, word: &SimpleWord, cap: usize) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        rs.check_word(word)?;
        let cap = cap.min(MAX_GALLERY_LEN);
        if word.len() > cap {
            return Err(Error::CapExceeded { len: word.len(), cap });
        }
        Ok(Self { rs, letters: word.letters().into() })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Simple-root index of `μ_i` (1-based position).
    pub fn letter(&self, i: usize) -> usize {
        self.letters[i - 1]
    }

    pub fn simple_word(&self) -> SimpleWord {
        SimpleWord::new(self.letters.to_vec())
    }

    pub fn galleries(&self) -> Vec<Gallery> {
        Gallery::all(self.len())
    }

    pub fn check_gallery(&self, e: &Gallery) -> Result<()> {
        if e.len() == self.len() {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: self.len(), found: e.len() })
        }
    }

    pub fn check_position(&self, i: usize) -> Result<()> {
        if i >= 1 && i <= self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, bound: self.len() })
        }
    }

    /// `v(ε)`: the product of the selected reflections.
    pub fn v(&self, e: &Gallery) -> Result<WeylElement> {
        self.check_gallery(e)?;
        Ok(self.segment_unchecked(e, 1, self.len()))
    }

    pub(crate) fn segment_unchecked(&self, e: &Gallery, from: usize, to: usize) -> WeylElement {
        let mut w = WeylElement::identity(self.rank());
        for k in from..=to {
            if e.contains(k) {
                w = &w * self.rs.reflection_unchecked(self.letter(k));
            }
        }
        w
    }

    /// Integer coordinates of `α_1(ε), …, α_N(ε)`.
    pub(crate) fn alpha_ints(&self, e: &Gallery) -> Vec<Vec<i64>> {
        let r = self.rank();
        let mut out = Vec::with_capacity(self.len());
        let mut v = WeylElement::identity(r);
        for i in 1..=self.len() {
            let mut mu = vec![0; r];
            mu[self.letter(i) - 1] = 1;
            out.push(v.apply_ints(&mu));
            if e.contains(i) {
                v = &v * self.rs.reflection_unchecked(self.letter(i));
            }
        }
        out
    }
}

impl fmt::Display for BsWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.simple_word())
    }
}
