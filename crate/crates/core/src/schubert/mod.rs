//! Billey's fixed-point formula for equivariant Schubert classes and its
//! comparison with Bott–Samelson restrictions along a reduced word of `w₀`.

use crate::bott_samelson::ops::linear_form;
use crate::bott_samelson::{sigma, BsWord, Gallery};
use crate::error::{Error, Result};
use crate::polyring::Polynomial;
use crate::root_system::{RootSystem, SimpleWord, Weight, WeylElement};
use crate::scalar::Scalar;

/// `ξ^w(v)` request: `v` is given by a reduced word.
#[derive(Debug, Clone)]
pub struct BilleyQuery<'a> {
    rs: &'a RootSystem,
    w: WeylElement,
    v_word: SimpleWord,
}

impl<'a> BilleyQuery<'a> {
    pub fn new(rs: &'a RootSystem, w: WeylElement, v_word: SimpleWord) -> Result<Self> {
        if w.rank() != rs.rank() {
            return Err(Error::RankMismatch { expected: rs.rank(), found: w.rank() });
        }
        if !rs.is_reduced(&v_word)? {
            return Err(Error::NotReducedWord(v_word.to_string()));
        }
        Ok(Self { rs, w, v_word })
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    pub fn w(&self) -> &WeylElement {
        &self.w
    }

    pub fn v_word(&self) -> &SimpleWord {
        &self.v_word
    }
}

fn beta_ints(rs: &RootSystem, v_word: &SimpleWord) -> Vec<Vec<i64>> {
    let mut prefix = WeylElement::identity(rs.rank());
    let mut out = Vec::with_capacity(v_word.len());
    for &i in v_word.letters() {
        let mut alpha = vec![0; rs.rank()];
        alpha[i - 1] = 1;
        out.push(prefix.apply_ints(&alpha));
        prefix = &prefix * rs.reflection_unchecked(i);
    }
    out
}

/// `β_j = r_{i_1}⋯r_{i_{j-1}} α_{i_j}`.
pub fn beta_sequence<C: Scalar>(rs: &RootSystem, v_word: &SimpleWord) -> Result<Vec<Weight<C>>> {
    if !rs.is_reduced(v_word)? {
        return Err(Error::NotReducedWord(v_word.to_string()));
    }
    Ok(beta_ints(rs, v_word).iter().map(|b| Weight::from_ints(b)).collect())
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

struct Search<'s, C> {
    rs: &'s RootSystem,
    letters: &'s [usize],
    betas: Vec<Polynomial<C>>,
    target: &'s WeylElement,
    m: usize,
    total: Polynomial<C>,
}

impl<C: Scalar> Search<'_, C> {
    // Every prefix of a length-m subword equal to w is reduced, so a letter
    // is only taken when it raises the length of the running product.
    fn walk(&mut self, from: usize, taken: usize, u: &WeylElement, acc: &Polynomial<C>) {
        if taken == self.m {
            if u == self.target {
                self.total += acc;
            }
            return;
        }
        let needed = self.m - taken;
        for pos in from..self.letters.len() {
            if self.letters.len() - pos < needed {
                break;
            }
            let i = self.letters[pos];
            let mut alpha = vec![0; self.rs.rank()];
            alpha[i - 1] = 1;
            if !is_positive(&u.apply_ints(&alpha)) {
                continue;
            }
            let next = u * self.rs.reflection_unchecked(i);
            let prod = acc * &self.betas[pos];
            self.walk(pos + 1, taken + 1, &next, &prod);
        }
    }
}

/// `ξ^w(v) = Σ β_{j_1}⋯β_{j_m}` over `j_1 < … < j_m` with
/// `r_{i_{j_1}}⋯r_{i_{j_m}} = w`, `m = ℓ(w)`.
pub fn billey<C: Scalar>(q: &BilleyQuery<'_>) -> Polynomial<C> {
    let rs = q.rs;
    let rank = rs.rank();
    let betas = beta_ints(rs, &q.v_word).iter().map(|b| linear_form(rank, b)).collect();
    let mut search = Search {
        rs,
        letters: q.v_word.letters(),
        betas,
        target: &q.w,
        m: rs.length(&q.w),
        total: Polynomial::zero(rank),
    };
    search.walk(0, 0, &WeylElement::identity(rank), &Polynomial::one(rank));
    search.total
}

/// `{ε : ℓ(ε) = ℓ(w), v(ε) = w}` in canonical gallery order.
pub fn fiber(word: &BsWord, w: &WeylElement) -> Vec<Gallery> {
    let m = word.root_system().length(w);
    let n = word.len();
    let mut out: Vec<Gallery> = (0..1u64 << n)
        .filter(|bits| bits.count_ones() as usize == m)
        .map(|bits| Gallery::from_bits(n, bits))
        .filter(|e| word.segment_unchecked(e, 1, n) == *w)
        .collect();
    out.sort();
    out
}

/// The letters of `word` at `π₊(ε)`, in position order.
pub fn selected_word(word: &BsWord, e: &Gallery) -> Result<SimpleWord> {
    word.check_gallery(e)?;
    Ok(SimpleWord::new(e.plus().map(|i| word.letter(i)).collect()))
}

/// Which words [`billey_identity_sides`] accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WordScope {
    /// Only reduced decompositions of `w₀`.
    #[default]
    LongestOnly,
    /// Any word; the identity is not known to hold in general.
    Any,
}

/// `(ξ^w(v(ε)), Σ_{ε' ∈ fiber(w)} σ_{ε'}(ε))`.
pub fn billey_identity_sides<C: Scalar>(
    word: &BsWord,
    w: &WeylElement,
    e: &Gallery,
    scope: WordScope,
) -> Result<(Polynomial<C>, Polynomial<C>)> {
    let rs = word.root_system();
    word.check_gallery(e)?;
    if w.rank() != rs.rank() {
        return Err(Error::RankMismatch { expected: rs.rank(), found: w.rank() });
    }
    if scope == WordScope::LongestOnly {
        let sw = word.simple_word();
        if sw.len() != rs.num_positive_roots() || !rs.is_reduced(&sw)? {
            return Err(Error::NotLongestWord(sw.to_string()));
        }
    }
    let v_word = selected_word(word, e)?;
    if !rs.is_reduced(&v_word)? {
        return Err(Error::NotReducedGallery(e.to_string()));
    }
    let lhs = billey(&BilleyQuery::new(rs, w.clone(), v_word)?);
    let mut rhs = Polynomial::zero(rs.rank());
    for f in fiber(word, w) {
        rhs += &sigma(word, &f, e)?;
    }
    Ok((lhs, rhs))
}

pub fn check_billey_identity<C: Scalar>(word: &BsWord, w: &WeylElement, e: &Gallery) -> Result<bool> {
    let (lhs, rhs) = billey_identity_sides::<C>(word, w, e, WordScope::LongestOnly)?;
    Ok(lhs == rhs)
}
