use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::bott_samelson::{BsWord, Gallery};
use crate::error::{Error, Result};
use crate::polyring::Polynomial;
use crate::root_system::{RootSystem, SimpleWord};
use crate::scalar::Scalar;

/// An equivariant class, in coordinates on the basis `{σ̂_ε}` with
/// coefficients in `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohClass<C> {
    word: BsWord,
    coords: BTreeMap<Gallery, Polynomial<C>>,
}

impl<C: Scalar> CohClass<C> {
    pub fn zero(word: &BsWord) -> Self {
        Self { word: word.clone(), coords: BTreeMap::new() }
    }

    /// `σ̂_ε`.
    pub fn basis(word: &BsWord, e: Gallery) -> Result<Self> {
        Self::from_coords(word, [(e, Polynomial::one(word.rank()))])
    }

    /// The unit class `σ̂_{0…0}`.
    pub fn unit(word: &BsWord) -> Self {
        Self::basis(word, Gallery::zero(word.len())).expect("zero gallery fits its word")
    }

    pub fn from_coords(word: &BsWord, coords: impl IntoIterator<Item = (Gallery, Polynomial<C>)>) -> Result<Self> {
        let mut out = Self::zero(word);
        for (e, p) in coords {
            word.check_gallery(&e)?;
            if p.rank() != word.rank() {
                return Err(Error::RankMismatch { expected: word.rank(), found: p.rank() });
            }
            out.add_term(e, &p);
        }
        Ok(out)
    }

    fn add_term(&mut self, e: Gallery, p: &Polynomial<C>) {
        if p.is_zero() {
            return;
        }
        let slot = self.coords.entry(e).or_insert_with(|| Polynomial::zero(p.rank()));
        *slot += p;
        if slot.is_zero() {
            self.coords.remove(&e);
        }
    }

    pub fn word(&self) -> &BsWord {
        &self.word
    }

    pub fn coords(&self) -> &BTreeMap<Gallery, Polynomial<C>> {
        &self.coords
    }

    pub fn coefficient(&self, e: &Gallery) -> Polynomial<C> {
        self.coords.get(e).cloned().unwrap_or_else(|| Polynomial::zero(self.word.rank()))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// S-module action.
    pub fn scale(&self, f: &Polynomial<C>) -> Self {
        let mut out = Self::zero(&self.word);
        for (e, p) in &self.coords {
            out.add_term(*e, &(p * f));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.word != other.word {
            return Err(Error::WordMismatch);
        }
        let mut out = self.clone();
        for (e, p) in &other.coords {
            out.add_term(*e, p);
        }
        Ok(out)
    }

    /// `i_T^*(c)(ε') = Σ_ε c[ε] σ_ε(ε')`.
    pub fn restrict_at(&self, at: &Gallery) -> Result<Polynomial<C>> {
        self.word.check_gallery(at)?;
        let alphas = self.word.alpha_ints(at);
        Ok(self.restrict_with(at, &alphas))
    }

    pub(crate) fn restrict_with(&self, at: &Gallery, alphas: &[Vec<i64>]) -> Polynomial<C> {
        let mut out = Polynomial::zero(self.word.rank());
        for (e, coeff) in &self.coords {
            if e.leq_unchecked(at) {
                out += &(coeff * &super::ops::product_of_alphas(self.word.rank(), e, alphas));
            }
        }
        out
    }

    /// The lazily evaluated restriction function of this class.
    pub fn restriction(&self) -> RestrictionFn<C> {
        let class = self.clone();
        RestrictionFn::from_fn(&self.word, move |e| class.restrict_with(&e, &class.word.alpha_ints(&e)))
    }

    pub fn to_json(&self) -> CohClassJson {
        CohClassJson {
            word: self.word.letters().to_vec(),
            coords: self.coords.iter().map(|(e, p)| (e.to_string(), p.to_string())).collect(),
        }
    }

    /// Reads `{"word": [...], "coords": {"101": "<polynomial>"}}`. Extra
    /// fields are ignored.
    pub fn from_json(rs: Arc<RootSystem>, text: &str, cap: usize) -> Result<Self> {
        let raw: CohClassJson = serde_json::from_str(text).map_err(|e| Error::Parse(format!("class JSON: {e}")))?;
        let word = BsWord::with_cap(rs, &SimpleWord::new(raw.word), cap)?;
        let coords = raw
            .coords
            .iter()
            .map(|(e, p)| Ok((Gallery::parse(e)?, Polynomial::parse(word.rank(), p)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_coords(&word, coords)
    }
}

/// Serialized form of a [`CohClass`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohClassJson {
    pub word: Vec<usize>,
    pub coords: BTreeMap<String, String>,
}

/// `001: a1, 101: -2, 011: 1`, or `0`.
impl<C: Scalar> fmt::Display for CohClass<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coords.iter().map(|(e, p)| format!("{e}: {p}")).collect();
        f.write_str(&parts.join(", "))
    }
}

type Source<C> = Arc<dyn Fn(Gallery) -> Polynomial<C> + Send + Sync>;

/// A function `E → S`, evaluated on demand and memoized. Safe to share
/// across threads.
pub struct RestrictionFn<C> {
    word: BsWord,
    source: Source<C>,
    memo: RwLock<HashMap<Gallery, Polynomial<C>>>,
}

impl<C: Scalar> RestrictionFn<C> {
    pub fn from_fn(word: &BsWord, f: impl Fn(Gallery) -> Polynomial<C> + Send + Sync + 'static) -> Self {
        Self { word: word.clone(), source: Arc::new(f), memo: RwLock::new(HashMap::new()) }
    }

    /// A function given by explicit values; galleries not listed map to 0.
    pub fn from_values(word: &BsWord, values: impl IntoIterator<Item = (Gallery, Polynomial<C>)>) -> Result<Self> {
        let mut table = HashMap::new();
        for (e, p) in values {
            word.check_gallery(&e)?;
            if p.rank() != word.rank() {
                return Err(Error::RankMismatch { expected: word.rank(), found: p.rank() });
            }
            table.insert(e, p);
        }
        let rank = word.rank();
        Ok(Self::from_fn(word, move |e| table.get(&e).cloned().unwrap_or_else(|| Polynomial::zero(rank))))
    }

    /// Pointwise product, the ring structure of `F(E; S)`.
    pub fn pointwise_product(&self, other: &Self) -> Result<Self> {
        if self.word != other.word {
            return Err(Error::WordMismatch);
        }
        let (a, b) = (self.source.clone(), other.source.clone());
        Ok(Self::from_fn(&self.word, move |e| &a(e) * &b(e)))
    }

    pub fn word(&self) -> &BsWord {
        &self.word
    }

    pub fn value(&self, e: &Gallery) -> Result<Polynomial<C>> {
        self.word.check_gallery(e)?;
        if let Some(p) = self.memo.read().expect("memo lock poisoned").get(e) {
            return Ok(p.clone());
        }
        let p = (self.source)(*e);
        self.memo.write().expect("memo lock poisoned").insert(*e, p.clone());
        Ok(p)
    }

    /// All `2^N` values in canonical gallery order.
    pub fn materialize(&self) -> Vec<(Gallery, Polynomial<C>)> {
        self.word
            .galleries()
            .into_iter()
            .map(|e| {
                let p = self.value(&e).expect("gallery from own word");
                (e, p)
            })
            .collect()
    }
}

impl<C: Scalar> Clone for RestrictionFn<C> {
    fn clone(&self) -> Self {
        let memo = self.memo.read().expect("memo lock poisoned").clone();
        Self { word: self.word.clone(), source: self.source.clone(), memo: RwLock::new(memo) }
    }
}

impl<C: Scalar> fmt::Debug for RestrictionFn<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RestrictionFn").field("word", &self.word).finish_non_exhaustive()
    }
}
