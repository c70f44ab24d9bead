//! Ordinary cohomology of the Bott–Samelson variety: the basis `{x_ε}`,
//! its presentation by degree-2 generators `x_i` with relations
//! `x_i² + Σ_{j<i} a_{j,i} x_i x_j = 0`, and evaluation at the origin.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde_json::{json, Value};

use crate::bott_samelson::{BsWord, CohClass, Gallery};
use crate::display::write_sum;
use crate::error::{Error, Result};
use crate::root_system::Weight;
use crate::scalar::Scalar;

/// `x_i² + Σ_j a_{j,i} x_i x_j = 0`, with only the nonzero `a_{j,i}` kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation<C> {
    pub index: usize,
    pub terms: Vec<(usize, C)>,
}

impl<C: Scalar> fmt::Display for Relation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = C::one();
        let i = self.index;
        let terms =
            std::iter::once((&one, format!("x{i}^2"))).chain(self.terms.iter().map(|(j, a)| (a, format!("x{j}*x{i}"))));
        write_sum(f, terms)?;
        f.write_str(" = 0")
    }
}

/// `a_{j,i} = n(μ_j, μ_i) = ⟨μ_i, μ_j^∨⟩` for `j < i`.
fn cartan_coefficients(word: &BsWord, i: usize) -> Vec<(usize, i64)> {
    let rs = word.root_system();
    let mut mu_i = vec![0; word.rank()];
    mu_i[word.letter(i) - 1] = 1;
    (1..i).map(|j| (j, rs.pairing_ints(&mu_i, word.letter(j)))).filter(|(_, a)| *a != 0).collect()
}

pub fn relations<C: Scalar>(word: &BsWord) -> Vec<Relation<C>> {
    (1..=word.len())
        .map(|i| Relation {
            index: i,
            terms: cartan_coefficients(word, i).into_iter().map(|(j, a)| (j, C::from_int(a))).collect(),
        })
        .collect()
}

/// A class in `H*(Γ)` on the square-free basis `{x_ε}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryClass<C> {
    word: BsWord,
    coords: BTreeMap<Gallery, C>,
}

impl<C: Scalar> OrdinaryClass<C> {
    pub fn zero(word: &BsWord) -> Self {
        Self { word: word.clone(), coords: BTreeMap::new() }
    }

    /// `x_ε`.
    pub fn basis(word: &BsWord, e: Gallery) -> Result<Self> {
        Self::from_coords(word, [(e, C::one())])
    }

    pub fn from_coords(word: &BsWord, coords: impl IntoIterator<Item = (Gallery, C)>) -> Result<Self> {
        let mut out = Self::zero(word);
        for (e, c) in coords {
            word.check_gallery(&e)?;
            out.add_term(e, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, e: Gallery, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.coords.entry(e).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.coords.remove(&e);
        }
    }

    pub fn word(&self) -> &BsWord {
        &self.word
    }

    pub fn coords(&self) -> &BTreeMap<Gallery, C> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// `{"word": [...], "coords": {"110": -2}}`; non-integer coefficients
    /// are written as strings.
    pub fn to_json(&self) -> Value {
        let coords: serde_json::Map<String, Value> = self
            .coords
            .iter()
            .map(|(e, c)| {
                let v = match c.to_int() {
                    Some(n) => json!(n),
                    None => json!(c.to_string()),
                };
                (e.to_string(), v)
            })
            .collect();
        json!({ "word": self.word.letters(), "coords": coords })
    }
}

/// `-2*x_{101} + x_{011}`, or `0`.
impl<C: Scalar> fmt::Display for OrdinaryClass<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.coords.iter().map(|(e, c)| (c, format!("x_{{{e}}}"))))
    }
}

/// Rewrites `x^exps` to square-free normal form. `pick` chooses which
/// squared index to eliminate among the candidates (increasing order).
pub(crate) fn normal_form<C: Scalar>(
    word: &BsWord,
    exps: Vec<u32>,
    coeff: C,
    mut pick: impl FnMut(&[usize]) -> usize,
) -> BTreeMap<Gallery, C> {
    let n = word.len();
    let relations: Vec<Vec<(usize, i64)>> = (1..=n).map(|i| cartan_coefficients(word, i)).collect();
    let mut pending: HashMap<Vec<u32>, C> = HashMap::from([(exps, coeff)]);
    let mut out: BTreeMap<Gallery, C> = BTreeMap::new();
    while let Some(key) = pending.keys().next().cloned() {
        let c = pending.remove(&key).expect("key just read");
        if c.is_zero() {
            continue;
        }
        let squared: Vec<usize> = (1..=n).filter(|&i| key[i - 1] >= 2).collect();
        if squared.is_empty() {
            let e = Gallery::from_positions(n, (1..=n).filter(|&i| key[i - 1] == 1));
            let slot = out.entry(e).or_insert_with(C::zero);
            *slot = slot.clone() + c;
            continue;
        }
        let i = pick(&squared);
        // x_i^2 -> -Σ_j a_{j,i} x_i x_j
        for &(j, a) in &relations[i - 1] {
            let mut next = key.clone();
            next[i - 1] -= 1;
            next[j - 1] += 1;
            let slot = pending.entry(next).or_insert_with(C::zero);
            *slot = slot.clone() - c.clone() * C::from_int(a);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Product in `H*(Γ)`; squares are eliminated largest index first, which
/// strictly lowers the exponent vector read from the top index down.
pub fn ordinary_multiply<C: Scalar>(a: &OrdinaryClass<C>, b: &OrdinaryClass<C>) -> Result<OrdinaryClass<C>> {
    if a.word != b.word {
        return Err(Error::WordMismatch);
    }
    let n = a.word.len();
    let mut out = OrdinaryClass::zero(&a.word);
    for (ea, ca) in &a.coords {
        for (eb, cb) in &b.coords {
            let exps: Vec<u32> = (1..=n).map(|i| ea.contains(i) as u32 + eb.contains(i) as u32).collect();
            let reduced = normal_form(&a.word, exps, ca.clone() * cb.clone(), |s| *s.last().unwrap());
            for (e, c) in reduced {
                out.add_term(e, c);
            }
        }
    }
    Ok(out)
}

/// `f σ̂_ε ↦ f(0) x_ε`.
pub fn evaluate_at_origin<C: Scalar>(c: &CohClass<C>) -> OrdinaryClass<C> {
    let mut out = OrdinaryClass::zero(c.word());
    for (e, p) in c.coords() {
        out.add_term(*e, p.constant_term());
    }
    out
}

/// `a_{j,i}` for positions `j, i` of the word.
pub fn relation_coefficient<C: Scalar>(word: &BsWord, j: usize, i: usize) -> Result<C> {
    word.check_position(i)?;
    word.check_position(j)?;
    let mu_i: Weight<C> = word.root_system().simple_root(word.letter(i))?;
    word.root_system().cartan_pairing(&mu_i, word.letter(j))
}
