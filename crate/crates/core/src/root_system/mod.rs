//! Finite-type root data: Cartan matrices, simple reflections, positive
//! roots, and Weyl group elements with lengths and reduced words.
//!
//! Conventions: the Cartan matrix `A` satisfies `r_i(λ) = λ - ⟨λ, α_i^∨⟩ α_i`
//! with `⟨λ, α_i^∨⟩ = Σ_k λ_k A[i][k]`. Indices in the public API are
//! 1-based.

mod weight;
mod weyl;

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use weight::Weight;
pub use weyl::WeylElement;

/// Closure size above which a Cartan matrix is rejected as not finite type.
pub const MAX_POSITIVE_ROOTS: usize = 10_000;

/// Raw Cartan data, as read from a built-in label or a JSON file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub matrix: Vec<Vec<i64>>,
}

impl CartanSpec {
    pub fn new(label: Option<String>, matrix: Vec<Vec<i64>>) -> Self {
        Self { label, matrix }
    }

    /// Bourbaki-numbered Cartan matrix for one of the built-in labels
    /// `A1..A4, B2, B3, C3, D4, G2`.
    pub fn builtin(label: &str) -> Result<Self> {
        let matrix: Vec<Vec<i64>> = match label {
            "A1" => vec![vec![2]],
            "A2" => type_a(2),
            "A3" => type_a(3),
            "A4" => type_a(4),
            // α1 long, α2 short.
            "B2" => vec![vec![2, -1], vec![-2, 2]],
            "B3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]],
            "C3" => vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]],
            "D4" => vec![vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]],
            // α1 short, α2 long.
            "G2" => vec![vec![2, -3], vec![-1, 2]],
            other => {
                return Err(Error::InvalidCartan(format!(
                    "unknown type label {other:?} (known: A1 A2 A3 A4 B2 B3 C3 D4 G2)"
                )))
            }
        };
        Ok(Self { label: Some(label.to_string()), matrix })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("Cartan JSON: {e}")))
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn validate(&self) -> Result<()> {
        let r = self.matrix.len();
        if r == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != r {
                return Err(Error::InvalidCartan(format!("row {} has {} entries, expected {r}", i + 1, row.len())));
            }
        }
        for i in 0..r {
            if self.matrix[i][i] != 2 {
                return Err(Error::InvalidCartan(format!(
                    "diagonal entry A[{0}][{0}] = {1}, expected 2",
                    i + 1,
                    self.matrix[i][i]
                )));
            }
            for j in 0..r {
                if i == j {
                    continue;
                }
                let a = self.matrix[i][j];
                if a > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry A[{}][{}] = {a} is positive",
                        i + 1,
                        j + 1
                    )));
                }
                if (a == 0) != (self.matrix[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "A[{0}][{1}] and A[{1}][{0}] must vanish together",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

fn type_a(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// A word in the simple reflections, letters 1-based.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SimpleWord(pub Vec<usize>);

impl SimpleWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }
}

impl From<Vec<usize>> for SimpleWord {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

/// Letters separated by commas and/or whitespace; the empty string is the
/// empty word.
impl FromStr for SimpleWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad word letter {t:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(SimpleWord)
    }
}

impl fmt::Display for SimpleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Validated finite-type root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: CartanSpec,
    rank: usize,
    positive: Vec<Vec<i64>>,
    positive_set: HashSet<Vec<i64>>,
    reflections: Vec<WeylElement>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.spec.matrix == other.spec.matrix
    }
}

impl Eq for RootSystem {}

impl RootSystem {
    pub fn new(spec: CartanSpec) -> Result<Self> {
        spec.validate()?;
        let rank = spec.rank();
        let positive = positive_root_closure(&spec.matrix)?;
        let positive_set = positive.iter().cloned().collect();
        let reflections = (0..rank)
            .map(|i| {
                let mut m = WeylElement::identity(rank).rows().concat();
                for j in 0..rank {
                    m[i * rank + j] -= spec.matrix[i][j];
                }
                WeylElement::from_matrix(rank, m)
            })
            .collect();
        Ok(Self { spec, rank, positive, positive_set, reflections })
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Self::new(CartanSpec::builtin(label)?)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> Option<&str> {
        self.spec.label.as_deref()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.spec.matrix
    }

    pub fn spec(&self) -> &CartanSpec {
        &self.spec
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i >= 1 && i <= self.rank {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, bound: self.rank })
        }
    }

    pub fn check_word(&self, word: &SimpleWord) -> Result<()> {
        word.letters().iter().try_for_each(|&i| self.check_index(i))
    }

    pub fn simple_root<C: Scalar>(&self, i: usize) -> Result<Weight<C>> {
        self.check_index(i)?;
        Ok(Weight::simple_root(self.rank, i))
    }

    /// Positive roots ordered by height, then by descending coordinates.
    pub fn positive_roots<C: Scalar>(&self) -> Vec<Weight<C>> {
        self.positive.iter().map(|r| Weight::from_ints(r)).collect()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive.len()
    }

    pub fn is_positive_root<C: Scalar>(&self, lam: &Weight<C>) -> bool {
        lam.to_ints().is_some_and(|v| self.positive_set.contains(&v))
    }

    pub fn is_root<C: Scalar>(&self, lam: &Weight<C>) -> bool {
        self.is_positive_root(lam) || self.is_positive_root(&-lam.clone())
    }

    /// `⟨λ, α_i^∨⟩`, the coefficient `c` with `r_i(λ) = λ - c α_i`.
    pub fn cartan_pairing<C: Scalar>(&self, lam: &Weight<C>, i: usize) -> Result<C> {
        self.check_index(i)?;
        self.check_rank(lam.rank())?;
        Ok(self.pairing_unchecked(lam, i - 1))
    }

    fn pairing_unchecked<C: Scalar>(&self, lam: &Weight<C>, i0: usize) -> C {
        lam.coords().iter().zip(&self.spec.matrix[i0]).fold(C::zero(), |acc, (c, &a)| acc + c.clone() * C::from_int(a))
    }

    pub(crate) fn pairing_ints(&self, lam: &[i64], i: usize) -> i64 {
        lam.iter().zip(&self.spec.matrix[i - 1]).map(|(x, a)| x * a).sum()
    }

    pub fn reflect<C: Scalar>(&self, i: usize, lam: &Weight<C>) -> Result<Weight<C>> {
        let c = self.cartan_pairing(lam, i)?;
        let mut coords = lam.coords().to_vec();
        coords[i - 1] = coords[i - 1].clone() - c;
        Ok(Weight::new(coords))
    }

    /// The simple reflection `r_i` as a group element.
    pub fn reflection(&self, i: usize) -> Result<&WeylElement> {
        self.check_index(i)?;
        Ok(&self.reflections[i - 1])
    }

    pub(crate) fn reflection_unchecked(&self, i: usize) -> &WeylElement {
        &self.reflections[i - 1]
    }

    /// `r_{i_1} ∘ … ∘ r_{i_l}`.
    pub fn weyl_from_word(&self, word: &SimpleWord) -> Result<WeylElement> {
        self.check_word(word)?;
        Ok(word.letters().iter().fold(WeylElement::identity(self.rank), |acc, &i| &acc * &self.reflections[i - 1]))
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive.iter().filter(|beta| is_negative(&w.apply_ints(beta))).count()
    }

    pub fn is_reduced(&self, word: &SimpleWord) -> Result<bool> {
        let w = self.weyl_from_word(word)?;
        Ok(self.length(&w) == word.len())
    }

    /// Whether `w(α_i)` is negative, i.e. `ℓ(w r_i) < ℓ(w)`.
    pub fn is_right_descent(&self, w: &WeylElement, i: usize) -> bool {
        let mut e = vec![0; self.rank];
        e[i - 1] = 1;
        is_negative(&w.apply_ints(&e))
    }

    /// A reduced word for `w`, peeling off the smallest right descent each
    /// step.
    pub fn reduced_word(&self, w: &WeylElement) -> SimpleWord {
        let mut letters = Vec::new();
        let mut cur = w.clone();
        while let Some(i) = (1..=self.rank).find(|&i| self.is_right_descent(&cur, i)) {
            letters.push(i);
            cur = &cur * &self.reflections[i - 1];
        }
        letters.reverse();
        SimpleWord(letters)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        self.weyl_from_word(&self.reduced_word(w).reversed()).expect("reduced word letters are in range")
    }

    /// The longest element `w₀`.
    pub fn longest_element(&self) -> WeylElement {
        let mut w = WeylElement::identity(self.rank);
        while let Some(i) = (1..=self.rank).find(|&i| !self.is_right_descent(&w, i)) {
            w = &w * &self.reflections[i - 1];
        }
        w
    }

    /// A reduced word for `w₀`: starting from `w₀`, repeatedly take the
    /// smallest `i` with `w⁻¹(α_i) < 0` and replace `w` by `r_i w`.
    pub fn longest_word(&self) -> SimpleWord {
        let mut inv = self.inverse(&self.longest_element());
        let mut letters = Vec::with_capacity(self.positive.len());
        while let Some(i) = (1..=self.rank).find(|&i| self.is_right_descent(&inv, i)) {
            letters.push(i);
            inv = &inv * &self.reflections[i - 1];
        }
        SimpleWord(letters)
    }

    fn check_rank(&self, found: usize) -> Result<()> {
        if found == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank, found })
        }
    }
}

fn is_negative(v: &[i64]) -> bool {
    v.iter().any(|&x| x < 0)
}

/// Closes the simple roots under simple reflections, keeping nonnegative
/// vectors. Finite type iff this terminates, which we detect by a size bound.
fn positive_root_closure(matrix: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let r = matrix.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0; r];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..r {
            let mut pairing: i64 = 0;
            for (x, a) in beta.iter().zip(&matrix[i]) {
                pairing = x
                    .checked_mul(*a)
                    .and_then(|t| pairing.checked_add(t))
                    .ok_or(Error::NotFiniteType(MAX_POSITIVE_ROOTS))?;
            }
            if pairing == 0 {
                continue;
            }
            let mut image = beta.clone();
            image[i] = image[i].checked_sub(pairing).ok_or(Error::NotFiniteType(MAX_POSITIVE_ROOTS))?;
            if image.iter().all(|&x| x >= 0) && image.iter().any(|&x| x > 0) && !seen.contains(&image) {
                if seen.len() >= MAX_POSITIVE_ROOTS {
                    return Err(Error::NotFiniteType(MAX_POSITIVE_ROOTS));
                }
                seen.insert(image.clone());
                queue.push_back(image);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    Ok(roots)
}
