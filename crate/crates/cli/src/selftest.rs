//! The acceptance criteria, shared by `bseq selftest` and the acceptance
//! test target. Each criterion is exact; randomized parts draw from a
//! ChaCha stream keyed by the seed.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use bseq_core::bott_samelson::{expand, integrate, multiply, multiply_generator};
use bseq_core::ordinary::{evaluate_at_origin, ordinary_multiply};
use bseq_core::schubert::{billey, check_billey_identity, BilleyQuery};
use bseq_core::{BsWord, Class, Gallery, Monomial, Poly, Rational, RootSystem, SimpleWord, WeylElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::commands::{relation_lines, table_lines};

pub const GOLDEN_A2: &str = include_str!("../tests/golden/a2_word121.txt");

pub const DELTA_TYPES: [&str; 5] = ["A1", "A2", "B2", "G2", "A3"];
pub const RANDOM_WORDS_PER_TYPE: usize = 20;
pub const RANDOM_CLASSES: usize = 200;

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {} {}: {} ({:.2}s)", self.id, self.name, self.detail, self.elapsed.as_secs_f64())
    }
}

/// Counts checks and keeps the first disagreement.
#[derive(Debug, Default)]
struct Tally {
    checked: usize,
    failure: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failure = self.failure.or(other.failure);
        self
    }

    fn finish(self, id: u8, name: &'static str, unit: &str, start: Instant) -> CriterionReport {
        let passed = self.failure.is_none() && self.checked > 0;
        let detail = match self.failure {
            Some(f) => format!("{} {unit} checked, first failure: {f}", self.checked),
            None => format!("{} {unit} exact", self.checked),
        };
        CriterionReport { id, name, passed, detail, elapsed: start.elapsed() }
    }
}

fn root_system(label: &str) -> Arc<RootSystem> {
    Arc::new(RootSystem::from_label(label).expect("built-in label"))
}

fn bs_word(rs: &Arc<RootSystem>, letters: &SimpleWord) -> BsWord {
    BsWord::new(rs.clone(), letters).expect("valid word")
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A uniformly drawn word of length `2..=max_len` that is not reduced.
pub fn random_nonreduced_word(rs: &RootSystem, rng: &mut impl Rng, max_len: usize) -> SimpleWord {
    loop {
        let len = rng.gen_range(2..=max_len);
        let word = SimpleWord::new((0..len).map(|_| rng.gen_range(1..=rs.rank())).collect());
        if !rs.is_reduced(&word).expect("letters in range") {
            return word;
        }
    }
}

/// For each type: the longest word, then the seeded non-reduced words.
pub fn delta_word_set(seed: u64) -> Vec<BsWord> {
    let mut out = Vec::new();
    for (k, label) in DELTA_TYPES.iter().enumerate() {
        let rs = root_system(label);
        out.push(bs_word(&rs, &rs.longest_word()));
        let mut rng = rng_for(seed, k as u64);
        for _ in 0..RANDOM_WORDS_PER_TYPE {
            out.push(bs_word(&rs, &random_nonreduced_word(&rs, &mut rng, 5)));
        }
    }
    out
}

fn word_name(word: &BsWord) -> String {
    format!("{} ({})", word.root_system().label().unwrap_or("?"), word.simple_word())
}

fn delta_tally(word: &BsWord) -> Tally {
    let galleries = word.galleries();
    galleries
        .par_iter()
        .map(|e| {
            let mut t = Tally::default();
            let class = Class::basis(word, *e).expect("gallery of word");
            for f in &galleries {
                let expected = if e == f { Poly::one(word.rank()) } else { Poly::zero(word.rank()) };
                match integrate(word, f, &class) {
                    Ok(v) => t.record(v == expected, || format!("{} integral over {f} of {e} = {v}", word_name(word))),
                    Err(err) => t.record(false, || format!("{} {f} {e}: {err}", word_name(word))),
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge)
}

pub fn criterion_1(seed: u64) -> CriterionReport {
    let start = Instant::now();
    let tally = delta_word_set(seed).iter().map(delta_tally).fold(Tally::default(), Tally::merge);
    tally.finish(1, "delta integrals", "pairs", start)
}

fn generator_tally(word: &BsWord) -> Tally {
    let galleries = word.galleries();
    (1..=word.len())
        .into_par_iter()
        .map(|i| {
            let mut t = Tally::default();
            let generator = Class::basis(word, Gallery::unit(word.len(), i)).expect("unit gallery");
            for e in &galleries {
                let generic = multiply(&generator, &Class::basis(word, *e).expect("gallery of word"));
                let closed = multiply_generator::<Rational>(word, i, e);
                match (generic, closed) {
                    (Ok(g), Ok(c)) => {
                        t.record(g == c, || format!("{} generator {i} times {e}: {g} vs {c}", word_name(word)))
                    }
                    (g, c) => t.record(false, || format!("{} generator {i} times {e}: {g:?} {c:?}", word_name(word))),
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge)
}

pub fn criterion_2(seed: u64) -> CriterionReport {
    let start = Instant::now();
    let tally = delta_word_set(seed).iter().map(generator_tally).fold(Tally::default(), Tally::merge);
    tally.finish(2, "generator products", "products", start)
}

pub fn criterion_3() -> CriterionReport {
    let start = Instant::now();
    let mut tally = Tally::default();
    for label in ["A1", "A2", "B2"] {
        let rs = root_system(label);
        let word = bs_word(&rs, &rs.longest_word());
        let reduced: Vec<(Gallery, WeylElement)> = word
            .galleries()
            .into_iter()
            .map(|e| (e, word.v(&e).expect("gallery of word")))
            .filter(|(e, v)| rs.length(v) == e.length())
            .collect();
        let mut elements: Vec<WeylElement> = Vec::new();
        for (_, v) in &reduced {
            if !elements.contains(v) {
                elements.push(v.clone());
            }
        }
        let part = elements
            .par_iter()
            .map(|w| {
                let mut t = Tally::default();
                for (e, _) in &reduced {
                    let ok = check_billey_identity::<Rational>(&word, w, e);
                    t.record(matches!(ok, Ok(true)), || format!("{label} w={} at {e}: {ok:?}", rs.reduced_word(w)));
                }
                t
            })
            .reduce(Tally::default, Tally::merge);
        tally = tally.merge(part);
    }
    tally.finish(3, "billey consistency", "(w, gallery) pairs", start)
}

/// Every element of W with all of its reduced words, by exhaustive
/// enumeration of words up to the length of `w₀`.
pub fn reduced_words_by_element(rs: &RootSystem) -> Vec<(WeylElement, Vec<SimpleWord>)> {
    let mut out: Vec<(WeylElement, Vec<SimpleWord>)> = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for len in 0..=rs.num_positive_roots() {
        for letters in &layer {
            let word = SimpleWord::new(letters.clone());
            if !rs.is_reduced(&word).expect("letters in range") {
                continue;
            }
            let g = rs.weyl_from_word(&word).expect("letters in range");
            match out.iter_mut().find(|(h, _)| *h == g) {
                Some((_, words)) => words.push(word),
                None => out.push((g, vec![word])),
            }
        }
        if len < rs.num_positive_roots() {
            layer = layer
                .iter()
                .flat_map(|w| {
                    (1..=rs.rank()).map(move |i| {
                        let mut w = w.clone();
                        w.push(i);
                        w
                    })
                })
                .collect();
        }
    }
    out
}

pub fn criterion_4() -> CriterionReport {
    let start = Instant::now();
    let mut tally = Tally::default();
    for label in ["A2", "B2"] {
        let rs = root_system(label);
        let all = reduced_words_by_element(&rs);
        for (_, v_words) in &all {
            for (w, _) in &all {
                let values: Vec<Poly> = v_words
                    .iter()
                    .map(|v| billey(&BilleyQuery::new(&rs, w.clone(), v.clone()).expect("reduced word")))
                    .collect();
                for (v, value) in v_words.iter().zip(&values).skip(1) {
                    tally.record(*value == values[0], || {
                        format!("{label} w={}: v words {} and {v} differ", rs.reduced_word(w), v_words[0])
                    });
                }
            }
        }
    }
    tally.finish(4, "reduced-word independence", "word pairs", start)
}

pub fn criterion_5() -> CriterionReport {
    let start = Instant::now();
    let mut tally = Tally::default();
    for label in ["A2", "B2"] {
        let rs = root_system(label);
        let longest = rs.longest_word();
        for n in 1..=longest.len().min(4) {
            let word = bs_word(&rs, &SimpleWord::new(longest.letters()[..n].to_vec()));
            let galleries = word.galleries();
            for a in &galleries {
                for b in &galleries {
                    let ca = Class::basis(&word, *a).expect("gallery of word");
                    let cb = Class::basis(&word, *b).expect("gallery of word");
                    let lhs = multiply(&ca, &cb).map(|p| evaluate_at_origin(&p));
                    let rhs = ordinary_multiply(&evaluate_at_origin(&ca), &evaluate_at_origin(&cb));
                    let ok = matches!((&lhs, &rhs), (Ok(l), Ok(r)) if l == r);
                    tally.record(ok, || format!("{} {a} * {b}: {lhs:?} vs {rhs:?}", word_name(&word)));
                }
            }
        }
    }
    tally.finish(5, "ring homomorphism", "pairs", start)
}

fn random_scalar(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-4i64..=4).into(), rng.gen_range(1i64..=3).into())
}

/// Degree at most 2 with small rational coefficients.
pub fn random_polynomial(rank: usize, rng: &mut impl Rng) -> Poly {
    let mut terms = BTreeMap::new();
    for _ in 0..rng.gen_range(0..=4) {
        let mut exps = vec![0u32; rank];
        for _ in 0..rng.gen_range(0..=2) {
            exps[rng.gen_range(0..rank)] += 1;
        }
        terms.insert(Monomial::from_exponents(exps), random_scalar(rng));
    }
    Poly::from_terms(rank, terms)
}

pub fn random_class(rng: &mut impl Rng) -> Class {
    let rs = root_system(DELTA_TYPES[rng.gen_range(0..DELTA_TYPES.len())]);
    let len = rng.gen_range(1..=5);
    let letters = SimpleWord::new((0..len).map(|_| rng.gen_range(1..=rs.rank())).collect());
    let word = bs_word(&rs, &letters);
    let mut coords = Vec::new();
    for e in word.galleries() {
        if rng.gen_bool(0.5) {
            coords.push((e, random_polynomial(rs.rank(), rng)));
        }
    }
    Class::from_coords(&word, coords).expect("galleries of word")
}

pub fn criterion_6(seed: u64) -> CriterionReport {
    let start = Instant::now();
    let mut rng = rng_for(seed, 100);
    let classes: Vec<Class> = (0..RANDOM_CLASSES).map(|_| random_class(&mut rng)).collect();
    let tally = classes
        .par_iter()
        .map(|c| {
            let mut t = Tally::default();
            let back = expand(&c.restriction());
            t.record(back.as_ref() == Ok(c), || format!("{} {c}: {back:?}", word_name(c.word())));
            t
        })
        .reduce(Tally::default, Tally::merge);
    tally.finish(6, "expansion roundtrip", "classes", start)
}

/// The A2, word (1,2,1) report compared against [`GOLDEN_A2`].
pub fn golden_a2() -> bseq_core::Result<String> {
    let rs = root_system("A2");
    let word = BsWord::new(rs.clone(), &"1,2,1".parse()?)?;
    let product = |l: &str, r: &str| -> bseq_core::Result<String> {
        let a = Class::basis(&word, Gallery::parse(l)?)?;
        let b = Class::basis(&word, Gallery::parse(r)?)?;
        Ok(multiply(&a, &b)?.to_string())
    };
    let w = rs.weyl_from_word(&"1".parse()?)?;
    let value: Poly = billey(&BilleyQuery::new(&rs, w, "1,2,1".parse()?)?);
    let mut out = vec!["# table".to_owned()];
    out.extend(table_lines(&word));
    out.push("# relations".into());
    out.extend(relation_lines(&word));
    out.push("# product 001 001".into());
    out.push(product("001", "001")?);
    out.push("# product 100 001".into());
    out.push(product("100", "001")?);
    out.push("# billey w=1 v=1 2 1".into());
    out.push(value.to_string());
    Ok(out.into_iter().map(|l| l + "\n").collect())
}

pub fn criterion_7() -> CriterionReport {
    let start = Instant::now();
    let mut tally = Tally::default();
    match golden_a2() {
        Ok(text) => {
            let first_diff = text.lines().zip(GOLDEN_A2.lines()).position(|(a, b)| a != b);
            tally.record(text == GOLDEN_A2, || match first_diff {
                Some(k) => format!("line {} differs", k + 1),
                None => "line count differs".into(),
            });
        }
        Err(e) => tally.record(false, || e.to_string()),
    }
    tally.finish(7, "A2 golden file", "files", start)
}

pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    vec![
        criterion_1(seed),
        criterion_2(seed),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(seed),
        criterion_7(),
    ]
}
