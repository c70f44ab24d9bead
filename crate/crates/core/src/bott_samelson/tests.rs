use std::sync::Arc;

use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::error::Error;
use crate::polyring::{Monomial, Polynomial};
use crate::root_system::{RootSystem, SimpleWord, Weight, WeylElement};
use crate::scalar::Scalar;

type P = Polynomial<BigRational>;
type W = Weight<BigRational>;
type Class = CohClass<BigRational>;

fn bs(label: &str, letters: &[usize]) -> BsWord {
    let rs = Arc::new(RootSystem::from_label(label).unwrap());
    BsWord::new(rs, &SimpleWord::new(letters.to_vec())).unwrap()
}

fn a2_121() -> BsWord {
    bs("A2", &[1, 2, 1])
}

fn g(s: &str) -> Gallery {
    Gallery::parse(s).unwrap()
}

fn p(word: &BsWord, s: &str) -> P {
    P::parse(word.rank(), s).unwrap()
}

fn class(word: &BsWord, coords: &[(&str, &str)]) -> Class {
    Class::from_coords(word, coords.iter().map(|(e, q)| (g(e), p(word, q)))).unwrap()
}

/// Direct oracle: `α_i(ε') = r_{μ_{k_1}} ⋯ r_{μ_{k_m}}(μ_i)` over
/// the selected `k < i`, evaluated with `reflect` alone, and the product
/// over `π₊(ε)`.
fn sigma_oracle(word: &BsWord, e: &Gallery, at: &Gallery) -> P {
    let rs = word.root_system();
    if !(1..=word.len()).all(|i| !e.contains(i) || at.contains(i)) {
        return P::zero(word.rank());
    }
    let mut out = P::one(word.rank());
    for i in 1..=word.len() {
        if !e.contains(i) {
            continue;
        }
        let mut weight: W = rs.simple_root(word.letter(i)).unwrap();
        for k in (1..i).rev() {
            if at.contains(k) {
                weight = rs.reflect(word.letter(k), &weight).unwrap();
            }
        }
        out = &out * &P::from_weight(&weight);
    }
    out
}

fn test_words() -> Vec<BsWord> {
    vec![
        bs("A1", &[1]),
        bs("A1", &[1, 1, 1]),
        bs("A2", &[1, 2, 1]),
        bs("A2", &[2, 1, 1, 2]),
        bs("B2", &[1, 2, 1, 2]),
        bs("B2", &[2, 2, 1, 2, 1]),
        bs("G2", &[1, 2, 1, 2]),
        bs("A3", &[2, 1, 3, 2]),
        bs("B3", &[3, 2, 3, 1, 2]),
    ]
}

#[test]
fn gallery_order_and_syntax() {
    assert!(g("000").leq(&g("101")).unwrap());
    assert!(g("100").leq(&g("110")).unwrap());
    assert!(!g("100").leq(&g("011")).unwrap());
    assert!(matches!(g("10").leq(&g("101")), Err(Error::LengthMismatch { .. })));
    assert!(gallery_leq(&g("000"), &g("000")).unwrap());
    assert_eq!(g("101").to_string(), "101");
    assert_eq!(g("101").plus().collect::<Vec<_>>(), [1, 3]);
    assert_eq!(g("101").minus().collect::<Vec<_>>(), [2]);
    assert_eq!(g("0110").length(), 2);
    assert!(Gallery::parse("10a").is_err());
    let order: Vec<String> = Gallery::all(3).iter().map(|e| e.to_string()).collect();
    assert_eq!(order, ["000", "100", "010", "001", "110", "101", "011", "111"]);
    let mut below: Vec<Gallery> = g("1011").below().collect();
    below.sort();
    assert_eq!(below.len(), 8);
    assert!(below.iter().all(|b| b.leq(&g("1011")).unwrap()));
}

#[test]
fn word_validation() {
    let rs = Arc::new(RootSystem::from_label("A2").unwrap());
    assert_eq!(BsWord::new(rs.clone(), &SimpleWord::empty()), Err(Error::EmptyWord));
    assert!(matches!(
        BsWord::new(rs.clone(), &SimpleWord::new(vec![1, 3])),
        Err(Error::IndexOutOfRange { index: 3, bound: 2 })
    ));
    let long = SimpleWord::new(vec![1; 21]);
    assert_eq!(BsWord::new(rs.clone(), &long), Err(Error::CapExceeded { len: 21, cap: 20 }));
    assert!(BsWord::with_cap(rs, &long, 24).is_ok());
}

#[test]
fn v_segment_examples() {
    let word = a2_121();
    let rs = word.root_system();
    let r1 = rs.reflection(1).unwrap();
    let r2 = rs.reflection(2).unwrap();
    for e in word.galleries() {
        assert!(v_segment(&word, &e, 3, 2).unwrap().is_identity());
        assert!(v_segment(&word, &e, 1, 0).unwrap().is_identity());
    }
    assert_eq!(v_segment(&word, &g("110"), 1, 3).unwrap(), r1 * r2);
    assert!(v_segment(&word, &g("101"), 1, 3).unwrap().is_identity());
    assert_eq!(word.v(&g("110")).unwrap(), r1 * r2);
    assert!(matches!(v_segment(&word, &g("110"), 1, 4), Err(Error::IndexOutOfRange { .. })));
    assert!(matches!(v_segment(&word, &g("11"), 1, 2), Err(Error::LengthMismatch { .. })));
}

#[test]
fn alpha_examples() {
    let word = a2_121();
    for e in word.galleries() {
        assert_eq!(alpha::<BigRational>(&word, &e, 1).unwrap(), W::from_ints(&[1, 0]));
    }
    assert_eq!(alpha::<BigRational>(&word, &g("111"), 3).unwrap(), W::from_ints(&[0, 1]));
    assert_eq!(alpha::<BigRational>(&word, &g("101"), 3).unwrap(), W::from_ints(&[-1, 0]));
    assert!(matches!(alpha::<BigRational>(&word, &g("101"), 4), Err(Error::IndexOutOfRange { .. })));
}

#[test]
fn sigma_examples() {
    let word = a2_121();
    for e in word.galleries() {
        assert_eq!(sigma::<BigRational>(&word, &g("000"), &e).unwrap(), P::one(2));
    }
    assert!(sigma::<BigRational>(&word, &g("100"), &g("011")).unwrap().is_zero());
    assert_eq!(sigma(&word, &g("111"), &g("111")).unwrap(), p(&word, "a1^2*a2 + a1*a2^2"));
    assert_eq!(sigma(&word, &g("101"), &g("101")).unwrap(), p(&word, "-a1^2"));
    assert!(matches!(sigma::<BigRational>(&word, &g("10"), &g("101")), Err(Error::LengthMismatch { .. })));
}

#[test]
fn sigma_matches_direct_oracle() {
    for word in test_words() {
        for e in word.galleries() {
            for at in word.galleries() {
                assert_eq!(sigma(&word, &e, &at).unwrap(), sigma_oracle(&word, &e, &at), "{word} {e} {at}");
            }
        }
    }
}

#[test]
fn sigma_over_integers_matches_rationals() {
    let word = bs("G2", &[1, 2, 1, 2, 1]);
    for e in word.galleries() {
        for at in word.galleries() {
            let big = sigma::<BigRational>(&word, &e, &at).unwrap();
            let int = sigma::<i64>(&word, &e, &at).unwrap();
            assert_eq!(big.to_string(), int.to_string());
        }
    }
}

#[test]
fn triangularity_and_homogeneity() {
    for word in test_words() {
        for e in word.galleries() {
            let diag = sigma::<BigRational>(&word, &e, &e).unwrap();
            assert!(!diag.is_zero());
            for at in word.galleries() {
                let s = sigma::<BigRational>(&word, &e, &at).unwrap();
                if !e.leq(&at).unwrap() {
                    assert!(s.is_zero());
                } else {
                    assert!(s.is_homogeneous());
                    assert_eq!(s.degree(), Some(e.length() as u32));
                }
            }
        }
    }
}

#[test]
fn restriction_table_agrees_with_sigma() {
    let word = bs("B2", &[1, 2, 1]);
    for (e, row) in restriction_table::<BigRational>(&word) {
        for (at, value) in word.galleries().iter().zip(row) {
            assert_eq!(value, sigma(&word, &e, at).unwrap());
        }
    }
}

#[test]
fn reduced_galleries_give_distinct_positive_roots() {
    for word in test_words() {
        let rs = word.root_system();
        for e in word.galleries() {
            if rs.length(&word.v(&e).unwrap()) != e.length() {
                continue;
            }
            let all: Vec<W> = alphas(&word, &e).unwrap();
            let selected: Vec<&W> = e.plus().map(|i| &all[i - 1]).collect();
            for (k, a) in selected.iter().enumerate() {
                assert!(rs.is_positive_root(*a), "{word} {e}: {a}");
                assert!(!selected[..k].contains(a));
            }
        }
    }
}

#[test]
fn expand_examples() {
    let word = a2_121();
    for e in word.galleries() {
        let f = RestrictionFn::from_fn(&word, move |at| sigma_oracle(&a2_121(), &e, &at));
        assert_eq!(expand(&f).unwrap(), Class::basis(&word, e).unwrap());
    }
    let square = RestrictionFn::from_fn(&word, |at| {
        let s = sigma_oracle(&a2_121(), &g("001"), &at);
        &s * &s
    });
    let expected = class(&word, &[("001", "a1"), ("101", "-2"), ("011", "1")]);
    assert_eq!(expand(&square).unwrap(), expected);
    // pointwise check of the frozen coordinates against the oracle table
    for at in word.galleries() {
        let s = sigma_oracle(&word, &g("001"), &at);
        let mut rhs = P::zero(2);
        for (e, coeff) in expected.coords() {
            rhs += &(coeff * &sigma_oracle(&word, e, &at));
        }
        assert_eq!(&s * &s, rhs, "{at}");
    }
    let one = RestrictionFn::from_fn(&word, |_| P::one(2));
    assert_eq!(expand(&one).unwrap(), Class::unit(&word));
}

#[test]
fn expand_rejects_functions_outside_the_span() {
    let word = a2_121();
    // constant 1 except at one point: not a restriction of any class
    let f = RestrictionFn::from_values(&word, [(g("100"), P::one(2))]).unwrap();
    assert!(matches!(expand(&f), Err(Error::NotInSpan(_))));
}

#[test]
fn multiply_examples() {
    let word = a2_121();
    let unit = Class::unit(&word);
    let c = class(&word, &[("010", "a1 - 3"), ("111", "a2")]);
    assert_eq!(multiply(&c, &unit).unwrap(), c);
    let b = |s| Class::basis(&word, g(s)).unwrap();
    assert_eq!(multiply(&b("100"), &b("001")).unwrap(), class(&word, &[("101", "1")]));
    assert_eq!(multiply(&b("001"), &b("001")).unwrap(), class(&word, &[("001", "a1"), ("101", "-2"), ("011", "1")]));
    let other = bs("A2", &[1, 2]);
    assert_eq!(multiply(&b("001"), &Class::unit(&other)), Err(Error::WordMismatch));
}

#[test]
fn multiply_generator_examples() {
    let word = a2_121();
    assert_eq!(multiply_generator::<BigRational>(&word, 3, &g("100")).unwrap(), class(&word, &[("101", "1")]));
    assert_eq!(
        multiply_generator::<BigRational>(&word, 3, &g("101")).unwrap(),
        class(&word, &[("101", "-a1"), ("111", "1")])
    );
    assert_eq!(multiply_generator::<BigRational>(&word, 1, &g("100")).unwrap(), class(&word, &[("100", "a1")]));
    assert!(matches!(multiply_generator::<BigRational>(&word, 4, &g("100")), Err(Error::IndexOutOfRange { .. })));
}

#[test]
fn closed_form_products_match_generic_products() {
    for word in test_words() {
        for e in word.galleries() {
            let rhs = Class::basis(&word, e).unwrap();
            for i in 1..=word.len() {
                let lhs = Class::basis(&word, Gallery::unit(word.len(), i)).unwrap();
                assert_eq!(
                    multiply_generator(&word, i, &e).unwrap(),
                    multiply(&lhs, &rhs).unwrap(),
                    "{word}: i = {i}, e = {e}"
                );
            }
        }
    }
}

#[test]
fn generator_square_relation() {
    for word in test_words() {
        let n = word.len();
        let rs = word.root_system();
        for i in 1..=n {
            let si = Class::basis(&word, Gallery::unit(n, i)).unwrap();
            let mu_i: W = rs.simple_root(word.letter(i)).unwrap();
            let mut rhs = si.scale(&P::from_weight(&mu_i));
            for j in 1..i {
                let sj = Class::basis(&word, Gallery::unit(n, j)).unwrap();
                // n(μ_j, μ_i) = ⟨μ_i, μ_j^∨⟩
                let a_ji = rs.cartan_pairing(&mu_i, word.letter(j)).unwrap();
                let term = multiply(&si, &sj).unwrap().scale(&P::constant(word.rank(), -a_ji));
                rhs = rhs.add(&term).unwrap();
            }
            assert_eq!(multiply(&si, &si).unwrap(), rhs, "{word}: i = {i}");
        }
    }
}

#[test]
fn integrate_examples() {
    let word = a2_121();
    for e in word.galleries() {
        assert_eq!(integrate(&word, &e, &Class::basis(&word, e).unwrap()).unwrap(), P::one(2));
    }
    assert!(integrate(&word, &g("100"), &Class::unit(&word)).unwrap().is_zero());
    let scaled = Class::unit(&word).scale(&p(&word, "a1"));
    assert!(integrate(&word, &g("100"), &scaled).unwrap().is_zero());
    assert!(matches!(integrate(&word, &g("10"), &scaled), Err(Error::LengthMismatch { .. })));
}

#[test]
fn delta_property_exhaustive() {
    for word in test_words() {
        for e in word.galleries() {
            let basis = Class::basis(&word, e).unwrap();
            for target in word.galleries() {
                let value = integrate(&word, &target, &basis).unwrap();
                let expected = if e == target { P::one(word.rank()) } else { P::zero(word.rank()) };
                assert_eq!(value, expected, "{word}: ∫_{target} σ̂_{e}");
            }
        }
    }
}

#[test]
fn integrate_is_s_linear() {
    let word = bs("B2", &[2, 1, 2]);
    let c = class(&word, &[("010", "a1 - 3"), ("111", "a2^2"), ("110", "7")]);
    let f = p(&word, "2*a1 - a2");
    for e in word.galleries() {
        let lhs = integrate(&word, &e, &c.scale(&f)).unwrap();
        let rhs = &integrate(&word, &e, &c).unwrap() * &f;
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn class_json_roundtrip() {
    let word = a2_121();
    let c = class(&word, &[("001", "a1"), ("101", "-2"), ("011", "1/3*a2^2")]);
    let text = serde_json::to_string(&c.to_json()).unwrap();
    let back = Class::from_json(word.root_system_arc().clone(), &text, 20).unwrap();
    assert_eq!(back, c);
    let tagged = r#"{"schema": 1, "word": [1,2,1], "coords": {"101": "1"}}"#;
    let parsed = Class::from_json(word.root_system_arc().clone(), tagged, 20).unwrap();
    assert_eq!(parsed, class(&word, &[("101", "1")]));
    let wrong = r#"{"word": [1,2,1], "coords": {"10": "1"}}"#;
    assert!(matches!(Class::from_json(word.root_system_arc().clone(), wrong, 20), Err(Error::LengthMismatch { .. })));
    assert_eq!(c.to_string(), "001: a1, 101: -2, 011: 1/3*a2^2");
    assert_eq!(Class::zero(&word).to_string(), "0");
}

#[test]
fn restriction_fn_is_shareable_across_threads() {
    let word = bs("B2", &[1, 2, 1, 2]);
    let c = class(&word, &[("0100", "a1"), ("1010", "1")]);
    let f = c.restriction();
    let galleries = word.galleries();
    std::thread::scope(|scope| {
        for chunk in galleries.chunks(4) {
            let f = &f;
            let c = &c;
            scope.spawn(move || {
                for e in chunk {
                    assert_eq!(f.value(e).unwrap(), c.restrict_at(e).unwrap());
                }
            });
        }
    });
    assert_eq!(f.materialize().len(), 16);
}

#[test]
fn v_of_longest_word_gallery_is_w0() {
    let rs = Arc::new(RootSystem::from_label("B2").unwrap());
    let word = BsWord::new(rs.clone(), &rs.longest_word()).unwrap();
    let full = Gallery::from_bits(4, 0b1111);
    assert_eq!(word.v(&full).unwrap(), rs.longest_element());
    assert_eq!(word.v(&Gallery::zero(4)).unwrap(), WeylElement::identity(2));
}

// --- roundtrip property ----------------------------------------------------

fn arb_coeff(rank: usize) -> impl Strategy<Value = P> {
    prop::collection::vec((prop::collection::vec(0u32..3, rank), -3i64..4), 0..3).prop_map(move |ts| {
        P::from_terms(
            rank,
            ts.into_iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= 2)
                .map(|(e, c)| (Monomial::from_exponents(e), BigRational::from_int(c))),
        )
    })
}

fn arb_class() -> impl Strategy<Value = Class> {
    let words = prop::sample::select(vec![
        ("A2", vec![1, 2, 1]),
        ("B2", vec![1, 2, 1, 2, 1]),
        ("G2", vec![2, 1, 2, 2]),
        ("A3", vec![1, 3, 2, 1]),
    ]);
    words.prop_flat_map(|(label, letters)| {
        let word = bs(label, &letters);
        let n = word.len();
        let rank = word.rank();
        prop::collection::vec((0u64..(1 << n), arb_coeff(rank)), 0..6).prop_map(move |cs| {
            Class::from_coords(&word, cs.into_iter().map(|(b, q)| (Gallery::from_bits(n, b), q))).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expand_inverts_restriction(c in arb_class()) {
        prop_assert_eq!(expand(&c.restriction()).unwrap(), c);
    }

    #[test]
    fn multiply_is_commutative(a in arb_class(), coords in prop::collection::vec(0u64..8, 1..3)) {
        let word = a.word().clone();
        let n = word.len();
        let b = Class::from_coords(&word, coords.into_iter().map(|bits| (Gallery::from_bits(n, bits % (1 << n)), P::one(word.rank())))).unwrap();
        prop_assert_eq!(multiply(&a, &b).unwrap(), multiply(&b, &a).unwrap());
    }
}
