use crate::bott_samelson::{BsWord, CohClass, Gallery, RestrictionFn};
use crate::error::{Error, Result};
use crate::polyring::{fraction_sum, LinearCombFraction, Polynomial};
use crate::root_system::{Weight, WeylElement};
use crate::scalar::Scalar;

/// `π₊(a) ⊂ π₊(b)`.
pub fn gallery_leq(a: &Gallery, b: &Gallery) -> Result<bool> {
    a.leq(b)
}

/// `v_i^j(ε)`: the ordered product of `r_{μ_k}` over selected `k ∈ [i, j]`;
/// the identity when `j < i`.
pub fn v_segment(word: &BsWord, e: &Gallery, i: usize, j: usize) -> Result<WeylElement> {
    word.check_gallery(e)?;
    if j < i {
        if i > word.len() + 1 {
            return Err(Error::IndexOutOfRange { index: i, bound: word.len() + 1 });
        }
        return Ok(WeylElement::identity(word.rank()));
    }
    word.check_position(i)?;
    word.check_position(j)?;
    Ok(word.segment_unchecked(e, i, j))
}

/// `α_i(ε) = v_{i-1}(ε)(μ_i)`.
pub fn alpha<C: Scalar>(word: &BsWord, e: &Gallery, i: usize) -> Result<Weight<C>> {
    word.check_gallery(e)?;
    word.check_position(i)?;
    Ok(Weight::from_ints(&word.alpha_ints(e)[i - 1]))
}

/// `α_1(ε), …, α_N(ε)`.
pub fn alphas<C: Scalar>(word: &BsWord, e: &Gallery) -> Result<Vec<Weight<C>>> {
    word.check_gallery(e)?;
    Ok(word.alpha_ints(e).iter().map(|a| Weight::from_ints(a)).collect())
}

pub(crate) fn linear_form<C: Scalar>(rank: usize, coords: &[i64]) -> Polynomial<C> {
    debug_assert_eq!(coords.len(), rank);
    Polynomial::from_weight(&Weight::from_ints(coords))
}

/// `∏_{i ∈ π₊(sel)} α_i(·)` given the alphas of the evaluation point.
pub(crate) fn product_of_alphas<C: Scalar>(rank: usize, sel: &Gallery, alphas: &[Vec<i64>]) -> Polynomial<C> {
    sel.plus().fold(Polynomial::one(rank), |acc, i| &acc * &linear_form(rank, &alphas[i - 1]))
}

/// `σ_ε(ε')`: the product of `α_i(ε')` over `i ∈ π₊(ε)` when `ε ≤ ε'`,
/// zero otherwise.
pub fn sigma<C: Scalar>(word: &BsWord, e: &Gallery, at: &Gallery) -> Result<Polynomial<C>> {
    word.check_gallery(e)?;
    word.check_gallery(at)?;
    if !e.leq_unchecked(at) {
        return Ok(Polynomial::zero(word.rank()));
    }
    Ok(product_of_alphas(word.rank(), e, &word.alpha_ints(at)))
}

/// The full matrix `σ_ε(ε')`, rows and columns in canonical gallery order.
/// Quadratic in `2^N`.
pub fn restriction_table<C: Scalar>(word: &BsWord) -> Vec<(Gallery, Vec<Polynomial<C>>)> {
    let galleries = word.galleries();
    let columns: Vec<Vec<Vec<i64>>> = galleries.iter().map(|g| word.alpha_ints(g)).collect();
    galleries
        .iter()
        .map(|e| {
            let row = galleries
                .iter()
                .zip(&columns)
                .map(|(at, alphas)| {
                    if e.leq_unchecked(at) {
                        product_of_alphas(word.rank(), e, alphas)
                    } else {
                        Polynomial::zero(word.rank())
                    }
                })
                .collect();
            (*e, row)
        })
        .collect()
}

/// Coordinates of a restriction function on the basis `{σ_ε}`.
///
/// Galleries are visited by increasing length, so every `ε' < ε` is solved
/// before `ε`. The diagonal entry `σ_ε(ε)` is a product of roots and is
/// divided out one linear factor at a time. Cost: `2^N` evaluations of `f`
/// plus one pass over the coordinates found so far per gallery.
pub fn expand<C: Scalar>(f: &RestrictionFn<C>) -> Result<CohClass<C>> {
    let word = f.word();
    let rank = word.rank();
    let mut solved: Vec<(Gallery, Polynomial<C>)> = Vec::new();
    for e in word.galleries() {
        let alphas = word.alpha_ints(&e);
        let mut residual = f.value(&e)?;
        for (prev, coeff) in &solved {
            if prev.leq_unchecked(&e) {
                residual -= &(coeff * &product_of_alphas(rank, prev, &alphas));
            }
        }
        if residual.is_zero() {
            continue;
        }
        for i in e.plus() {
            let form = Weight::from_ints(&alphas[i - 1]);
            residual = residual.divide_exact(&form).map_err(|_| {
                Error::NotInSpan(format!("value at {e} is not divisible by the diagonal factor {form}"))
            })?;
        }
        solved.push((e, residual));
    }
    CohClass::from_coords(word, solved)
}

/// Product of two classes, computed pointwise on fixed points and expanded
/// back onto the basis.
pub fn multiply<C: Scalar>(a: &CohClass<C>, b: &CohClass<C>) -> Result<CohClass<C>> {
    if a.word() != b.word() {
        return Err(Error::WordMismatch);
    }
    let product = a.restriction().pointwise_product(&b.restriction())?;
    expand(&product).map_err(|e| match e {
        Error::NotInSpan(msg) => Error::NotInSpan(format!("product left the span of the basis: {msg}")),
        other => other,
    })
}

/// `σ̂_i · σ̂_ε` in closed form.
///
/// If `i ∉ π₊(ε)` the product is `σ̂_{ε+(i)}`. Otherwise it is
/// `σ_i(ε) σ̂_ε + Σ_{j<i, j ∈ π₋(ε)} c_j σ̂_{ε+(j)}` where
/// `c_j = (r_{μ_j} α − α)/μ_j = −⟨α, μ_j^∨⟩` for `α = v_{j+1}^{i-1}(ε)(μ_i)`.
pub fn multiply_generator<C: Scalar>(word: &BsWord, i: usize, e: &Gallery) -> Result<CohClass<C>> {
    word.check_gallery(e)?;
    word.check_position(i)?;
    let rank = word.rank();
    if !e.contains(i) {
        return CohClass::basis(word, e.with(i));
    }
    let rs = word.root_system();
    let alphas = word.alpha_ints(e);
    let mut coords = vec![(*e, linear_form(rank, &alphas[i - 1]))];
    for j in e.minus().filter(|&j| j < i) {
        let mut mu_i = vec![0; rank];
        mu_i[word.letter(i) - 1] = 1;
        let alpha_ji = word.segment_unchecked(e, j + 1, i - 1).apply_ints(&mu_i);
        let coeff = -rs.pairing_ints(&alpha_ji, word.letter(j));
        coords.push((e.with(j), Polynomial::constant(rank, C::from_int(coeff))));
    }
    CohClass::from_coords(word, coords)
}

/// `∫_{Ȳ_ε} c` by localization:
/// `(-1)^{ℓ(ε)} Σ_{ε' ≤ ε} c(ε') / ((-1)^{ℓ(ε')} ∏_{i ∈ π₊(ε)} α_i(ε'))`.
///
/// The sum has `2^{ℓ(ε)}` terms. A nonpolynomial result is reported as
/// `ResidualDenominator` and means a broken invariant, not bad input.
pub fn integrate<C: Scalar>(word: &BsWord, e: &Gallery, c: &CohClass<C>) -> Result<Polynomial<C>> {
    word.check_gallery(e)?;
    if c.word() != word {
        return Err(Error::WordMismatch);
    }
    let rank = word.rank();
    let mut terms = Vec::new();
    for below in e.below() {
        let alphas = word.alpha_ints(&below);
        let value = c.restrict_with(&below, &alphas);
        if value.is_zero() {
            continue;
        }
        let value = if (e.length() + below.length()) % 2 == 1 { -value } else { value };
        let forms = e.plus().map(|i| Weight::from_ints(&alphas[i - 1]));
        terms.push(LinearCombFraction::new(value, forms)?);
    }
    fraction_sum(rank, terms)?.into_polynomial()
}
