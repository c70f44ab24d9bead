use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial};
use crate::scalar::Scalar;

pub(crate) fn parse_polynomial<C: Scalar>(rank: usize, text: &str) -> Result<Polynomial<C>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut out = Polynomial::zero(rank);
    for (negative, body) in split_terms(&compact)? {
        let mut term = parse_term::<C>(rank, body)?;
        if negative {
            term = -term;
        }
        out += &term;
    }
    Ok(out)
}

fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut negative = false;
    let bytes = s.as_bytes();
    for (k, &b) in bytes.iter().enumerate() {
        if (b == b'+' || b == b'-') && k > 0 {
            out.push((negative, &s[start..k]));
            negative = b == b'-';
            start = k + 1;
        } else if k == 0 && (b == b'+' || b == b'-') {
            negative = b == b'-';
            start = 1;
        }
    }
    out.push((negative, &s[start..]));
    if out.iter().any(|(_, t)| t.is_empty()) {
        return Err(Error::Parse(format!("malformed polynomial {s:?}")));
    }
    Ok(out)
}

fn parse_term<C: Scalar>(rank: usize, body: &str) -> Result<Polynomial<C>> {
    let mut coeff = C::one();
    let mut exps = vec![0u32; rank];
    for factor in body.split('*') {
        if let Some(var) = factor.strip_prefix('a') {
            let (index, exp) = match var.split_once('^') {
                Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad(factor))?),
                None => (var, 1),
            };
            let index: usize = index.parse().map_err(|_| bad(factor))?;
            if index == 0 || index > rank {
                return Err(Error::IndexOutOfRange { index, bound: rank });
            }
            exps[index - 1] += exp;
        } else {
            coeff = coeff * parse_scalar::<C>(factor)?;
        }
    }
    Ok(Polynomial::from_terms(rank, [(Monomial::from_exponents(exps), coeff)]))
}

/// Integers or `p/q`. Ratio types only parse the slashed form, plain
/// integer types only the unslashed one.
pub(crate) fn parse_scalar<C: Scalar>(text: &str) -> Result<C> {
    if let Ok(c) = C::from_str_radix(text, 10) {
        return Ok(c);
    }
    match text.split_once('/') {
        Some((n, d)) => {
            let n = parse_scalar::<C>(n)?;
            let d = parse_scalar::<C>(d)?;
            n.checked_exact_div(&d).ok_or_else(|| bad(text))
        }
        None => C::from_str_radix(&format!("{text}/1"), 10).map_err(|_| bad(text)),
    }
}

fn bad(factor: &str) -> Error {
    Error::Parse(format!("bad polynomial factor {factor:?}"))
}
