//! Shared text rendering for signed sums of monomials.

use std::fmt::{self, Write};

use crate::scalar::Scalar;

/// Writes `terms` as `c1*m1 + c2*m2 - ...`. An empty monomial string marks
/// a constant term. Writes `0` for an empty sum.
pub(crate) fn write_sum<'a, C, I>(f: &mut impl Write, terms: I) -> fmt::Result
where
    C: Scalar,
    I: IntoIterator<Item = (&'a C, String)>,
{
    let mut first = true;
    for (coeff, mono) in terms {
        let negative = coeff.is_negative();
        let magnitude = coeff.abs();
        match (first, negative) {
            (true, true) => f.write_char('-')?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if mono.is_empty() {
            write!(f, "{magnitude}")?;
        } else if magnitude.is_one() {
            f.write_str(&mono)?;
        } else {
            write!(f, "{magnitude}*{mono}")?;
        }
    }
    if first {
        f.write_char('0')?;
    }
    Ok(())
}
