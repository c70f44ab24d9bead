use std::cmp::Ordering;

/// Exponent vector, ordered graded-lexicographically: total degree first,
/// then the larger exponent on the earlier variable wins.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn var(rank: usize, k: usize) -> Self {
        let mut e = vec![0; rank];
        e[k] = 1;
        Self(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / x_k`, if `x_k` divides `self`.
    pub fn div_var(&self, k: usize) -> Option<Monomial> {
        if self.0[k] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[k] -= 1;
        Some(Monomial(e))
    }

    /// `a1^2*a2` style; empty for the unit monomial.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| if e == 1 { format!("a{}", k + 1) } else { format!("a{}^{e}", k + 1) })
            .collect();
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
