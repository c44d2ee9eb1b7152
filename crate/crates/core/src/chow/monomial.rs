use std::fmt;

use crate::matroid::{format_subset, Subset};

/// `x_{S_1}^{p_1} ··· x_{S_t}^{p_t}` over a strictly nested chain `S_1 ⊊ ··· ⊊ S_t`.
///
/// Factors are stored bottom-up. The empty chain is the unit monomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ChainMonomial {
    factors: Vec<(Subset, u32)>,
}

#[inline]
pub(crate) fn comparable(a: Subset, b: Subset) -> bool {
    a & b == a || a & b == b
}

impl ChainMonomial {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn generator(s: Subset) -> Self {
        ChainMonomial {
            factors: vec![(s, 1)],
        }
    }

    /// Builds a monomial from a chain and matching positive powers. Returns
    /// `None` unless the chain is strictly nested and every power is positive.
    pub fn new(chain: &[Subset], powers: &[u32]) -> Option<Self> {
        if chain.len() != powers.len() || powers.contains(&0) {
            return None;
        }
        let nested = chain
            .windows(2)
            .all(|w| w[0] != w[1] && w[0] & w[1] == w[0]);
        nested.then(|| ChainMonomial {
            factors: chain.iter().copied().zip(powers.iter().copied()).collect(),
        })
    }

    pub(crate) fn from_factors_unchecked(factors: Vec<(Subset, u32)>) -> Self {
        ChainMonomial { factors }
    }

    pub fn factors(&self) -> &[(Subset, u32)] {
        &self.factors
    }

    pub fn chain(&self) -> impl Iterator<Item = Subset> + '_ {
        self.factors.iter().map(|f| f.0)
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.1 as usize).sum()
    }

    /// Multiplies by `x_s^p`; `None` when `s` is incomparable to some set of
    /// the chain, i.e. the product vanishes.
    pub fn times_generator(&self, s: Subset, p: u32) -> Option<Self> {
        let mut factors = Vec::with_capacity(self.factors.len() + 1);
        let mut placed = false;
        for &(t, q) in &self.factors {
            if !comparable(s, t) {
                return None;
            }
            if placed {
                factors.push((t, q));
            } else if t == s {
                factors.push((t, q + p));
                placed = true;
            } else if s & t == s {
                factors.push((s, p));
                factors.push((t, q));
                placed = true;
            } else {
                factors.push((t, q));
            }
        }
        if !placed {
            factors.push((s, p));
        }
        Some(ChainMonomial { factors })
    }

    /// Product of two monomials, or `None` if it vanishes.
    pub fn times(&self, other: &ChainMonomial) -> Option<Self> {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = large.clone();
        for &(s, p) in &small.factors {
            acc = acc.times_generator(s, p)?;
        }
        Some(acc)
    }

    /// Applies a map to every set of the chain; `None` if the image is not a
    /// strictly nested chain.
    pub fn map_sets(&self, f: impl Fn(Subset) -> Subset) -> Option<Self> {
        let mut acc = ChainMonomial::unit();
        for &(s, p) in &self.factors {
            acc = acc.times_generator(f(s), p)?;
        }
        (acc.len() == self.len()).then_some(acc)
    }
}

impl fmt::Display for ChainMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(s, p)| {
                if p == 1 {
                    format!("x{}", format_subset(s))
                } else {
                    format!("x{}^{p}", format_subset(s))
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for ChainMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
