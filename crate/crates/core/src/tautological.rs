//! Tautological Chern classes of a matroid in `A*(U_{n,n})`, the classes
//! `ch_k(M)` in `A*(M)`, and the CSM Minkowski weights on the Bergman fan.
//!
//! The Chern classes come from three independent routes: the closed
//! chain formula, the product over the full Higgs lift, and the expansion in
//! the rank-nullity generators `y_{i,j}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::chow::{permutahedral_ring, pullback, ChainMonomial, ChowElement, ChowError, ChowRing};
use crate::linalg::{Echelon, SparseVec};
use crate::matroid::{subset_elements, Matroid, Subset};

/// Which tautological bundle: the subbundle `S_M` or the quotient `Q_M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChernSide {
    Sub,
    Quot,
}

impl ChernSide {
    pub const BOTH: [ChernSide; 2] = [ChernSide::Sub, ChernSide::Quot];

    /// Rank for `S_M`, nullity for `Q_M`.
    pub fn value(self, m: &Matroid, s: Subset) -> usize {
        match self {
            ChernSide::Sub => m.rank_of(s),
            ChernSide::Quot => m.nullity_of(s),
        }
    }

    /// Indices `i` of the Higgs-lift factors.
    pub fn higgs_range(self, m: &Matroid) -> Range<usize> {
        match self {
            ChernSide::Sub => 0..m.rank(),
            ChernSide::Quot => m.rank()..m.n(),
        }
    }

    /// Largest degree in which the class can be nonzero.
    pub fn max_degree(self, m: &Matroid) -> usize {
        self.higgs_range(m).len()
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ChernSide::Sub => "S",
            ChernSide::Quot => "Q",
        }
    }
}

impl fmt::Display for ChernSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl std::str::FromStr for ChernSide {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "S" | "s" | "sub" => Ok(ChernSide::Sub),
            "Q" | "q" | "quot" => Ok(ChernSide::Quot),
            other => Err(format!("unknown bundle {other:?}, expected S or Q")),
        }
    }
}

/// `binom(a, b)`, zero when `b > a` or `a < 0`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(a), BigInt::from(b))
}

/// `(-1)^k Π binom(v_i - p̃_{i-1}, p_i)` with `k = Σ p_i`.
pub fn alpha(values: &[usize], powers: &[u32]) -> BigInt {
    let mut acc = BigInt::one();
    let mut used: i64 = 0;
    for (&v, &p) in values.iter().zip(powers) {
        acc *= binomial(v as i64 - used, p as i64);
        if acc.is_zero() {
            return acc;
        }
        used += p as i64;
    }
    if used % 2 == 1 {
        -acc
    } else {
        acc
    }
}

fn binom_factor(value: usize, used: u32, p: u32) -> BigInt {
    binomial(value as i64 - used as i64, p as i64)
}

fn sign(k: usize) -> BigInt {
    if k % 2 == 1 {
        BigInt::from(-1)
    } else {
        BigInt::one()
    }
}

/// `c_k` of `S_M` or `Q_M` by the closed chain formula, unreduced.
pub fn chern_closed_form(m: &Matroid, side: ChernSide, k: usize) -> Result<ChowElement, ChowError> {
    let ring = permutahedral_ring(m.n())?;
    let mut out = ChowElement::zero(&ring);
    let mut stack = Vec::new();
    closed_form_rec(m, side, m.full_set(), 0, 0, k, &BigInt::one(), &mut stack, &mut out);
    Ok(out.scale(&sign(k)))
}

#[allow(clippy::too_many_arguments)]
fn closed_form_rec(
    m: &Matroid,
    side: ChernSide,
    full: Subset,
    below: Subset,
    used: u32,
    k: usize,
    coeff: &BigInt,
    stack: &mut Vec<(Subset, u32)>,
    out: &mut ChowElement,
) {
    let remaining = k - used as usize;
    if remaining == 0 {
        out.add_term(ChainMonomial::from_factors_unchecked(stack.clone()), coeff.clone());
        return;
    }
    let free = full & !below;
    let mut sub = free;
    while sub != 0 {
        let t = below | sub;
        let value = side.value(m, t);
        for p in 1..=remaining as u32 {
            let f = binom_factor(value, used, p);
            if f.is_zero() {
                break;
            }
            stack.push((t, p));
            closed_form_rec(m, side, full, t, used + p, k, &(coeff * f), stack, out);
            stack.pop();
        }
        sub = (sub - 1) & free;
    }
}

/// Coefficients `c_0, c_1, …` of the Chern polynomial expanded from the
/// product over the full Higgs lift.
pub fn chern_polynomial_product(m: &Matroid, side: ChernSide) -> Result<Vec<ChowElement>, ChowError> {
    let ring = permutahedral_ring(m.n())?;
    let mut poly = vec![ChowElement::one(&ring)];
    for i in side.higgs_range(m) {
        let mut factor = ChowElement::zero(&ring);
        for s in 1..=m.full_set() {
            let jump = m.higgs_rank(i + 1, s)? - m.higgs_rank(i, s)?;
            if jump != 0 {
                factor.add_term(ChainMonomial::generator(s), BigInt::from(jump));
            }
        }
        let mut next = poly.clone();
        next.push(ChowElement::zero(&ring));
        for (d, c) in poly.iter().enumerate() {
            next[d + 1] = next[d + 1].sub(&c.mul(&factor)?)?;
        }
        poly = next;
    }
    Ok(poly)
}

/// `c_k` read off the Higgs-lift product.
pub fn chern_product_oracle(m: &Matroid, side: ChernSide, k: usize) -> Result<ChowElement, ChowError> {
    let mut poly = chern_polynomial_product(m, side)?;
    if k < poly.len() {
        Ok(poly.swap_remove(k))
    } else {
        Ok(ChowElement::zero(&permutahedral_ring(m.n())?))
    }
}

/// A formal integer polynomial in the symbols `y_{i,j}`. Each monomial is a
/// list of `((i, j), power)` in increasing `(i, j)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct YPolynomial {
    pub terms: BTreeMap<Vec<((usize, usize), u32)>, BigInt>,
}

impl YPolynomial {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial `Π y_{ij}^p`.
    pub fn coefficient(&self, mono: &[((usize, usize), u32)]) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// Replaces each `y_{i,j}` by `Σ_{rank(S)=i, null(S)=j} x_S` and expands
    /// without reducing.
    pub fn substitute(&self, m: &Matroid) -> Result<ChowElement, ChowError> {
        let ring = permutahedral_ring(m.n())?;
        let mut cache: HashMap<(usize, usize), ChowElement> = HashMap::new();
        let mut out = ChowElement::zero(&ring);
        for (mono, c) in &self.terms {
            let mut prod = ChowElement::one(&ring);
            for &((i, j), p) in mono {
                let y = cache
                    .entry((i, j))
                    .or_insert_with(|| rank_nullity_sum(&ring, m, i, j));
                prod = prod.mul(&y.pow(p))?;
            }
            out = out.add(&prod.scale(c))?;
        }
        Ok(out)
    }
}

impl fmt::Display for YPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(mono, c)| {
                let vars: Vec<String> = mono
                    .iter()
                    .map(|&((i, j), p)| match p {
                        1 => format!("y_{{{i},{j}}}"),
                        _ => format!("y_{{{i},{j}}}^{p}"),
                    })
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `y_{i,j} = Σ x_S` over nonempty `S` with rank `i` and nullity `j`.
pub fn rank_nullity_sum(ring: &Arc<ChowRing>, m: &Matroid, i: usize, j: usize) -> ChowElement {
    ChowElement::sum_of_generators(
        ring,
        (1..=m.full_set()).filter(|&s| m.rank_of(s) == i && m.nullity_of(s) == j),
    )
}

/// `c_k` as a polynomial in the rank-nullity generators.
pub fn chern_y_expansion(m: &Matroid, side: ChernSide, k: usize) -> YPolynomial {
    let top = (m.rank(), m.n() - m.rank());
    let mut out = YPolynomial::default();
    let mut stack = Vec::new();
    y_rec(side, top, (0, 0), 0, k, &BigInt::one(), &mut stack, &mut out);
    let s = sign(k);
    for c in out.terms.values_mut() {
        *c *= &s;
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn y_rec(
    side: ChernSide,
    top: (usize, usize),
    prev: (usize, usize),
    used: u32,
    k: usize,
    coeff: &BigInt,
    stack: &mut Vec<((usize, usize), u32)>,
    out: &mut YPolynomial,
) {
    let remaining = k - used as usize;
    if remaining == 0 {
        out.terms.insert(stack.clone(), coeff.clone());
        return;
    }
    for i in prev.0..=top.0 {
        for j in prev.1..=top.1 {
            if (i, j) == prev {
                continue;
            }
            let value = match side {
                ChernSide::Sub => i,
                ChernSide::Quot => j,
            };
            for p in 1..=remaining as u32 {
                let f = binom_factor(value, used, p);
                if f.is_zero() {
                    break;
                }
                stack.push(((i, j), p));
                y_rec(side, top, (i, j), used + p, k, &(coeff * f), stack, out);
                stack.pop();
            }
        }
    }
}

/// Outcome of comparing the three Chern class routes in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouteComparison {
    pub side: ChernSide,
    pub k: usize,
    pub closed_equals_product: bool,
    pub closed_equals_y: bool,
}

impl RouteComparison {
    pub fn agree(&self) -> bool {
        self.closed_equals_product && self.closed_equals_y
    }
}

/// Normal-forms the three routes for `c_k` and compares them.
pub fn compare_chern_routes(m: &Matroid, side: ChernSide, k: usize) -> Result<RouteComparison, ChowError> {
    let closed = chern_closed_form(m, side, k)?.fy_coordinates(k)?;
    let product = chern_product_oracle(m, side, k)?.fy_coordinates(k)?;
    let y = chern_y_expansion(m, side, k).substitute(m)?.fy_coordinates(k)?;
    Ok(RouteComparison {
        side,
        k,
        closed_equals_product: closed == product,
        closed_equals_y: closed == y,
    })
}

/// Checks `(Σ c_k(S_M) t^k)(Σ c_k(Q_M) t^k) = 1` in `A*(U_{n,n})`.
pub fn whitney_check(m: &Matroid) -> Result<bool, ChowError> {
    let ring = permutahedral_ring(m.n())?;
    let top = ring.top_degree();
    let sub: Vec<ChowElement> = (0..=top)
        .map(|k| chern_closed_form(m, ChernSide::Sub, k))
        .collect::<Result<_, _>>()?;
    let quot: Vec<ChowElement> = (0..=top)
        .map(|k| chern_closed_form(m, ChernSide::Quot, k))
        .collect::<Result<_, _>>()?;
    for d in 0..=top {
        let mut acc: BTreeMap<u32, BigInt> = BTreeMap::new();
        for a in 0..=d {
            let left = sub[a].fy_coordinates(a)?;
            for (i, c) in ring.mul_fy(&left, &quot[d - a])?.coords {
                *acc.entry(i).or_insert_with(BigInt::zero) += c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        let expected: BTreeMap<u32, BigInt> = if d == 0 {
            [(0, BigInt::one())].into()
        } else {
            BTreeMap::new()
        };
        if acc != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `A*(M)` for a loopless matroid.
pub fn matroid_ring(m: &Matroid) -> Result<Arc<ChowRing>, ChowError> {
    ChowRing::of_matroid(m)
}

fn check_ch_degree(ring: &ChowRing, k: usize) -> Result<(), ChowError> {
    if k > ring.top_degree() {
        return Err(ChowError::DegreeOutOfRange {
            degree: k,
            top: ring.top_degree(),
        });
    }
    Ok(())
}

/// `ch_k(M)` in `A^k(M)` by the chain formula over flats.
pub fn ch_class(ring: &Arc<ChowRing>, k: usize) -> Result<ChowElement, ChowError> {
    let m = ring.matroid()?;
    check_ch_degree(ring, k)?;
    let mut out = ChowElement::zero(ring);
    let mut stack = Vec::new();
    ch_rec(ring, m, 0, 0, k, &BigInt::one(), &mut stack, &mut out);
    Ok(out.scale(&sign(k)))
}

#[allow(clippy::too_many_arguments)]
fn ch_rec(
    ring: &Arc<ChowRing>,
    m: &Matroid,
    below: Subset,
    used: u32,
    k: usize,
    coeff: &BigInt,
    stack: &mut Vec<(Subset, u32)>,
    out: &mut ChowElement,
) {
    let remaining = k - used as usize;
    if remaining == 0 {
        out.add_term(ChainMonomial::from_factors_unchecked(stack.clone()), coeff.clone());
        return;
    }
    for &f in ring.generators() {
        if f & below != below || f == below {
            continue;
        }
        let value = m.rank_of(f);
        for p in 1..=remaining as u32 {
            let b = binom_factor(value, used, p);
            if b.is_zero() {
                break;
            }
            stack.push((f, p));
            ch_rec(ring, m, f, used + p, k, &(coeff * b), stack, out);
            stack.pop();
        }
    }
}

/// `ch_k(M)` as the pullback of `c_k(S_M)` from `A*(U_{n,n})`.
pub fn ch_class_via_pullback(ring: &Arc<ChowRing>, k: usize) -> Result<ChowElement, ChowError> {
    let m = ring.matroid()?;
    check_ch_degree(ring, k)?;
    pullback(&chern_closed_form(m, ChernSide::Sub, k)?, ring)
}

/// Coefficients of `Π_{i=1}^{r} (1 - t Σ_{rank(F) >= i} x_F)` in `A*(M)`.
pub fn staircase_polynomial(ring: &Arc<ChowRing>) -> Result<Vec<ChowElement>, ChowError> {
    let m = ring.matroid()?;
    let mut poly = vec![ChowElement::one(ring)];
    for i in 1..=m.rank() {
        let factor = ChowElement::sum_of_generators(
            ring,
            ring.generators().iter().copied().filter(|&f| m.rank_of(f) >= i),
        );
        let mut next = poly.clone();
        next.push(ChowElement::zero(ring));
        for (d, c) in poly.iter().enumerate() {
            next[d + 1] = next[d + 1].sub(&c.mul(&factor)?)?;
        }
        poly = next;
    }
    Ok(poly)
}

/// An integer weight on the cones of the Bergman fan of a fixed dimension.
/// A cone is a chain of nonempty proper flats, listed bottom-up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinkowskiWeight {
    pub matroid: Matroid,
    pub dim: usize,
    pub weights: BTreeMap<Vec<Subset>, BigInt>,
}

impl MinkowskiWeight {
    /// Index `k` of the dual class `ch_k`, i.e. `rank(M) - 1 - dim`.
    pub fn ch_degree(&self) -> usize {
        self.matroid.rank() - 1 - self.dim
    }

    pub fn is_all_ones(&self) -> bool {
        self.weights.values().all(One::is_one)
    }

    /// JSON form: `{"k":k,"dim":d,"weights":[{"chain":[[1],[1,2,3]],"w":-2}]}`.
    pub fn to_json(&self) -> Value {
        let weights: Vec<Value> = self
            .weights
            .iter()
            .map(|(chain, w)| {
                let chain: Vec<Vec<usize>> = chain.iter().map(|&s| subset_elements(s)).collect();
                let w = match i64::try_from(w) {
                    Ok(small) => json!(small),
                    Err(_) => json!(w.to_string()),
                };
                json!({"chain": chain, "w": w})
            })
            .collect();
        json!({"k": self.ch_degree(), "dim": self.dim, "weights": weights})
    }
}

/// Chains of nonempty proper flats of a given length, in lexicographic order
/// of their mask lists.
pub fn proper_flat_chains(ring: &ChowRing, len: usize) -> Result<Vec<Vec<Subset>>, ChowError> {
    let full = ring.matroid()?.full_set();
    let proper: Vec<Subset> = ring.generators().iter().copied().filter(|&f| f != full).collect();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    chains_rec(&proper, 0, len, &mut stack, &mut out);
    out.sort();
    Ok(out)
}

fn chains_rec(proper: &[Subset], below: Subset, len: usize, stack: &mut Vec<Subset>, out: &mut Vec<Vec<Subset>>) {
    if stack.len() == len {
        out.push(stack.clone());
        return;
    }
    for &f in proper {
        if f & below == below && f != below {
            stack.push(f);
            chains_rec(proper, f, len, stack, out);
            stack.pop();
        }
    }
}

/// The CSM weight `csm_{r-1-k}(M)`: each chain `σ` of `r-1-k` proper flats
/// gets `deg(ch_k(M) · x_σ)`.
pub fn csm_weights(ring: &Arc<ChowRing>, k: usize) -> Result<MinkowskiWeight, ChowError> {
    let m = ring.matroid()?.clone();
    check_ch_degree(ring, k)?;
    let top = ring.top_degree();
    let ch = ch_class(ring, k)?.fy_coordinates(k)?;
    let dim = top - k;
    let mut weights = BTreeMap::new();
    for chain in proper_flat_chains(ring, dim)? {
        let mono = ChainMonomial::new(&chain, &vec![1; chain.len()]).expect("chain of flats");
        let x = ChowElement::monomial(ring, mono, BigInt::one());
        let w = ring.degree_of_fy(&ring.mul_fy(&ch, &x)?)?;
        weights.insert(chain, w);
    }
    Ok(MinkowskiWeight {
        matroid: m,
        dim,
        weights,
    })
}

/// The Bergman class: weight 1 on every maximal chain of proper flats.
pub fn bergman_class(ring: &Arc<ChowRing>) -> Result<MinkowskiWeight, ChowError> {
    let m = ring.matroid()?.clone();
    let dim = ring.top_degree();
    let weights = proper_flat_chains(ring, dim)?
        .into_iter()
        .map(|c| (c, BigInt::one()))
        .collect();
    Ok(MinkowskiWeight {
        matroid: m,
        dim,
        weights,
    })
}

fn indicator(s: Subset, n: usize) -> SparseVec {
    (0..n as u32)
        .filter(|e| s >> e & 1 == 1)
        .map(|e| (e, BigInt::one()))
        .collect()
}

/// Balancing at every codimension-one cone: for each chain `τ` of length
/// `dim - 1`, `Σ_{σ ⊃ τ} w(σ) u_{σ∖τ}` must lie in the span of
/// `{u_G : G ∈ τ}` and the all-ones vector.
pub fn balancing_check(w: &MinkowskiWeight) -> bool {
    if w.dim == 0 {
        return true;
    }
    let n = w.matroid.n();
    let mut sums: BTreeMap<Vec<Subset>, Vec<BigInt>> = BTreeMap::new();
    for (sigma, weight) in &w.weights {
        for pos in 0..sigma.len() {
            let mut tau = sigma.clone();
            let added = tau.remove(pos);
            let acc = sums.entry(tau).or_insert_with(|| vec![BigInt::zero(); n]);
            for (e, slot) in acc.iter_mut().enumerate() {
                if added >> e & 1 == 1 {
                    *slot += weight;
                }
            }
        }
    }
    sums.iter().all(|(tau, v)| {
        let mut span = Echelon::new();
        span.insert(&indicator(w.matroid.full_set(), n));
        for &g in tau {
            span.insert(&indicator(g, n));
        }
        span.contains(&crate::linalg::to_sparse(v))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Matroid {
        Matroid::graphic(4, &[(1, 2), (2, 3), (3, 4), (4, 1), (2, 4), (1, 3)]).unwrap()
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert!(binomial(2, 3).is_zero());
        assert!(binomial(-1, 0).is_zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(alpha(&[2, 3], &[1, 1]), BigInt::from(4));
        assert_eq!(alpha(&[3], &[1]), BigInt::from(-3));
    }

    #[test]
    fn degree_zero_is_the_unit() {
        let m = k4();
        for side in ChernSide::BOTH {
            let c = chern_closed_form(&m, side, 0).unwrap();
            assert_eq!(c.to_string(), "1");
            assert_eq!(chern_y_expansion(&m, side, 0).to_string(), "1");
        }
    }

    #[test]
    fn quotient_of_free_matroid_is_trivial() {
        let m = Matroid::uniform(3, 3).unwrap();
        for k in 1..=3 {
            assert!(chern_closed_form(&m, ChernSide::Quot, k).unwrap().is_zero());
        }
    }

    #[test]
    fn first_chern_class_of_sub_is_minus_rank_weighted_sum() {
        let m = Matroid::uniform(2, 3).unwrap();
        let c1 = chern_closed_form(&m, ChernSide::Sub, 1).unwrap();
        for s in 1..8u32 {
            let expected = -BigInt::from(m.rank_of(s));
            assert_eq!(c1.coefficient(&ChainMonomial::generator(s)), expected);
        }
        let y = chern_y_expansion(&m, ChernSide::Sub, 1);
        for (mono, c) in &y.terms {
            assert_eq!(mono.len(), 1);
            assert_eq!(*c, -BigInt::from(mono[0].0 .0));
        }
    }

    #[test]
    fn product_oracle_linear_term() {
        let m = k4();
        let c1 = chern_product_oracle(&m, ChernSide::Sub, 1).unwrap();
        let closed = chern_closed_form(&m, ChernSide::Sub, 1).unwrap();
        assert_eq!(c1.terms(), closed.terms());
    }

    #[test]
    fn k4_second_chern_class_coefficients() {
        let m = k4();
        let c2 = chern_closed_form(&m, ChernSide::Sub, 2).unwrap();
        let mut by_shape: BTreeMap<Vec<(usize, u32)>, BTreeMap<BigInt, usize>> = BTreeMap::new();
        for (mono, c) in c2.terms() {
            let shape = mono.factors().iter().map(|&(s, p)| (m.rank_of(s), p)).collect();
            *by_shape.entry(shape).or_default().entry(c.clone()).or_default() += 1;
        }
        let expect = [
            (vec![(2, 2)], 1),
            (vec![(3, 2)], 3),
            (vec![(1, 1), (2, 1)], 1),
            (vec![(1, 1), (3, 1)], 2),
            (vec![(2, 1), (2, 1)], 2),
            (vec![(2, 1), (3, 1)], 4),
            (vec![(3, 1), (3, 1)], 6),
        ];
        assert_eq!(by_shape.len(), expect.len());
        for (shape, coeff) in expect {
            let coeffs = &by_shape[&shape];
            assert_eq!(coeffs.keys().collect::<Vec<_>>(), vec![&BigInt::from(coeff)], "{shape:?}");
        }
    }

    #[test]
    fn k4_higgs_factor_sets() {
        let m = k4();
        let rank2 = (1u32..64).filter(|&s| m.rank_of(s) == 3).count();
        let s2 = (1u32..64)
            .filter(|&s| m.higgs_rank(3, s).unwrap() - m.higgs_rank(2, s).unwrap() == 1)
            .count();
        assert_eq!(rank2, s2);
        let s5: Vec<Subset> = (1u32..64)
            .filter(|&s| m.higgs_rank(6, s).unwrap() - m.higgs_rank(5, s).unwrap() == 1)
            .collect();
        assert_eq!(s5, vec![63]);
    }

    #[test]
    fn routes_agree_on_k4() {
        let m = k4();
        for side in ChernSide::BOTH {
            for k in 0..=4 {
                assert!(compare_chern_routes(&m, side, k).unwrap().agree(), "{side} {k}");
            }
        }
    }

    #[test]
    fn classes_vanish_above_their_range() {
        let m = Matroid::uniform(2, 4).unwrap();
        for k in 3..=4 {
            assert!(chern_closed_form(&m, ChernSide::Sub, k).unwrap().normal_form().unwrap().is_zero());
        }
        let m = Matroid::uniform(3, 4).unwrap();
        for k in 2..=3 {
            assert!(chern_closed_form(&m, ChernSide::Quot, k).unwrap().normal_form().unwrap().is_zero());
        }
    }

    #[test]
    fn whitney_on_small_matroids() {
        assert!(whitney_check(&k4()).unwrap());
        let m = Matroid::direct_sum(&Matroid::uniform(0, 1).unwrap(), &Matroid::uniform(1, 2).unwrap()).unwrap();
        assert!(whitney_check(&m).unwrap());
    }

    #[test]
    fn ch_routes_and_staircase_agree() {
        let m = k4();
        let ring = matroid_ring(&m).unwrap();
        let stair = staircase_polynomial(&ring).unwrap();
        for k in 0..=2 {
            let a = ch_class(&ring, k).unwrap();
            let b = ch_class_via_pullback(&ring, k).unwrap();
            assert_eq!(a.terms(), b.terms());
            assert!(a.equals_in_ring(&stair[k]).unwrap());
        }
        assert!(matches!(
            ch_class(&ring, 3),
            Err(ChowError::DegreeOutOfRange { .. })
        ));
        assert_eq!(ch_class(&ring, 0).unwrap().to_string(), "1");
    }

    #[test]
    fn bergman_class_is_csm_top() {
        for m in [k4(), Matroid::uniform(2, 3).unwrap(), Matroid::uniform(3, 4).unwrap()] {
            let ring = matroid_ring(&m).unwrap();
            let top = csm_weights(&ring, 0).unwrap();
            assert!(top.is_all_ones());
            assert_eq!(top, bergman_class(&ring).unwrap());
            for k in 0..m.rank() {
                assert!(balancing_check(&csm_weights(&ring, k).unwrap()), "k={k}");
            }
        }
    }

    #[test]
    fn csm_of_three_points_on_a_line() {
        let ring = matroid_ring(&Matroid::uniform(2, 3).unwrap()).unwrap();
        let w = csm_weights(&ring, 1).unwrap();
        assert_eq!(w.dim, 0);
        assert_eq!(w.weights[&Vec::new()], BigInt::from(-1));
        assert_eq!(
            w.to_json().to_string(),
            r#"{"dim":0,"k":1,"weights":[{"chain":[],"w":-1}]}"#
        );
    }

    #[test]
    fn flipped_weight_is_not_balanced() {
        let ring = matroid_ring(&k4()).unwrap();
        let mut w = bergman_class(&ring).unwrap();
        let first = w.weights.keys().next().unwrap().clone();
        w.weights.insert(first, BigInt::from(2));
        assert!(!balancing_check(&w));
    }

    #[test]
    fn refuses_loops() {
        let m = Matroid::from_bases(2, &[vec![1]]).unwrap();
        assert_eq!(matroid_ring(&m).unwrap_err(), ChowError::HasLoops);
    }
}
