//! Uniform matroids: the symmetric generators `z_l`, the standard monomial
//! basis `B_n`, and reduction against the Gröbner basis of the relations
//! among the `z_l` in `Z[Z_1, …, Z_n]`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::chow::{graded_rank, permutahedral_ring, ChainMonomial, ChowElement, ChowError, ChowRing, FyVector};
use crate::linalg::{Echelon, SparseVec};
use crate::matroid::{Permutation, Subset};
use crate::tautological::binomial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UniformError {
    #[error("index {l} outside 1..={n}")]
    IndexOutOfRange { l: usize, n: usize },
    #[error("pair (a, b) = ({a}, {b}) must satisfy 0 <= a < b <= {n}")]
    BadPair { a: usize, b: usize, n: usize },
    #[error("polynomial uses {found} variables, expected {n}")]
    VariableCount { found: usize, n: usize },
    #[error(transparent)]
    Chow(#[from] ChowError),
}

/// `z_l = Σ_{|S| = l} x_S` in `A^1(U_{n,n})`.
pub fn z_generator(n: usize, l: usize) -> Result<ChowElement, UniformError> {
    if l == 0 || l > n {
        return Err(UniformError::IndexOutOfRange { l, n });
    }
    let ring = permutahedral_ring(n)?;
    Ok(z_in(&ring, l))
}

fn z_in(ring: &Arc<ChowRing>, l: usize) -> ChowElement {
    ChowElement::sum_of_generators(
        ring,
        ring.generators().iter().copied().filter(|s| s.count_ones() as usize == l),
    )
}

/// Exponent vector `(e_1, …, e_n)` of `Z_1^{e_1} ··· Z_n^{e_n}`.
///
/// Ordered graded-lexicographically with `Z_1 ≻ Z_2 ≻ ··· ≻ Z_n`: higher total
/// degree first, then the larger exponent of the earliest differing variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ZMonomial(pub Vec<u32>);

impl ZMonomial {
    pub fn one(n: usize) -> Self {
        ZMonomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        ZMonomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &ZMonomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn times(&self, other: &ZMonomial) -> ZMonomial {
        ZMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn quotient(&self, divisor: &ZMonomial) -> ZMonomial {
        ZMonomial(self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect())
    }

    /// Factors `(s, p)` of `Π z_s^p` in increasing `s`.
    pub fn factors(&self) -> Vec<(usize, u32)> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i + 1, e))
            .collect()
    }
}

impl Ord for ZMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ZMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ZMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.factors();
        if factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = factors
            .iter()
            .map(|&(s, p)| if p == 1 { format!("z{s}") } else { format!("z{s}^{p}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// An integer polynomial in `Z_1, …, Z_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPolynomial {
    n: usize,
    terms: BTreeMap<ZMonomial, BigInt>,
}

impl ZPolynomial {
    pub fn zero(n: usize) -> Self {
        ZPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: ZMonomial, c: BigInt) -> Self {
        let mut p = Self::zero(m.0.len());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (ZMonomial, BigInt)>) -> Result<Self, UniformError> {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            if m.0.len() != n {
                return Err(UniformError::VariableCount { found: m.0.len(), n });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<ZMonomial, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: ZMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &ZPolynomial) -> ZPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> ZPolynomial {
        let mut out = Self::zero(self.n);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &ZPolynomial) -> ZPolynomial {
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.times(b), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> ZPolynomial {
        let mut acc = Self::monomial(ZMonomial::one(self.n), BigInt::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&ZMonomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Homogeneous components keyed by degree.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(ZMonomial::degree).collect();
        d.dedup();
        d
    }

    fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `Z_i ↦ z_i` in `A*(U_{n,n})`, as FY coordinates per degree.
    pub fn image_fy(&self) -> Result<BTreeMap<u32, FyVector>, ChowError> {
        let ring = permutahedral_ring(self.n)?;
        let zs: Vec<ChowElement> = (1..=self.n).map(|l| z_in(&ring, l)).collect();
        let mut out: BTreeMap<u32, BTreeMap<u32, BigInt>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m.degree();
            if d as usize > ring.top_degree() {
                continue;
            }
            let mut v = ChowElement::one(&ring).fy_coordinates(0)?;
            for (s, p) in m.factors() {
                for _ in 0..p {
                    v = ring.mul_fy(&v, &zs[s - 1])?;
                }
            }
            let acc = out.entry(d).or_default();
            for (i, x) in v.coords {
                *acc.entry(i).or_insert_with(BigInt::zero) += c * x;
            }
        }
        Ok(out
            .into_iter()
            .map(|(d, acc)| {
                let coords: SparseVec = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                (d, FyVector { degree: d as usize, coords })
            })
            .filter(|(_, v)| !v.is_zero())
            .collect())
    }

    /// Whether the image in `A*(U_{n,n})` vanishes.
    pub fn image_vanishes(&self) -> Result<bool, ChowError> {
        Ok(self.image_fy()?.is_empty())
    }
}

impl fmt::Display for ZPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let a = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

/// `Z_a · Σ_{i=b}^{n} binom(i-a-1, b-a-1) (Z_i + ··· + Z_n)^{b-a}` with `Z_0 = 1`.
pub fn groebner_generator(n: usize, a: usize, b: usize) -> Result<ZPolynomial, UniformError> {
    if a >= b || b > n {
        return Err(UniformError::BadPair { a, b, n });
    }
    let mut sum = ZPolynomial::zero(n);
    for i in b..=n {
        let c = binomial((i - a - 1) as i64, (b - a - 1) as i64);
        let tail = ZPolynomial::from_terms(n, (i..=n).map(|j| (ZMonomial::var(n, j), BigInt::one())))?;
        sum = sum.add(&tail.pow((b - a) as u32).scale(&c));
    }
    if a == 0 {
        Ok(sum)
    } else {
        Ok(sum.mul(&ZPolynomial::monomial(ZMonomial::var(n, a), BigInt::one())))
    }
}

/// `Z_a Z_b^{b-a}` (`Z_b^b` when `a = 0`).
pub fn expected_leading_monomial(n: usize, a: usize, b: usize) -> ZMonomial {
    let mut e = vec![0; n];
    if a > 0 {
        e[a - 1] = 1;
    }
    e[b - 1] = (b - a) as u32;
    ZMonomial(e)
}

/// Whether a monomial avoids every leading monomial `Z_a Z_b^{b-a}`.
pub fn is_standard(m: &ZMonomial) -> bool {
    let n = m.0.len();
    for b in 1..=n {
        for a in 0..b {
            if expected_leading_monomial(n, a, b).divides(m) {
                return false;
            }
        }
    }
    true
}

/// The standard monomials `z_{s_1}^{p_1} ··· z_{s_l}^{p_l}` with
/// `1 <= p_i < s_i - s_{i-1}`, grouped by degree in decreasing graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardMonomialBasis {
    pub n: usize,
    pub by_degree: Vec<Vec<ZMonomial>>,
}

impl StandardMonomialBasis {
    pub fn counts(&self) -> Vec<usize> {
        self.by_degree.iter().map(Vec::len).collect()
    }

    pub fn all(&self) -> impl Iterator<Item = &ZMonomial> {
        self.by_degree.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.by_degree.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn standard_basis(n: usize) -> StandardMonomialBasis {
    let mut by_degree = vec![Vec::new(); n.max(1)];
    let mut exps = vec![0u32; n];
    standard_rec(n, 0, 0, &mut exps, &mut by_degree);
    for level in &mut by_degree {
        level.sort_by(|a, b| b.cmp(a));
    }
    StandardMonomialBasis { n, by_degree }
}

fn standard_rec(n: usize, prev: usize, degree: usize, exps: &mut Vec<u32>, out: &mut [Vec<ZMonomial>]) {
    out[degree].push(ZMonomial(exps.clone()));
    for s in prev + 2..=n {
        for p in 1..s - prev {
            exps[s - 1] = p as u32;
            standard_rec(n, s, degree + p, exps, out);
        }
        exps[s - 1] = 0;
    }
}

/// Maps `S ⊆ [n-1]` (a bitmask) to `Π z_{b_j+1}^{|I_j|}` over its maximal
/// intervals `I_j = {a_j, …, b_j}`.
pub fn subset_bijection(n: usize, s: Subset) -> ZMonomial {
    let mut e = vec![0u32; n];
    let mut run = 0;
    for x in 1..n {
        if s >> (x - 1) & 1 == 1 {
            run += 1;
        } else if run > 0 {
            e[x - 1] = run;
            run = 0;
        }
    }
    if run > 0 {
        e[n - 1] = run;
    }
    ZMonomial(e)
}

/// Inverse of [`subset_bijection`]; `None` for monomials outside `B_n`.
pub fn subset_bijection_inverse(m: &ZMonomial) -> Option<Subset> {
    if !is_standard(m) {
        return None;
    }
    let mut s: Subset = 0;
    for (t, p) in m.factors() {
        for x in t - p as usize..t {
            s |= 1 << (x - 1);
        }
    }
    Some(s)
}

/// Result of reducing `p` against the Gröbner basis: `multiplier · p`
/// is congruent to `remainder`, with `gcd(multiplier, content) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbReduction {
    pub multiplier: BigInt,
    pub remainder: ZPolynomial,
}

/// Reduces `p` until every term is a standard monomial.
pub fn gb_normal_form(p: &ZPolynomial) -> Result<GbReduction, UniformError> {
    let n = p.n();
    let mut basis: BTreeMap<(usize, usize), ZPolynomial> = BTreeMap::new();
    let mut rem = p.clone();
    let mut multiplier = BigInt::one();
    loop {
        let target = rem
            .terms
            .iter()
            .rev()
            .find(|(m, _)| !is_standard(m))
            .map(|(m, c)| (m.clone(), c.clone()));
        let Some((m, c)) = target else { break };
        let (a, b) = (1..=n)
            .flat_map(|b| (0..b).map(move |a| (a, b)))
            .find(|&(a, b)| expected_leading_monomial(n, a, b).divides(&m))
            .expect("non-standard monomials are divisible by a leading monomial");
        let g = match basis.entry((a, b)) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(groebner_generator(n, a, b)?),
        };
        let (lm, lc) = g.leading_term().expect("generator is nonzero");
        let common = lc.gcd(&c);
        let (scale_rem, scale_g) = (lc / &common, &c / &common);
        let shift = ZPolynomial::monomial(m.quotient(lm), scale_g);
        rem = rem.scale(&scale_rem).add(&shift.mul(g).scale(&BigInt::from(-1)));
        multiplier *= scale_rem;
    }
    let content = rem.content().gcd(&multiplier);
    if !content.is_one() && !content.is_zero() {
        rem = ZPolynomial {
            n,
            terms: rem.terms.into_iter().map(|(m, c)| (m, c / &content)).collect(),
        };
        multiplier /= &content;
    }
    if multiplier.is_negative() {
        multiplier = -multiplier;
        rem = rem.scale(&BigInt::from(-1));
    }
    Ok(GbReduction {
        multiplier,
        remainder: rem,
    })
}

/// Rank of the `S_n`-fixed subspace of `A^d(U_{n,n})`, from the kernel of the
/// stacked `P_σ - I` for `σ` the transposition `(1 2)` and the `n`-cycle.
pub fn invariant_subspace_rank(n: usize, d: usize) -> Result<usize, ChowError> {
    let ring = permutahedral_ring(n)?;
    let basis = ring.fy_basis(d)?;
    let mut gens = Vec::new();
    if n >= 2 {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        gens.push(Permutation(swap));
        gens.push(Permutation((0..n).map(|i| (i + 1) % n).collect()));
    }
    let mut rows = Echelon::new();
    for sigma in &gens {
        for (j, m) in basis.monomials().iter().enumerate() {
            let image = m.map_sets(|s| sigma.apply(s)).expect("permutations keep chains");
            let v = ChowElement::monomial(&ring, image, BigInt::one()).fy_coordinates(d)?;
            // column j of P_σ - I
            let mut col: BTreeMap<u32, BigInt> = v.coords.into_iter().collect();
            *col.entry(j as u32).or_insert_with(BigInt::zero) -= 1;
            col.retain(|_, c| !c.is_zero());
            let col: SparseVec = col.into_iter().collect();
            rows.insert(&col);
        }
    }
    Ok(basis.len() - rows.rank())
}

/// Per-pair verdicts of the Gröbner basis check.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PairVerdict {
    pub a: usize,
    pub b: usize,
    pub vanishes: bool,
    pub leading_term_ok: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DegreeCount {
    pub degree: usize,
    pub standard: usize,
    pub nondivisible: usize,
    pub expected: usize,
    pub independent_rank: usize,
}

/// Report behind `gb-check`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GbReport {
    pub n: usize,
    pub pairs: Vec<PairVerdict>,
    pub degrees: Vec<DegreeCount>,
    pub nondivisible_in_degree_n: usize,
    pub ok: bool,
}

fn monomials_of_degree(n: usize, d: u32) -> Vec<ZMonomial> {
    fn rec(i: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<ZMonomial>) {
        if i + 1 == e.len() {
            e[i] = left;
            out.push(ZMonomial(e.clone()));
            return;
        }
        for x in 0..=left {
            e[i] = x;
            rec(i + 1, left - x, e, out);
        }
        e[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

/// Checks the Gröbner basis of the relations among `z_1, …, z_n`.
pub fn gb_check(n: usize) -> Result<GbReport, UniformError> {
    let mut pairs = Vec::new();
    for b in 1..=n {
        for a in 0..b {
            let g = groebner_generator(n, a, b)?;
            let (lm, lc) = g.leading_term().expect("nonzero");
            pairs.push(PairVerdict {
                a,
                b,
                vanishes: g.image_vanishes()?,
                leading_term_ok: *lm == expected_leading_monomial(n, a, b) && lc.is_one(),
            });
        }
    }
    let ring = permutahedral_ring(n)?;
    let basis = standard_basis(n);
    let mut degrees = Vec::new();
    for (d, level) in basis.by_degree.iter().enumerate() {
        let nondivisible = monomials_of_degree(n, d as u32).iter().filter(|m| is_standard(m)).count();
        let images: Vec<ChowElement> = level
            .iter()
            .map(|m| {
                let p = ZPolynomial::monomial(m.clone(), BigInt::one());
                let v = p.image_fy()?.remove(&(d as u32)).unwrap_or(FyVector { degree: d, coords: Vec::new() });
                Ok(ChowElement::from_fy(&ring, &v))
            })
            .collect::<Result<_, ChowError>>()?;
        degrees.push(DegreeCount {
            degree: d,
            standard: level.len(),
            nondivisible,
            expected: binomial(n as i64 - 1, d as i64).to_usize().expect("small binomial"),
            independent_rank: graded_rank(&images, d)?,
        });
    }
    let nondivisible_in_degree_n = monomials_of_degree(n, n as u32).iter().filter(|m| is_standard(m)).count();
    let ok = pairs.iter().all(|p| p.vanishes && p.leading_term_ok)
        && degrees.iter().all(|c| {
            c.standard == c.nondivisible && c.expected == c.standard && c.independent_rank == c.standard
        })
        && nondivisible_in_degree_n == 0;
    Ok(GbReport {
        n,
        pairs,
        degrees,
        nondivisible_in_degree_n,
        ok,
    })
}

/// The chain monomial `x_{S_1} ··· x_{S_t}` over the initial segments of a
/// permutation; used to test symmetric sums.
pub fn initial_segment_chain(order: &[usize], len: usize) -> ChainMonomial {
    let mut chain = Vec::with_capacity(len);
    let mut s: Subset = 0;
    for &e in &order[..len] {
        s |= 1 << (e - 1);
        chain.push(s);
    }
    ChainMonomial::new(&chain, &vec![1; len]).expect("initial segments are nested")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(n: usize, factors: &[(usize, u32)]) -> ZMonomial {
        let mut e = vec![0; n];
        for &(s, p) in factors {
            e[s - 1] = p;
        }
        ZMonomial(e)
    }

    #[test]
    fn z_generators() {
        assert_eq!(z_generator(4, 1).unwrap().to_string(), "x{1} + x{2} + x{3} + x{4}");
        assert!(z_generator(4, 0).is_err());
        assert!(z_generator(4, 5).is_err());
        let ring = permutahedral_ring(5).unwrap();
        let mut e = ChowElement::zero(&ring);
        for l in 1..=5 {
            e = e.add(&z_generator(5, l).unwrap().scale(&BigInt::from(l))).unwrap();
        }
        assert!(e.normal_form().unwrap().is_zero());
    }

    #[test]
    fn basis_of_five() {
        let b = standard_basis(5);
        let listed: Vec<String> = b.all().map(ToString::to_string).collect();
        assert_eq!(
            listed.join(" "),
            "1 z2 z3 z4 z5 z2*z4 z2*z5 z3^2 z3*z5 z4^2 z5^2 z2*z5^2 z3^2*z5 z4^3 z5^3 z5^4"
        );
        assert_eq!(b.counts(), vec![1, 4, 6, 4, 1]);
        assert_eq!(standard_basis(1).counts(), vec![1]);
    }

    #[test]
    fn bijection_examples() {
        assert_eq!(subset_bijection(5, 0b0011), mono(5, &[(3, 2)]));
        assert_eq!(subset_bijection(5, 0b1101), mono(5, &[(2, 1), (5, 2)]));
        assert_eq!(subset_bijection(5, 0), ZMonomial::one(5));
        for n in 1..=10 {
            for s in 0..1u32 << (n - 1) {
                let m = subset_bijection(n, s);
                assert!(is_standard(&m));
                assert_eq!(subset_bijection_inverse(&m), Some(s));
            }
        }
        assert_eq!(subset_bijection_inverse(&mono(5, &[(1, 1)])), None);
    }

    #[test]
    fn generator_for_first_pair() {
        let g = groebner_generator(4, 0, 1).unwrap();
        assert_eq!(g.to_string(), "z1 + 2*z2 + 3*z3 + 4*z4");
        assert!(groebner_generator(4, 2, 2).is_err());
        assert!(groebner_generator(4, 1, 5).is_err());
    }

    #[test]
    fn leading_terms() {
        for n in 1..=7 {
            for b in 1..=n {
                for a in 0..b {
                    let g = groebner_generator(n, a, b).unwrap();
                    let (lm, lc) = g.leading_term().unwrap();
                    assert_eq!(*lm, expected_leading_monomial(n, a, b));
                    assert!(lc.is_one());
                }
            }
        }
    }

    #[test]
    fn standard_monomials_reduce_to_themselves() {
        for m in standard_basis(5).all() {
            let p = ZPolynomial::monomial(m.clone(), BigInt::from(3));
            let r = gb_normal_form(&p).unwrap();
            assert_eq!(r.remainder, p);
            assert!(r.multiplier.is_one());
        }
    }

    #[test]
    fn z1_z2_matches_the_chow_product() {
        let n = 4;
        let p = ZPolynomial::monomial(mono(n, &[(1, 1), (2, 1)]), BigInt::one());
        let r = gb_normal_form(&p).unwrap();
        assert!(r.remainder.terms().keys().all(is_standard));
        let lhs = p.image_fy().unwrap();
        let rhs = r.remainder.image_fy().unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn invariant_ranks() {
        assert_eq!(
            (0..5).map(|d| invariant_subspace_rank(5, d).unwrap()).collect::<Vec<_>>(),
            vec![1, 4, 6, 4, 1]
        );
        assert_eq!(invariant_subspace_rank(1, 0).unwrap(), 1);
        assert_eq!(invariant_subspace_rank(3, 0).unwrap(), 1);
    }

    #[test]
    fn gb_report_small() {
        for n in 1..=4 {
            assert!(gb_check(n).unwrap().ok, "n={n}");
        }
    }

    #[test]
    fn symmetric_product_degree() {
        let ring = permutahedral_ring(4).unwrap();
        let mut e = ChowElement::one(&ring);
        for l in 1..4 {
            e = e.mul(&z_generator(4, l).unwrap()).unwrap();
        }
        assert_eq!(e.degree_map().unwrap(), BigInt::from(24));
        let chain = ChowElement::monomial(&ring, initial_segment_chain(&[3, 1, 4, 2], 3), BigInt::one());
        assert_eq!(chain.degree_map().unwrap(), BigInt::one());
    }
}
