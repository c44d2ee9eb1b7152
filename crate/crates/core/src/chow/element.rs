use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::{ChainMonomial, ChowError, ChowRing, RingKind};
use crate::linalg::{bareiss_rank, SparseVec};
use crate::matroid::{subset_elements, Subset};

/// An integer combination of chain monomials in a fixed Chow ring.
#[derive(Clone)]
pub struct ChowElement {
    ring: Arc<ChowRing>,
    terms: BTreeMap<ChainMonomial, BigInt>,
}

/// FY coordinates of a homogeneous element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FyVector {
    pub degree: usize,
    pub coords: SparseVec,
}

impl FyVector {
    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

impl ChowElement {
    pub fn zero(ring: &Arc<ChowRing>) -> Self {
        ChowElement {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<ChowRing>) -> Self {
        Self::monomial(ring, ChainMonomial::unit(), BigInt::one())
    }

    /// `x_S`; fails when `S` is not a generator of the ring.
    pub fn generator(ring: &Arc<ChowRing>, s: Subset) -> Result<Self, ChowError> {
        if !ring.is_admissible(s) {
            return Err(ChowError::NotAGenerator(crate::matroid::format_subset(s)));
        }
        Ok(Self::monomial(ring, ChainMonomial::generator(s), BigInt::one()))
    }

    /// `Σ_{S ∈ sets} x_S` over admissible sets; other sets are skipped.
    pub fn sum_of_generators(ring: &Arc<ChowRing>, sets: impl IntoIterator<Item = Subset>) -> Self {
        let mut e = Self::zero(ring);
        for s in sets {
            if ring.is_admissible(s) {
                e.add_term(ChainMonomial::generator(s), BigInt::one());
            }
        }
        e
    }

    pub fn monomial(ring: &Arc<ChowRing>, m: ChainMonomial, c: BigInt) -> Self {
        let mut e = Self::zero(ring);
        e.add_term(m, c);
        e
    }

    /// Builds an element from terms; every set must be a generator of the ring.
    pub fn from_terms(
        ring: &Arc<ChowRing>,
        terms: impl IntoIterator<Item = (ChainMonomial, BigInt)>,
    ) -> Result<Self, ChowError> {
        let mut e = Self::zero(ring);
        for (m, c) in terms {
            if let Some(bad) = m.chain().find(|&s| !ring.is_admissible(s)) {
                return Err(ChowError::NotAGenerator(crate::matroid::format_subset(bad)));
            }
            e.add_term(m, c);
        }
        Ok(e)
    }

    pub fn ring(&self) -> &Arc<ChowRing> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<ChainMonomial, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &ChainMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, m: ChainMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Degrees present among the terms.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(ChainMonomial::degree).collect()
    }

    /// The common degree of all terms; `None` for the zero element.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>, ChowError> {
        let d = self.degrees();
        match d.len() {
            0 => Ok(None),
            1 => Ok(d.into_iter().next()),
            _ => Err(ChowError::Inhomogeneous),
        }
    }

    fn check_ring(&self, other: &ChowElement) -> Result<(), ChowError> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(ChowError::ContextMismatch)
        }
    }

    pub fn add(&self, other: &ChowElement) -> Result<ChowElement, ChowError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ChowElement) -> Result<ChowElement, ChowError> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> ChowElement {
        let mut out = Self::zero(&self.ring);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Raw product: distributes over terms and drops products of
    /// incomparable sets. No linear relations are applied.
    pub fn mul(&self, other: &ChowElement) -> Result<ChowElement, ChowError> {
        self.check_ring(other)?;
        let mut acc: HashMap<ChainMonomial, BigInt> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(p) = a.times(b) {
                    *acc.entry(p).or_insert_with(BigInt::zero) += ca * cb;
                }
            }
        }
        let mut out = Self::zero(&self.ring);
        for (m, c) in acc {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> ChowElement {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// FY coordinates of a homogeneous element of degree `d`.
    pub fn fy_coordinates(&self, d: usize) -> Result<FyVector, ChowError> {
        if d > self.ring.top_degree() {
            if let Some(found) = self.degrees().into_iter().find(|&e| e != d) {
                return Err(ChowError::WrongDegree { expected: d, found });
            }
            return Ok(FyVector {
                degree: d,
                coords: Vec::new(),
            });
        }
        let mut acc: HashMap<u32, BigInt> = HashMap::new();
        for (m, c) in &self.terms {
            if m.degree() != d {
                return Err(ChowError::WrongDegree {
                    expected: d,
                    found: m.degree(),
                });
            }
            for (i, v) in self.ring.normal_form_monomial(m).iter() {
                *acc.entry(*i).or_insert_with(BigInt::zero) += c * v;
            }
        }
        let mut coords: SparseVec = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        coords.sort_unstable_by_key(|e| e.0);
        Ok(FyVector { degree: d, coords })
    }

    /// Rebuilds an element from FY coordinates.
    pub fn from_fy(ring: &Arc<ChowRing>, v: &FyVector) -> ChowElement {
        let mut out = Self::zero(ring);
        if v.degree > ring.top_degree() {
            return out;
        }
        let basis = ring.fy_basis(v.degree).expect("degree in range");
        for (i, c) in &v.coords {
            out.add_term(basis.monomials()[*i as usize].clone(), c.clone());
        }
        out
    }

    /// The unique representative supported on FY monomials.
    pub fn normal_form(&self) -> Result<ChowElement, ChowError> {
        match self.homogeneous_degree()? {
            None => Ok(self.clone()),
            Some(d) => Ok(Self::from_fy(&self.ring, &self.fy_coordinates(d)?)),
        }
    }

    /// Whether two elements agree after normal form.
    pub fn equals_in_ring(&self, other: &ChowElement) -> Result<bool, ChowError> {
        let diff = self.sub(other)?;
        let mut by_degree: BTreeMap<usize, ChowElement> = BTreeMap::new();
        for (m, c) in diff.terms {
            by_degree
                .entry(m.degree())
                .or_insert_with(|| Self::zero(&self.ring))
                .add_term(m, c);
        }
        for (d, part) in by_degree {
            if !part.fy_coordinates(d)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The degree isomorphism `A^top ≅ Z`, normalised so that every squarefree
    /// monomial over a maximal chain of proper generators maps to 1.
    ///
    /// The top FY monomial is `x_E^top`, whose degree is `(-1)^top`.
    pub fn degree_map(&self) -> Result<BigInt, ChowError> {
        let v = self.fy_coordinates(self.ring.top_degree())?;
        self.ring.degree_of_fy(&v)
    }

    /// Splits into homogeneous components.
    pub fn graded_parts(&self) -> BTreeMap<usize, ChowElement> {
        let mut out: BTreeMap<usize, ChowElement> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Self::zero(&self.ring))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Applies a permutation of the ground set to every set of every term.
    pub fn permute(&self, image: impl Fn(Subset) -> Subset) -> ChowElement {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let mapped = m.map_sets(&image).expect("permutations preserve chains");
            out.add_term(mapped, c.clone());
        }
        out
    }

    /// JSON form: `{"degree":d,"terms":[{"chain":[[1],[1,2]],"powers":[1,1],"coeff":"-3"}]}`.
    pub fn to_json(&self) -> Result<Value, ChowError> {
        let degree = self.homogeneous_degree()?.unwrap_or(0);
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let chain: Vec<Vec<usize>> = m.chain().map(subset_elements).collect();
                let powers: Vec<u32> = m.factors().iter().map(|f| f.1).collect();
                json!({"chain": chain, "powers": powers, "coeff": c.to_string()})
            })
            .collect();
        Ok(json!({"degree": degree, "terms": terms}))
    }
}

impl fmt::Display for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            if m.is_unit() {
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

impl fmt::Debug for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ring.kind_name())
    }
}

/// Pulls an element of `A*(U_{n,n})` back to `A*(M)`: monomials touching a
/// non-flat vanish, the rest keep their chain.
pub fn pullback(a: &ChowElement, target: &Arc<ChowRing>) -> Result<ChowElement, ChowError> {
    if !a.ring.is_permutahedral()
        || !matches!(target.kind(), RingKind::Matroid(_))
        || a.ring.n() != target.n()
    {
        return Err(ChowError::BadPullback);
    }
    let mut out = ChowElement::zero(target);
    for (m, c) in &a.terms {
        if m.chain().all(|s| target.is_admissible(s)) {
            out.add_term(m.clone(), c.clone());
        }
    }
    Ok(out)
}

/// Rank of the span of homogeneous degree-`d` elements, computed from their
/// FY coordinates by Bareiss elimination.
pub fn graded_rank(elements: &[ChowElement], d: usize) -> Result<usize, ChowError> {
    let Some(first) = elements.first() else {
        return Ok(0);
    };
    let ring = first.ring.clone();
    if d > ring.top_degree() {
        for e in elements {
            e.fy_coordinates(d)?;
        }
        return Ok(0);
    }
    let dim = ring.fy_basis(d)?.len();
    let mut rows = Vec::with_capacity(elements.len());
    for e in elements {
        first.check_ring(e)?;
        let v = e.fy_coordinates(d)?;
        let mut row = vec![BigInt::zero(); dim];
        for (i, c) in v.coords {
            row[i as usize] = c;
        }
        rows.push(row);
    }
    Ok(bareiss_rank(&rows))
}

impl ChowRing {
    /// The degree map on FY coordinates of top degree.
    pub fn degree_of_fy(&self, v: &FyVector) -> Result<BigInt, ChowError> {
        let top = self.top_degree();
        if v.degree != top {
            return Err(ChowError::WrongDegree {
                expected: top,
                found: v.degree,
            });
        }
        let c = v.coords.first().map(|e| e.1.clone()).unwrap_or_default();
        Ok(if top % 2 == 1 { -c } else { c })
    }

    /// Multiplies an element given in FY coordinates by an arbitrary element
    /// and returns the product in FY coordinates.
    pub fn mul_fy(self: &Arc<Self>, v: &FyVector, e: &ChowElement) -> Result<FyVector, ChowError> {
        if !self.same_as(&e.ring) {
            return Err(ChowError::ContextMismatch);
        }
        let Some(de) = e.homogeneous_degree()? else {
            return Ok(FyVector {
                degree: v.degree,
                coords: Vec::new(),
            });
        };
        let degree = v.degree + de;
        let mut acc: HashMap<u32, BigInt> = HashMap::new();
        if degree <= self.top_degree() && v.degree <= self.top_degree() {
            let basis = self.fy_basis(v.degree)?;
            for (i, cv) in &v.coords {
                let b = &basis.monomials()[*i as usize];
                for (m, cm) in &e.terms {
                    let Some(prod) = b.times(m) else { continue };
                    let coeff = cv * cm;
                    for (j, w) in self.normal_form_monomial(&prod).iter() {
                        *acc.entry(*j).or_insert_with(BigInt::zero) += &coeff * w;
                    }
                }
            }
        }
        let mut coords: SparseVec = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        coords.sort_unstable_by_key(|x| x.0);
        Ok(FyVector { degree, coords })
    }
}
