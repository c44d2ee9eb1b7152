//! Exact arithmetic in the Chow ring of the permutahedral fan `A*(U_{n,n})`
//! and in the Chow ring `A*(M)` of a loopless matroid.
//!
//! Elements are integer combinations of chain monomials. Products of
//! incomparable generators are dropped on the spot; the linear relations are
//! only applied by [`ChowRing::normal_form_monomial`], which rewrites into the
//! Feichtner–Yuzvinsky monomial basis.
//!
//! Rewriting uses the relations `x_F · (Σ_{G ⊇ H} x_G)^{rk H - rk F} = 0`
//! for admissible `F ⊊ H` (with `x_∅ = 1`). A monomial is rewritten at the
//! lowest chain position `i` whose power reaches the gap
//! `g = rk S_i - rk S_{i-1}`: expanding `rest · (Σ_{G ⊇ S_i} x_G)^g` gives the
//! monomial itself plus terms in which some factor `x_{S_i}` moved to a
//! strictly larger set. The sum of `|G|` over all factors (with multiplicity)
//! therefore strictly increases along every rewrite, and it is bounded by
//! `degree · n`, so rewriting terminates.

mod element;
mod monomial;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::linalg::SparseVec;
use crate::matroid::{Matroid, MatroidError, Subset};

pub use element::{graded_rank, pullback, ChowElement, FyVector};
pub use monomial::ChainMonomial;
pub(crate) use monomial::comparable;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChowError {
    #[error("elements belong to different Chow rings")]
    ContextMismatch,
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("expected degree {expected}, found degree {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("degree {degree} outside 0..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },
    #[error("the Chow ring of a matroid with loops is not supported")]
    HasLoops,
    #[error("{0} is not a generator of this ring")]
    NotAGenerator(String),
    #[error("pullback needs a permutahedral source on the same ground set")]
    BadPullback,
    #[error("operation needs the Chow ring of a matroid")]
    NeedsMatroidRing,
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingKind {
    /// `A*(U_{n,n})`: every nonempty subset is a generator.
    Permutahedral,
    /// `A*(M)` for a loopless matroid: generators are the nonempty flats.
    Matroid(Matroid),
}

/// The Feichtner–Yuzvinsky monomials of one degree in canonical order:
/// by chain length, then lexicographically by `(mask, power)` pairs.
#[derive(Debug)]
pub struct FyBasis {
    degree: usize,
    monomials: Vec<ChainMonomial>,
    index: HashMap<ChainMonomial, u32>,
}

impl FyBasis {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[ChainMonomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &ChainMonomial) -> Option<usize> {
        self.index.get(m).map(|&i| i as usize)
    }
}

/// A graded Chow ring presented by chain monomials, with a memo of normal forms.
pub struct ChowRing {
    n: usize,
    kind: RingKind,
    // rk(S): cardinality for the permutahedral ring, matroid rank otherwise
    level: Vec<u8>,
    admissible: Vec<bool>,
    generators: Vec<Subset>,
    top_degree: usize,
    // for each admissible S, the admissible G ⊇ S in ascending mask order
    above: Vec<Vec<Subset>>,
    fy: Vec<OnceLock<FyBasis>>,
    nf_cache: Mutex<HashMap<ChainMonomial, Arc<SparseVec>>>,
}

impl std::fmt::Debug for ChowRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ChowRing")
            .field("n", &self.n)
            .field("kind", &self.kind_name())
            .field("top_degree", &self.top_degree)
            .finish()
    }
}

static PERMUTAHEDRAL: OnceLock<Mutex<HashMap<usize, Arc<ChowRing>>>> = OnceLock::new();

/// Shared `A*(U_{n,n})`, so that normal forms are memoised across callers.
pub fn permutahedral_ring(n: usize) -> Result<Arc<ChowRing>, ChowError> {
    let cache = PERMUTAHEDRAL.get_or_init(Default::default);
    if let Some(r) = cache.lock().unwrap().get(&n) {
        return Ok(r.clone());
    }
    let ring = ChowRing::permutahedral(n)?;
    Ok(cache.lock().unwrap().entry(n).or_insert(ring).clone())
}

impl ChowRing {
    /// A fresh `A*(U_{n,n})`; prefer [`permutahedral_ring`] to share the memo.
    pub fn permutahedral(n: usize) -> Result<Arc<Self>, ChowError> {
        let free = Matroid::uniform(n, n)?;
        let full = free.full_set();
        let level = (0..=full).map(|s| s.count_ones() as u8).collect();
        let admissible = (0..=full).map(|s| s != 0).collect();
        Ok(Arc::new(Self::build(
            n,
            RingKind::Permutahedral,
            level,
            admissible,
            n - 1,
        )))
    }

    /// `A*(M)` for a loopless matroid `M`.
    pub fn of_matroid(m: &Matroid) -> Result<Arc<Self>, ChowError> {
        if !m.is_loopless() {
            return Err(ChowError::HasLoops);
        }
        let full = m.full_set();
        let level = (0..=full).map(|s| m.rank_of(s) as u8).collect();
        let admissible = (0..=full).map(|s| s != 0 && m.is_flat(s)).collect();
        Ok(Arc::new(Self::build(
            m.n(),
            RingKind::Matroid(m.clone()),
            level,
            admissible,
            m.rank() - 1,
        )))
    }

    fn build(n: usize, kind: RingKind, level: Vec<u8>, admissible: Vec<bool>, top: usize) -> Self {
        let generators: Vec<Subset> = (1..admissible.len() as Subset)
            .filter(|&s| admissible[s as usize])
            .collect();
        let mut above = vec![Vec::new(); admissible.len()];
        for &s in &generators {
            above[s as usize] = generators.iter().copied().filter(|&g| g & s == s).collect();
        }
        ChowRing {
            n,
            kind,
            level,
            admissible,
            generators,
            top_degree: top,
            above,
            fy: (0..=top).map(|_| OnceLock::new()).collect(),
            nf_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn kind_name(&self) -> String {
        match &self.kind {
            RingKind::Permutahedral => format!("A*(U_{{{0},{0}}})", self.n),
            RingKind::Matroid(m) => format!("A*({})", m.label()),
        }
    }

    pub fn is_permutahedral(&self) -> bool {
        self.kind == RingKind::Permutahedral
    }

    /// The matroid of a matroid ring.
    pub fn matroid(&self) -> Result<&Matroid, ChowError> {
        match &self.kind {
            RingKind::Matroid(m) => Ok(m),
            RingKind::Permutahedral => Err(ChowError::NeedsMatroidRing),
        }
    }

    pub fn top_degree(&self) -> usize {
        self.top_degree
    }

    /// Admissible subsets in ascending mask order.
    pub fn generators(&self) -> &[Subset] {
        &self.generators
    }

    pub fn is_admissible(&self, s: Subset) -> bool {
        (s as usize) < self.admissible.len() && self.admissible[s as usize]
    }

    /// `rk(S)`: cardinality in the permutahedral ring, matroid rank otherwise.
    pub fn level(&self, s: Subset) -> usize {
        self.level[s as usize] as usize
    }

    /// Two rings are the same when they present the same generators and levels.
    pub fn same_as(&self, other: &ChowRing) -> bool {
        std::ptr::eq(self, other)
            || (self.n == other.n && self.level == other.level && self.admissible == other.admissible)
    }

    /// Whether a chain monomial is a Feichtner–Yuzvinsky basis monomial.
    pub fn is_fy(&self, m: &ChainMonomial) -> bool {
        self.first_violation(m).is_none()
    }

    fn first_violation(&self, m: &ChainMonomial) -> Option<usize> {
        let mut prev = 0;
        for (i, &(s, p)) in m.factors().iter().enumerate() {
            let l = self.level(s);
            if p as usize >= l - prev {
                return Some(i);
            }
            prev = l;
        }
        None
    }

    /// The FY basis in degree `d`.
    pub fn fy_basis(&self, d: usize) -> Result<&FyBasis, ChowError> {
        if d > self.top_degree {
            return Err(ChowError::DegreeOutOfRange {
                degree: d,
                top: self.top_degree,
            });
        }
        Ok(self.fy[d].get_or_init(|| self.enumerate_fy(d)))
    }

    fn enumerate_fy(&self, d: usize) -> FyBasis {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.extend_fy(0, d, &mut stack, &mut out);
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let index = out
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i as u32))
            .collect();
        FyBasis {
            degree: d,
            monomials: out,
            index,
        }
    }

    fn extend_fy(
        &self,
        below: Subset,
        remaining: usize,
        stack: &mut Vec<(Subset, u32)>,
        out: &mut Vec<ChainMonomial>,
    ) {
        if remaining == 0 {
            out.push(ChainMonomial::from_factors_unchecked(stack.clone()));
            return;
        }
        let base = self.level(below);
        for &t in &self.generators {
            if t & below != below || t == below {
                continue;
            }
            let gap = self.level(t) - base;
            for p in 1..gap.min(remaining + 1) {
                stack.push((t, p as u32));
                self.extend_fy(t, remaining - p, stack, out);
                stack.pop();
            }
        }
    }

    /// Coordinates of a chain monomial in the FY basis of its degree.
    ///
    /// Monomials whose sets are not all admissible are outside the ring and
    /// must be filtered by the caller; degrees above the top vanish.
    pub fn normal_form_monomial(&self, m: &ChainMonomial) -> Arc<SparseVec> {
        if m.degree() > self.top_degree {
            return Arc::new(Vec::new());
        }
        if let Some(hit) = self.nf_cache.lock().unwrap().get(m) {
            return hit.clone();
        }
        let result = Arc::new(self.rewrite(m));
        self.nf_cache
            .lock()
            .unwrap()
            .insert(m.clone(), result.clone());
        result
    }

    fn rewrite(&self, m: &ChainMonomial) -> SparseVec {
        let Some(i) = self.first_violation(m) else {
            let idx = self
                .fy_basis(m.degree())
                .expect("degree checked by caller")
                .index_of(m)
                .expect("FY monomial is enumerated");
            return vec![(idx as u32, BigInt::from(1))];
        };
        let factors = m.factors();
        let (s, p) = factors[i];
        let prev = if i == 0 { 0 } else { self.level(factors[i - 1].0) };
        let gap = (self.level(s) - prev) as u32;

        let mut rest: Vec<(Subset, u32)> = factors.to_vec();
        if p == gap {
            rest.remove(i);
        } else {
            rest[i].1 = p - gap;
        }
        let rest = ChainMonomial::from_factors_unchecked(rest);
        let candidates: Vec<Subset> = self.above[s as usize]
            .iter()
            .copied()
            .filter(|&g| rest.chain().all(|t| comparable(g, t)))
            .collect();

        let mut expansion: HashMap<ChainMonomial, BigInt> = HashMap::new();
        expansion.insert(rest, BigInt::from(1));
        for _ in 0..gap {
            let mut next: HashMap<ChainMonomial, BigInt> = HashMap::new();
            for (mono, c) in &expansion {
                for &g in &candidates {
                    if let Some(prod) = mono.times_generator(g, 1) {
                        *next.entry(prod).or_insert_with(BigInt::zero) += c;
                    }
                }
            }
            expansion = next;
        }
        let own = expansion.remove(m);
        debug_assert_eq!(own, Some(BigInt::from(1)));

        let mut acc: HashMap<u32, BigInt> = HashMap::new();
        for (mono, c) in expansion {
            for (idx, v) in self.normal_form_monomial(&mono).iter() {
                *acc.entry(*idx).or_insert_with(BigInt::zero) -= &c * v;
            }
        }
        let mut out: SparseVec = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        out.sort_unstable_by_key(|e| e.0);
        out
    }

    /// Number of memoised monomial normal forms.
    pub fn cached_normal_forms(&self) -> usize {
        self.nf_cache.lock().unwrap().len()
    }
}
