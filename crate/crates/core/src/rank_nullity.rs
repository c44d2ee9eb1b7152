//! The rank-nullity subring `R*(M) ⊆ A*(U_{n,n})`, generated by the level
//! sums `y_{i,j}` of `x_S` over subsets of rank `i` and nullity `j`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::chow::{graded_rank, permutahedral_ring, ChowElement, ChowError, ChowRing, FyVector};
use crate::linalg::Echelon;
use crate::matroid::{Matroid, MatroidError, Subset};
use crate::tautological::{chern_closed_form, rank_nullity_sum, ChernSide};

/// Largest ground set accepted by the Hilbert driver.
pub const MAX_HILBERT_N: usize = 8;

#[derive(Clone, Debug)]
pub struct RNGenerator {
    pub i: usize,
    pub j: usize,
    pub element: ChowElement,
}

/// The nonzero `y_{i,j}` in increasing `(i, j)` order.
pub fn rn_generators(m: &Matroid) -> Result<Vec<RNGenerator>, ChowError> {
    let ring = permutahedral_ring(m.n())?;
    let mut out = Vec::new();
    for i in 0..=m.rank() {
        for j in 0..=m.n() - i {
            let element = rank_nullity_sum(&ring, m, i, j);
            if !element.is_zero() {
                out.push(RNGenerator { i, j, element });
            }
        }
    }
    Ok(out)
}

/// Degree-one relations among the `y_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCensus {
    /// `(i, j)` with `i + j <= n` and `y_{i,j} = 0`.
    pub vanishing: Vec<(usize, usize)>,
    /// Whether `vanishing` is exactly `(0,0)` plus the flat-bound pairs.
    pub matches_flat_bound: bool,
    pub generators: usize,
    pub rank: usize,
    pub expected_rank: usize,
    pub free_plus_loops: bool,
}

impl RelationCensus {
    pub fn holds(&self) -> bool {
        self.matches_flat_bound && self.rank == self.expected_rank
    }
}

/// Compares the degree-one span of the generators with the predicted number
/// of independent relations.
pub fn degree1_relation_census(m: &Matroid) -> Result<RelationCensus, ChowError> {
    let n = m.n();
    let flats = m.flats();
    let mut vanishing = Vec::new();
    let mut predicted = Vec::new();
    for i in 0..=n {
        let bound = flats
            .get(i)
            .and_then(|level| level.iter().map(|f| f.count_ones() as usize).max());
        for j in 0..=n - i {
            let present = (1..=m.full_set()).any(|s: Subset| m.rank_of(s) == i && m.nullity_of(s) == j);
            if !present {
                vanishing.push((i, j));
            }
            let beyond = match bound {
                Some(b) => i + j > b,
                None => true,
            };
            if (i, j) == (0, 0) || beyond {
                predicted.push((i, j));
            }
        }
    }
    let gens = rn_generators(m)?;
    let elements: Vec<ChowElement> = gens.iter().map(|g| g.element.clone()).collect();
    let rank = graded_rank(&elements, 1)?;
    let free_plus_loops = m.is_free_plus_loops();
    let lost = if free_plus_loops { 2 } else { 1 };
    Ok(RelationCensus {
        matches_flat_bound: vanishing == predicted,
        vanishing,
        generators: gens.len(),
        rank,
        expected_rank: gens.len().saturating_sub(lost),
        free_plus_loops,
    })
}

/// Ranks of `R^0(M), …, R^{n-1}(M)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertVector {
    pub values: Vec<usize>,
}

impl HilbertVector {
    /// `label,HF0,HF1,…`
    pub fn csv_row(&self, label: &str) -> String {
        format!("{label},{self}")
    }

    pub fn is_unimodal(&self) -> bool {
        let v = &self.values;
        let peak = (0..v.len()).find(|&i| i + 1 == v.len() || v[i] > v[i + 1]).unwrap_or(0);
        v[..=peak].windows(2).all(|w| w[0] <= w[1]) && v[peak..].windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_log_concave(&self) -> bool {
        self.values
            .windows(3)
            .all(|w| (w[1] as u128) * (w[1] as u128) >= (w[0] as u128) * (w[2] as u128))
    }
}

impl fmt::Display for HilbertVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RankNullityError {
    #[error("ground set of size {n} exceeds the limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error(transparent)]
    Chow(#[from] ChowError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// `R*(M)` as explicit spans in FY coordinates, degree by degree.
///
/// `span[0] = {1}`, and `span[d+1]` is grown from the products of the basis
/// of `span[d]` with every nonzero generator, keeping the first independent
/// products in the order they are produced.
pub struct RankNullityRing {
    matroid: Matroid,
    ring: Arc<ChowRing>,
    generators: Vec<RNGenerator>,
    bases: Vec<Vec<FyVector>>,
    echelons: Vec<Echelon>,
}

impl RankNullityRing {
    pub fn new(m: &Matroid) -> Result<Self, RankNullityError> {
        Self::with_limit(m, MAX_HILBERT_N)
    }

    pub fn with_limit(m: &Matroid, max_n: usize) -> Result<Self, RankNullityError> {
        if m.n() > max_n {
            return Err(RankNullityError::TooLarge { n: m.n(), max: max_n });
        }
        let ring = permutahedral_ring(m.n())?;
        let generators = rn_generators(m)?;
        let unit = ChowElement::one(&ring).fy_coordinates(0)?;
        let mut first = Echelon::new();
        first.insert(&unit.coords);
        let mut bases = vec![vec![unit]];
        let mut echelons = vec![first];
        for d in 0..ring.top_degree() {
            let mut span = Echelon::new();
            let mut basis = Vec::new();
            for v in &bases[d] {
                for g in &generators {
                    let w = ring.mul_fy(v, &g.element)?;
                    if span.insert(&w.coords) {
                        basis.push(w);
                    }
                }
            }
            bases.push(basis);
            echelons.push(span);
        }
        Ok(RankNullityRing {
            matroid: m.clone(),
            ring,
            generators,
            bases,
            echelons,
        })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn ring(&self) -> &Arc<ChowRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[RNGenerator] {
        &self.generators
    }

    /// Basis of `R^d(M)` in FY coordinates.
    pub fn basis(&self, d: usize) -> &[FyVector] {
        &self.bases[d]
    }

    pub fn hilbert(&self) -> HilbertVector {
        HilbertVector {
            values: self.bases.iter().map(Vec::len).collect(),
        }
    }

    /// Whether a homogeneous element of `A*(U_{n,n})` lies in `R*(M)`.
    pub fn contains(&self, e: &ChowElement) -> Result<bool, ChowError> {
        let Some(d) = e.homogeneous_degree()? else {
            return Ok(true);
        };
        if d > self.ring.top_degree() {
            return Ok(true);
        }
        Ok(self.echelons[d].contains(&e.fy_coordinates(d)?.coords))
    }

    /// Ranks of `R^q` and of `ℓ·R^q` for every `q` with `2q + 2 <= n`.
    pub fn lefschetz_with(&self, ell: &ChowElement) -> Result<LefschetzReport, ChowError> {
        let n = self.matroid.n();
        let mut steps = Vec::new();
        let mut q = 0;
        while 2 * q + 2 <= n {
            let mut image = Echelon::new();
            for v in &self.bases[q] {
                image.insert(&self.ring.mul_fy(v, ell)?.coords);
            }
            steps.push(LefschetzStep {
                q,
                source_rank: self.bases[q].len(),
                image_rank: image.rank(),
            });
            q += 1;
        }
        Ok(LefschetzReport { steps })
    }

    /// The check with `ℓ = Σ (i+j)(n-i-j) y_{i,j}`.
    pub fn lefschetz(&self) -> Result<LefschetzReport, ChowError> {
        self.lefschetz_with(&lefschetz_element(&self.matroid)?)
    }
}

/// `ℓ = Σ (i+j)(n-i-j) y_{i,j} = Σ_S |S|(n-|S|) x_S`.
pub fn lefschetz_element(m: &Matroid) -> Result<ChowElement, ChowError> {
    let n = m.n();
    let ring = permutahedral_ring(n)?;
    let mut ell = ChowElement::zero(&ring);
    for g in rn_generators(m)? {
        let c = (g.i + g.j) * (n - g.i - g.j);
        ell = ell.add(&g.element.scale(&BigInt::from(c)))?;
    }
    Ok(ell)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzStep {
    pub q: usize,
    pub source_rank: usize,
    pub image_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzReport {
    pub steps: Vec<LefschetzStep>,
}

impl LefschetzReport {
    pub fn injective(&self) -> bool {
        self.steps.iter().all(|s| s.source_rank == s.image_rank)
    }
}

pub fn rn_hilbert(m: &Matroid) -> Result<HilbertVector, RankNullityError> {
    Ok(RankNullityRing::new(m)?.hilbert())
}

pub fn lefschetz_check(m: &Matroid) -> Result<bool, RankNullityError> {
    Ok(RankNullityRing::new(m)?.lefschetz()?.injective())
}

/// `deg Π_{k=1}^{n-1} (Σ_{i+j=k} y_{i,j})`, which should be `n!`.
pub fn top_degree_witness(m: &Matroid) -> Result<BigInt, ChowError> {
    let ring = permutahedral_ring(m.n())?;
    let gens = rn_generators(m)?;
    let mut acc = ChowElement::one(&ring).fy_coordinates(0)?;
    for k in 1..m.n() {
        let mut level = ChowElement::zero(&ring);
        for g in gens.iter().filter(|g| g.i + g.j == k) {
            level = level.add(&g.element)?;
        }
        acc = ring.mul_fy(&acc, &level)?;
    }
    ring.degree_of_fy(&acc)
}

/// Whether every `c_k(S_M)` and `c_k(Q_M)` lies in `R*(M)`.
pub fn chern_membership_check(rn: &RankNullityRing) -> Result<bool, ChowError> {
    let m = rn.matroid();
    for side in ChernSide::BOTH {
        for k in 0..=rn.ring().top_degree() {
            if !rn.contains(&chern_closed_form(m, side, k)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether every automorphism of `M` fixes each `y_{i,j}` term by term.
pub fn generators_are_invariant(m: &Matroid) -> Result<bool, RankNullityError> {
    let gens = rn_generators(m)?;
    for sigma in m.automorphisms()? {
        for g in &gens {
            if g.element.permute(|s| sigma.apply(s)).terms() != g.element.terms() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Hilbert values never exceed the ambient FY dimensions.
pub fn within_ambient(h: &HilbertVector, ring: &ChowRing) -> Result<bool, ChowError> {
    for (d, &v) in h.values.iter().enumerate() {
        if v > ring.fy_basis(d)?.len() {
            return Ok(false);
        }
    }
    Ok(!h.values.iter().any(|v| v.is_zero()))
}
