//! Matroids on small ground sets, stored as a dense rank table.
//!
//! Elements are labelled `1..=n` and a subset is an `n`-bit mask with element
//! `e` on bit `e - 1`. Every iteration over subsets runs in ascending mask
//! order, so all derived lists (flats, circuits, automorphisms) are canonical.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Bitmask over the ground set; element `e` lives on bit `e - 1`.
pub type Subset = u32;

/// Default cap on the ground set size. The rank table has `2^n` entries.
pub const MAX_GROUND_SET: usize = 12;

/// Largest ground set for which [`Matroid::automorphisms`] runs its search over `S_n`.
pub const MAX_AUTOMORPHISM_N: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("ground set size {n} outside 1..={max}")]
    GroundSetSize { n: usize, max: usize },
    #[error("rank {r} exceeds ground set size {n}")]
    RankTooLarge { r: usize, n: usize },
    #[error("element {element} outside the ground set 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("at least one basis is required")]
    NoBases,
    #[error("bases do not all have the same cardinality")]
    MixedBasisSizes,
    #[error("basis exchange fails for {b1:?} and {b2:?} at element {element}")]
    BasisExchange {
        b1: Vec<usize>,
        b2: Vec<usize>,
        element: usize,
    },
    #[error("vertex {vertex} outside 1..={vertices}")]
    VertexOutOfRange { vertex: usize, vertices: usize },
    #[error("rank function violates the matroid axioms at {subset:?}: {reason}")]
    RankAxiom { subset: Vec<usize>, reason: String },
    #[error("Higgs lift index {i} outside 0..={n}")]
    HiggsIndex { i: usize, n: usize },
    #[error("automorphism search is limited to n <= {max}, got n = {n}")]
    TooLargeForAutomorphisms { n: usize, max: usize },
}

/// Converts a mask into the sorted list of its 1-indexed elements.
pub fn subset_elements(s: Subset) -> Vec<usize> {
    (0..32).filter(|b| s >> b & 1 == 1).map(|b| b + 1).collect()
}

/// Builds a mask from 1-indexed elements.
pub fn subset_from_elements(elements: &[usize], n: usize) -> Result<Subset, MatroidError> {
    let mut s = 0;
    for &e in elements {
        if e == 0 || e > n {
            return Err(MatroidError::ElementOutOfRange { element: e, n });
        }
        s |= 1 << (e - 1);
    }
    Ok(s)
}

/// Writes a subset the way the examples in the literature do: `{1,2,5}`.
pub fn format_subset(s: Subset) -> String {
    let items: Vec<String> = subset_elements(s).iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

#[inline]
fn popcount(s: Subset) -> u32 {
    s.count_ones()
}

/// A matroid given by its rank function on every subset of `[n]`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    rank_table: Vec<u8>,
    label: String,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("label", &self.label)
            .field("n", &self.n)
            .field("rank", &self.rank())
            .finish()
    }
}

impl Matroid {
    /// Builds a matroid from a full rank table, checking every rank axiom.
    pub fn from_rank_table(
        n: usize,
        rank_table: Vec<u8>,
        label: impl Into<String>,
    ) -> Result<Self, MatroidError> {
        check_size(n)?;
        assert_eq!(rank_table.len(), 1 << n, "rank table must have 2^n entries");
        let m = Matroid {
            n,
            rank_table,
            label: label.into(),
        };
        m.check_axioms()?;
        Ok(m)
    }

    /// Builds a matroid from a rank oracle evaluated on every subset.
    pub fn from_rank_fn(
        n: usize,
        label: impl Into<String>,
        rank: impl Fn(Subset) -> usize,
    ) -> Result<Self, MatroidError> {
        check_size(n)?;
        let table = (0..1u32 << n).map(|s| rank(s) as u8).collect();
        Self::from_rank_table(n, table, label)
    }

    /// The uniform matroid `U_{r,n}`.
    pub fn uniform(r: usize, n: usize) -> Result<Self, MatroidError> {
        check_size(n)?;
        if r > n {
            return Err(MatroidError::RankTooLarge { r, n });
        }
        Self::from_rank_fn(n, format!("U_{{{r},{n}}}"), |s| (popcount(s) as usize).min(r))
    }

    /// A matroid presented by its list of bases (1-indexed elements).
    ///
    /// The basis-exchange axiom is verified exhaustively; inputs that violate
    /// it are rejected.
    pub fn from_bases(n: usize, bases: &[Vec<usize>]) -> Result<Self, MatroidError> {
        check_size(n)?;
        if bases.is_empty() {
            return Err(MatroidError::NoBases);
        }
        let mut masks = Vec::with_capacity(bases.len());
        for b in bases {
            masks.push(subset_from_elements(b, n)?);
        }
        masks.sort_unstable();
        masks.dedup();
        let size = popcount(masks[0]);
        if masks.iter().any(|&b| popcount(b) != size) {
            return Err(MatroidError::MixedBasisSizes);
        }
        let is_basis: HashSet<Subset> = masks.iter().copied().collect();
        for &b1 in &masks {
            for &b2 in &masks {
                let mut only_b1 = b1 & !b2;
                while only_b1 != 0 {
                    let x = only_b1 & only_b1.wrapping_neg();
                    only_b1 &= only_b1 - 1;
                    let mut only_b2 = b2 & !b1;
                    let mut found = false;
                    while only_b2 != 0 {
                        let y = only_b2 & only_b2.wrapping_neg();
                        only_b2 &= only_b2 - 1;
                        if is_basis.contains(&((b1 & !x) | y)) {
                            found = true;
                            break;
                        }
                    }
                    if !found {
                        return Err(MatroidError::BasisExchange {
                            b1: subset_elements(b1),
                            b2: subset_elements(b2),
                            element: x.trailing_zeros() as usize + 1,
                        });
                    }
                }
            }
        }
        let label = format!("bases(n={n}, {} bases)", masks.len());
        Self::from_rank_fn(n, label, |s| {
            masks.iter().map(|&b| popcount(s & b)).max().unwrap_or(0) as usize
        })
    }

    /// The graphic matroid of a multigraph. Edge `k` of `edges` becomes element
    /// `k + 1`; self-loops and parallel edges are allowed.
    pub fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Result<Self, MatroidError> {
        let n = edges.len();
        check_size(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > vertices {
                    return Err(MatroidError::VertexOutOfRange {
                        vertex: w,
                        vertices,
                    });
                }
            }
        }
        let label = format!("graphic(V={vertices}, E={n})");
        Self::from_rank_fn(n, label, |s| {
            let mut parent: Vec<usize> = (0..=vertices).collect();
            fn find(parent: &mut [usize], mut x: usize) -> usize {
                while parent[x] != x {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                x
            }
            let mut rank = 0;
            for (k, &(u, v)) in edges.iter().enumerate() {
                if s >> k & 1 == 0 {
                    continue;
                }
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru] = rv;
                    rank += 1;
                }
            }
            rank
        })
    }

    /// Direct sum; the elements of `b` are shifted past those of `a`.
    pub fn direct_sum(a: &Matroid, b: &Matroid) -> Result<Self, MatroidError> {
        let n = a.n + b.n;
        check_size(n)?;
        let low = (1u32 << a.n) - 1;
        let label = format!("{} (+) {}", a.label, b.label);
        Self::from_rank_fn(n, label, |s| a.rank_of(s & low) + b.rank_of(s >> a.n))
    }

    /// Direct sum of several matroids, left to right.
    pub fn direct_sum_all(parts: &[Matroid]) -> Result<Self, MatroidError> {
        let (first, rest) = parts.split_first().ok_or(MatroidError::GroundSetSize {
            n: 0,
            max: MAX_GROUND_SET,
        })?;
        let mut acc = first.clone();
        for p in rest {
            acc = Matroid::direct_sum(&acc, p)?;
        }
        Ok(acc)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full_set(&self) -> Subset {
        ((1u64 << self.n) - 1) as Subset
    }

    /// Rank of the whole matroid.
    pub fn rank(&self) -> usize {
        self.rank_of(self.full_set())
    }

    #[inline]
    pub fn rank_of(&self, s: Subset) -> usize {
        self.rank_table[s as usize] as usize
    }

    #[inline]
    pub fn nullity_of(&self, s: Subset) -> usize {
        popcount(s) as usize - self.rank_of(s)
    }

    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank_of(s);
        let mut c = s;
        for e in 0..self.n {
            let bit = 1 << e;
            if s & bit == 0 && self.rank_of(s | bit) == r {
                c |= bit;
            }
        }
        c
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        self.closure(s) == s
    }

    /// All flats grouped by rank; within a rank, ascending mask order.
    /// Includes the closure of the empty set and the full ground set.
    pub fn flats(&self) -> Vec<Vec<Subset>> {
        let mut grouped = vec![Vec::new(); self.rank() + 1];
        for s in 0..=self.full_set() {
            if self.is_flat(s) {
                grouped[self.rank_of(s)].push(s);
            }
        }
        grouped
    }

    /// Minimal dependent subsets in ascending mask order.
    pub fn circuits(&self) -> Vec<Subset> {
        (1..=self.full_set())
            .filter(|&s| {
                self.nullity_of(s) == 1
                    && (0..self.n).all(|e| s >> e & 1 == 0 || self.nullity_of(s & !(1 << e)) == 0)
            })
            .collect()
    }

    pub fn loops(&self) -> Subset {
        (0..self.n)
            .filter(|&e| self.rank_of(1 << e) == 0)
            .fold(0, |acc, e| acc | 1 << e)
    }

    pub fn coloops(&self) -> Subset {
        let full = self.full_set();
        (0..self.n)
            .filter(|&e| self.rank_of(full & !(1 << e)) < self.rank())
            .fold(0, |acc, e| acc | 1 << e)
    }

    pub fn is_loopless(&self) -> bool {
        self.loops() == 0
    }

    /// True when every element is a loop or a coloop, with at least one of
    /// each, i.e. `M ≅ U_{r,r} ⊕ U_{0,n-r}` with `1 <= r <= n - 1`.
    pub fn is_free_plus_loops(&self) -> bool {
        let loops = self.loops();
        let coloops = self.coloops();
        loops != 0 && coloops != 0 && loops | coloops == self.full_set()
    }

    /// Rank of `s` in the `i`-th matroid of the full Higgs lift.
    pub fn higgs_rank(&self, i: usize, s: Subset) -> Result<usize, MatroidError> {
        if i > self.n {
            return Err(MatroidError::HiggsIndex { i, n: self.n });
        }
        let r = self.rank();
        let rk = self.rank_of(s);
        Ok(if i <= r {
            i.min(rk)
        } else {
            (popcount(s) as usize).min(rk + i - r)
        })
    }

    /// The `i`-th matroid of the full Higgs lift as a standalone matroid.
    pub fn higgs_lift(&self, i: usize) -> Result<Matroid, MatroidError> {
        if i > self.n {
            return Err(MatroidError::HiggsIndex { i, n: self.n });
        }
        let label = format!("{}[higgs {i}]", self.label);
        Matroid::from_rank_fn(self.n, label, |s| self.higgs_rank(i, s).unwrap())
    }

    /// Every permutation of the ground set preserving all ranks, in
    /// lexicographic order of their one-line notation.
    pub fn automorphisms(&self) -> Result<Vec<Permutation>, MatroidError> {
        if self.n > MAX_AUTOMORPHISM_N {
            return Err(MatroidError::TooLargeForAutomorphisms {
                n: self.n,
                max: MAX_AUTOMORPHISM_N,
            });
        }
        let mut images: Vec<usize> = (0..self.n).collect();
        let mut out = Vec::new();
        loop {
            let p = Permutation(images.clone());
            if self.preserved_by(&p) {
                out.push(p);
            }
            if !next_permutation(&mut images) {
                break;
            }
        }
        Ok(out)
    }

    fn preserved_by(&self, p: &Permutation) -> bool {
        // singletons and pairs reject almost every candidate cheaply
        for e in 0..self.n {
            if self.rank_of(1 << e) != self.rank_of(1 << p.0[e]) {
                return false;
            }
        }
        for e in 0..self.n {
            for f in e + 1..self.n {
                let s = (1 << e) | (1 << f);
                if self.rank_of(s) != self.rank_of(p.apply(s)) {
                    return false;
                }
            }
        }
        (0..=self.full_set()).all(|s| self.rank_of(s) == self.rank_of(p.apply(s)))
    }

    fn check_axioms(&self) -> Result<(), MatroidError> {
        let fail = |s: Subset, reason: &str| MatroidError::RankAxiom {
            subset: subset_elements(s),
            reason: reason.to_string(),
        };
        if self.rank_of(0) != 0 {
            return Err(fail(0, "rank of the empty set is not 0"));
        }
        for s in 0..=self.full_set() {
            let rs = self.rank_of(s);
            if rs > popcount(s) as usize {
                return Err(fail(s, "rank exceeds cardinality"));
            }
            for e in 0..self.n {
                let be = 1 << e;
                if s & be != 0 {
                    continue;
                }
                let re = self.rank_of(s | be);
                if re < rs || re > rs + 1 {
                    return Err(fail(s, "adding one element changes rank by more than 1"));
                }
                for f in e + 1..self.n {
                    let bf = 1 << f;
                    if s & bf != 0 {
                        continue;
                    }
                    if re + self.rank_of(s | bf) < self.rank_of(s | be | bf) + rs {
                        return Err(fail(s, "submodularity fails"));
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_size(n: usize) -> Result<(), MatroidError> {
    if n == 0 || n > MAX_GROUND_SET {
        return Err(MatroidError::GroundSetSize {
            n,
            max: MAX_GROUND_SET,
        });
    }
    Ok(())
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// A permutation of the ground set; entry `k` is the 0-based image of element `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Builds a permutation from 1-indexed one-line notation.
    pub fn from_one_line(images: &[usize]) -> Self {
        Permutation(images.iter().map(|&i| i - 1).collect())
    }

    pub fn apply(&self, s: Subset) -> Subset {
        let mut out = 0;
        let mut rest = s;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << self.0[e];
        }
        out
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Matroid {
        Matroid::graphic(4, &[(1, 2), (2, 3), (3, 4), (4, 1), (2, 4), (1, 3)]).unwrap()
    }

    fn set(elements: &[usize]) -> Subset {
        subset_from_elements(elements, 12).unwrap()
    }

    #[test]
    fn uniform_ranks() {
        let m = Matroid::uniform(2, 4).unwrap();
        assert_eq!(m.rank_of(set(&[1, 2, 3])), 2);
        let zero = Matroid::uniform(0, 3).unwrap();
        for s in 0..8 {
            assert_eq!(zero.rank_of(s), 0);
            assert_eq!(zero.nullity_of(s), s.count_ones() as usize);
        }
        let free = Matroid::uniform(5, 5).unwrap();
        assert!((0..32).all(|s| free.rank_of(s) == s.count_ones() as usize));
    }

    #[test]
    fn uniform_rejects_bad_sizes() {
        assert!(matches!(
            Matroid::uniform(3, 2),
            Err(MatroidError::RankTooLarge { .. })
        ));
        assert!(matches!(
            Matroid::uniform(0, 0),
            Err(MatroidError::GroundSetSize { .. })
        ));
        assert!(matches!(
            Matroid::uniform(1, 13),
            Err(MatroidError::GroundSetSize { .. })
        ));
    }

    #[test]
    fn k4_from_bases_matches_graph() {
        let non_bases = [set(&[1, 2, 6]), set(&[1, 4, 5]), set(&[2, 3, 5]), set(&[3, 4, 6])];
        let bases: Vec<Vec<usize>> = (0u32..64)
            .filter(|s| s.count_ones() == 3 && !non_bases.contains(s))
            .map(subset_elements)
            .collect();
        let from_bases = Matroid::from_bases(6, &bases).unwrap();
        let graph = k4();
        assert!((0..64).all(|s| from_bases.rank_of(s) == graph.rank_of(s)));
        assert_eq!(graph.rank_of(set(&[1, 2, 6])), 2);
    }

    #[test]
    fn bases_with_a_loop() {
        let m = Matroid::from_bases(2, &[vec![1]]).unwrap();
        assert_eq!(m.rank_of(set(&[2])), 0);
        assert_eq!(m.loops(), set(&[2]));
    }

    #[test]
    fn one_non_basis() {
        let bases: Vec<Vec<usize>> = (0u32..16)
            .filter(|&s| s.count_ones() == 2 && s != set(&[1, 2]))
            .map(subset_elements)
            .collect();
        let m = Matroid::from_bases(4, &bases).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_of(set(&[1, 2])), 1);
        assert_eq!(m.circuits(), vec![set(&[1, 2]), set(&[1, 3, 4]), set(&[2, 3, 4])]);
    }

    #[test]
    fn rejects_bad_bases() {
        // {1,2} and {3,4} alone fail exchange
        let err = Matroid::from_bases(4, &[vec![1, 2], vec![3, 4]]).unwrap_err();
        assert!(matches!(err, MatroidError::BasisExchange { .. }));
        assert_eq!(
            Matroid::from_bases(3, &[vec![1], vec![2, 3]]).unwrap_err(),
            MatroidError::MixedBasisSizes
        );
        assert_eq!(Matroid::from_bases(3, &[]).unwrap_err(), MatroidError::NoBases);
        assert!(matches!(
            Matroid::from_bases(3, &[vec![4]]),
            Err(MatroidError::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn doubled_triangle() {
        let m = Matroid::graphic(3, &[(1, 2), (1, 2), (2, 3), (2, 3), (3, 1), (3, 1)]).unwrap();
        assert_eq!(m.rank(), 2);
        let rank_one_pairs: Vec<Subset> = (0u32..64)
            .filter(|&s| s.count_ones() == 2 && m.rank_of(s) == 1)
            .collect();
        assert_eq!(rank_one_pairs, vec![set(&[1, 2]), set(&[3, 4]), set(&[5, 6])]);
    }

    #[test]
    fn graphic_self_loop_and_bad_vertex() {
        let m = Matroid::graphic(2, &[(1, 1), (1, 2)]).unwrap();
        assert_eq!(m.rank_of(set(&[1])), 0);
        assert!(matches!(
            Matroid::graphic(2, &[(1, 3)]),
            Err(MatroidError::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn direct_sums() {
        let m = Matroid::direct_sum(
            &Matroid::uniform(1, 1).unwrap(),
            &Matroid::uniform(0, 1).unwrap(),
        )
        .unwrap();
        assert_eq!(m.rank_of(set(&[1])), 1);
        assert_eq!(m.rank_of(set(&[2])), 0);
        assert_eq!(m.rank_of(set(&[1, 2])), 1);
        assert!(m.is_free_plus_loops());

        let u23 = Matroid::uniform(2, 3).unwrap();
        let twice = Matroid::direct_sum(&u23, &u23).unwrap();
        assert_eq!((twice.n(), twice.rank()), (6, 4));

        let big = Matroid::uniform(2, 7).unwrap();
        assert!(matches!(
            Matroid::direct_sum(&big, &big),
            Err(MatroidError::GroundSetSize { n: 14, .. })
        ));
    }

    #[test]
    fn flats_of_small_matroids() {
        let free = Matroid::uniform(3, 3).unwrap();
        assert_eq!(free.flats().iter().map(Vec::len).sum::<usize>(), 8);

        let m = Matroid::direct_sum(
            &Matroid::uniform(1, 1).unwrap(),
            &Matroid::uniform(0, 1).unwrap(),
        )
        .unwrap();
        assert_eq!(m.flats(), vec![vec![set(&[2])], vec![set(&[1, 2])]]);
    }

    #[test]
    fn k4_flats_by_brute_force_closure() {
        let m = k4();
        // independent recount: S is a flat iff no outside element keeps the rank
        let mut rank2 = 0;
        for s in 0u32..64 {
            let closed = (0..6).all(|e| s >> e & 1 == 1 || m.rank_of(s | 1 << e) > m.rank_of(s));
            if closed && m.rank_of(s) == 2 {
                rank2 += 1;
            }
        }
        assert_eq!(rank2, 7);
        assert_eq!(m.flats()[2].len(), 7);
        assert_eq!(m.flats()[1].len(), 6);
    }

    #[test]
    fn circuits() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let triples: Vec<Subset> = (0u32..16).filter(|s| s.count_ones() == 3).collect();
        assert_eq!(u24.circuits(), triples);

        let m = k4();
        let small: Vec<Subset> = m.circuits().into_iter().filter(|c| c.count_ones() == 3).collect();
        assert_eq!(
            small,
            vec![set(&[1, 2, 6]), set(&[1, 4, 5]), set(&[2, 3, 5]), set(&[3, 4, 6])]
                .into_iter()
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect::<Vec<_>>()
        );

        let looped = Matroid::from_bases(2, &[vec![1]]).unwrap();
        assert_eq!(looped.circuits(), vec![set(&[2])]);
    }

    #[test]
    fn higgs_lift_of_k4() {
        let m = k4();
        for s in 0u32..64 {
            assert_eq!(m.higgs_rank(0, s).unwrap(), 0);
            assert_eq!(m.higgs_rank(1, s).unwrap(), m.rank_of(s).min(1));
            let step1 = m.higgs_rank(2, s).unwrap() - m.higgs_rank(1, s).unwrap();
            assert_eq!(step1 == 1, s != 0 && m.rank_of(s) >= 2);
            let step4 = m.higgs_rank(5, s).unwrap() - m.higgs_rank(4, s).unwrap();
            assert_eq!(step4 == 1, m.nullity_of(s) >= 2);
            assert_eq!(m.higgs_rank(3, s).unwrap(), m.rank_of(s));
            assert_eq!(m.higgs_rank(6, s).unwrap(), s.count_ones() as usize);
        }
        assert!(matches!(m.higgs_rank(7, 0), Err(MatroidError::HiggsIndex { .. })));
    }

    #[test]
    fn automorphism_groups() {
        assert_eq!(Matroid::uniform(2, 4).unwrap().automorphisms().unwrap().len(), 24);
        let auts = k4().automorphisms().unwrap();
        assert_eq!(auts.len(), 24);
        assert!(auts.windows(2).all(|w| w[0] < w[1]));
        // (1 6)(3 5) is listed among the graph symmetries
        assert!(auts.contains(&Permutation::from_one_line(&[6, 2, 5, 4, 3, 1])));
        let m = Matroid::direct_sum(
            &Matroid::uniform(1, 1).unwrap(),
            &Matroid::uniform(0, 1).unwrap(),
        )
        .unwrap();
        assert_eq!(m.automorphisms().unwrap(), vec![Permutation::identity(2)]);
        assert!(matches!(
            Matroid::uniform(1, 9).unwrap().automorphisms(),
            Err(MatroidError::TooLargeForAutomorphisms { .. })
        ));
    }

    #[test]
    fn rejects_non_submodular_table() {
        // rank 1 on every nonempty set of {1,2} except the full set with rank 0
        let err = Matroid::from_rank_table(2, vec![0, 1, 1, 0], "bad").unwrap_err();
        assert!(matches!(err, MatroidError::RankAxiom { .. }));
    }
}
