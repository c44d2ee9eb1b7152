//! Exact integer linear algebra: Bareiss elimination for ranks and
//! determinants of dense matrices, and an incremental sparse echelon form
//! used when spans are grown one vector at a time.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer vector, sorted by column with no explicit zeros.
pub type SparseVec = Vec<(u32, BigInt)>;

/// Rank of a dense integer matrix by fraction-free Bareiss elimination.
///
/// Rows may have different lengths; missing entries are zero.
pub fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(cols, BigInt::zero());
            r
        })
        .collect();
    bareiss_in_place(&mut a, cols).0
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn bareiss_determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return BigInt::one();
    }
    let mut a = rows.to_vec();
    let (rank, sign) = bareiss_in_place(&mut a, n);
    if rank < n {
        BigInt::zero()
    } else if sign {
        -a[n - 1][n - 1].clone()
    } else {
        a[n - 1][n - 1].clone()
    }
}

// Returns the rank and whether an odd number of row swaps happened.
fn bareiss_in_place(a: &mut [Vec<BigInt>], cols: usize) -> (usize, bool) {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut swapped = false;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            swapped = !swapped;
        }
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..cols {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    (rank, swapped)
}

/// Returns `a * x + b * y` for sparse vectors.
pub fn sparse_combine(a: &BigInt, x: &[(u32, BigInt)], b: &BigInt, y: &[(u32, BigInt)]) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take = match (x.get(i), y.get(j)) {
            (Some(u), Some(v)) => u.0.cmp(&v.0),
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, _) => std::cmp::Ordering::Greater,
        };
        let (col, val) = match take {
            std::cmp::Ordering::Less => {
                i += 1;
                (x[i - 1].0, a * &x[i - 1].1)
            }
            std::cmp::Ordering::Greater => {
                j += 1;
                (y[j - 1].0, b * &y[j - 1].1)
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
                (x[i - 1].0, a * &x[i - 1].1 + b * &y[j - 1].1)
            }
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    out
}

fn make_primitive(v: &mut SparseVec) {
    let Some(first) = v.first() else { return };
    let mut g = first.1.abs();
    for (_, c) in v.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(c);
    }
    let negate = first.1.is_negative();
    if g.is_one() && !negate {
        return;
    }
    for (_, c) in v.iter_mut() {
        *c = &*c / &g;
        if negate {
            *c = -&*c;
        }
    }
}

/// Row echelon form over the integers, grown one vector at a time.
///
/// Rows are kept primitive (content 1, positive leading entry) and have
/// pairwise distinct leading columns. Elimination is fraction free.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    by_lead: std::collections::BTreeMap<u32, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows; the result is zero iff `v`
    /// lies in their rational span.
    pub fn reduce(&self, v: &[(u32, BigInt)]) -> SparseVec {
        let mut v: SparseVec = v.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
        make_primitive(&mut v);
        let mut start = 0;
        loop {
            // leading entries only move right, so skip columns already cleared
            let pos = v[start..]
                .iter()
                .position(|(c, _)| self.by_lead.contains_key(c))
                .map(|p| p + start);
            let Some(pos) = pos else { return v };
            let (col, coeff) = v[pos].clone();
            let row = &self.rows[self.by_lead[&col]];
            let lead = &row[0].1;
            let g = lead.gcd(&coeff);
            let (mv, mr) = (lead / &g, -(&coeff / &g));
            v = sparse_combine(&mv, &v, &mr, row);
            make_primitive(&mut v);
            start = v.iter().position(|(c, _)| *c > col).unwrap_or(v.len());
            if v.is_empty() {
                return v;
            }
        }
    }

    pub fn contains(&self, v: &[(u32, BigInt)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` if it is independent of the current rows; returns whether it was.
    pub fn insert(&mut self, v: &[(u32, BigInt)]) -> bool {
        let mut r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        // every pivot column has been cleared, so the leading column is free
        make_primitive(&mut r);
        self.by_lead.insert(r[0].0, self.rows.len());
        self.rows.push(r);
        true
    }
}

/// Rank of a list of sparse vectors.
pub fn sparse_rank<'a>(vectors: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Converts a dense vector to sparse form.
pub fn to_sparse(dense: &[BigInt]) -> SparseVec {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as u32, c.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_ranks_and_determinants() {
        assert_eq!(bareiss_rank(&[]), 0);
        assert_eq!(bareiss_rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(bareiss_rank(&m(&[&[0, 0, 3], &[0, 2, 0], &[1, 0, 0]])), 3);
        assert_eq!(bareiss_determinant(&m(&[&[2, 1], &[1, 1]])), BigInt::from(1));
        assert_eq!(bareiss_determinant(&m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            bareiss_determinant(&m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])),
            BigInt::from(6)
        );
        assert!(bareiss_determinant(&m(&[&[1, 2], &[2, 4]])).is_zero());
    }

    // brute-force rank over Q via rational Gaussian elimination on f64-free fractions
    fn oracle_rank(rows: &[Vec<i64>]) -> usize {
        use num_rational::BigRational;
        let mut a: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let cols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else { continue };
            a.swap(p, rank);
            for r in 0..a.len() {
                if r != rank && !a[r][c].is_zero() {
                    let f = &a[r][c] / &a[rank][c];
                    for j in 0..cols {
                        let v = &a[rank][j] * &f;
                        a[r][j] -= v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn bareiss_and_echelon_agree_with_rational_elimination(
            rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 0..7)
        ) {
            let big: Vec<Vec<BigInt>> =
                rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            let expected = oracle_rank(&rows);
            prop_assert_eq!(bareiss_rank(&big), expected);
            let sparse: Vec<SparseVec> = big.iter().map(|r| to_sparse(r)).collect();
            prop_assert_eq!(sparse_rank(&sparse), expected);
        }

        #[test]
        fn echelon_membership(
            rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..5),
            coeffs in prop::collection::vec(-4i64..=4, 5)
        ) {
            let mut e = Echelon::new();
            let sparse: Vec<SparseVec> = rows
                .iter()
                .map(|r| to_sparse(&r.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()))
                .collect();
            for v in &sparse {
                e.insert(v);
            }
            let mut combo = vec![BigInt::zero(); 4];
            for (r, c) in rows.iter().zip(&coeffs) {
                for (j, x) in r.iter().enumerate() {
                    combo[j] += BigInt::from(x * c);
                }
            }
            prop_assert!(e.contains(&to_sparse(&combo)));
        }
    }
}
