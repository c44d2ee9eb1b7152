//! Named matroids, the Hilbert-function table with its expected values, the
//! isomorphism classes of small matroids, and the JSON input format.

use std::collections::BTreeMap;

use serde::Deserialize;
use thiserror::Error;

use crate::matroid::{Matroid, MatroidError, Subset};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("unknown builtin matroid {0:?}")]
    UnknownBuiltin(String),
    #[error("invalid matroid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("direct sum needs at least one part")]
    EmptySum,
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// The JSON description of a matroid; elements and vertices are 1-indexed.
#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum MatroidSpec {
    Uniform { r: usize, n: usize },
    Bases { n: usize, bases: Vec<Vec<usize>> },
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
    DirectSum { parts: Vec<MatroidSpec> },
}

impl MatroidSpec {
    pub fn build(&self) -> Result<Matroid, CorpusError> {
        Ok(match self {
            MatroidSpec::Uniform { r, n } => Matroid::uniform(*r, *n)?,
            MatroidSpec::Bases { n, bases } => Matroid::from_bases(*n, bases)?,
            MatroidSpec::Graphic { vertices, edges } => Matroid::graphic(*vertices, edges)?,
            MatroidSpec::DirectSum { parts } => {
                if parts.is_empty() {
                    return Err(CorpusError::EmptySum);
                }
                let parts = parts.iter().map(MatroidSpec::build).collect::<Result<Vec<_>, _>>()?;
                Matroid::direct_sum_all(&parts)?
            }
        })
    }
}

pub fn matroid_from_json(text: &str) -> Result<Matroid, CorpusError> {
    let spec: MatroidSpec = serde_json::from_str(text)?;
    spec.build()
}

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: &[&str] = &["uniform:R:N", "m1", "m2", "m3", "m4", "mk4", "fano_minus"];

/// Resolves a builtin name: `uniform:R:N`, `m1`..`m4`, `mk4`, `fano_minus`.
pub fn builtin(name: &str) -> Result<Matroid, CorpusError> {
    let unknown = || CorpusError::UnknownBuiltin(name.to_string());
    if let Some(rest) = name.strip_prefix("uniform:") {
        let (r, n) = rest.split_once(':').ok_or_else(unknown)?;
        let r = r.parse().map_err(|_| unknown())?;
        let n = n.parse().map_err(|_| unknown())?;
        return Ok(Matroid::uniform(r, n)?);
    }
    match name {
        "m1" => m1(),
        "m2" => m2(),
        "m3" => m3(),
        "m4" => m4(),
        "mk4" => mk4(),
        "fano_minus" => fano_minus(),
        _ => Err(unknown()),
    }
}

fn all_but(n: usize, r: usize, non_bases: &[&[usize]]) -> Vec<Vec<usize>> {
    (0..1u32 << n)
        .filter(|s| s.count_ones() as usize == r)
        .map(crate::matroid::subset_elements)
        .filter(|b| !non_bases.iter().any(|nb| nb == &b.as_slice()))
        .collect()
}

/// Rank 2 on four elements with the single non-basis `{1,2}`.
pub fn m1() -> Result<Matroid, CorpusError> {
    Ok(Matroid::from_bases(4, &all_but(4, 2, &[&[1, 2]]))?.with_label("M1"))
}

/// Rank 3 on five elements with non-bases `{1,2,3}` and `{3,4,5}`.
pub fn m2() -> Result<Matroid, CorpusError> {
    Ok(Matroid::from_bases(5, &all_but(5, 3, &[&[1, 2, 3], &[3, 4, 5]]))?.with_label("M2"))
}

/// The triangle with every edge doubled.
pub fn m3() -> Result<Matroid, CorpusError> {
    let edges = [(1, 2), (1, 2), (2, 3), (2, 3), (3, 1), (3, 1)];
    Ok(Matroid::graphic(3, &edges)?.with_label("M3"))
}

/// The pentagon with one doubled side.
pub fn m4() -> Result<Matroid, CorpusError> {
    let edges = [(1, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)];
    Ok(Matroid::graphic(5, &edges)?.with_label("M4"))
}

/// `M(K_4)` with vertices `a, b, c, d` = 1..4 and edges
/// `1 = ab, 2 = bc, 3 = cd, 4 = da, 5 = bd, 6 = ac`.
pub fn mk4() -> Result<Matroid, CorpusError> {
    let edges = [(1, 2), (2, 3), (3, 4), (4, 1), (2, 4), (1, 3)];
    Ok(Matroid::graphic(4, &edges)?.with_label("M(K4)"))
}

/// Lines of the Fano plane; the non-Fano matroid drops the last one.
pub const FANO_LINES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 6, 7],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 5, 6],
];

/// The non-Fano matroid: rank 3 on seven elements whose non-bases are the
/// first six Fano lines, so `{3,5,6}` is a basis.
pub fn fano_minus() -> Result<Matroid, CorpusError> {
    let lines: Vec<&[usize]> = FANO_LINES[..6].iter().map(|l| l.as_slice()).collect();
    Ok(Matroid::from_bases(7, &all_but(7, 3, &lines))?.with_label("F7-"))
}

/// `U_{r_1,n_1} ⊕ U_{r_2,n_2} ⊕ ···`, labelled like `U01+U12`.
pub fn uniform_sum(parts: &[(usize, usize)]) -> Result<Matroid, CorpusError> {
    let ms = parts
        .iter()
        .map(|&(r, n)| Matroid::uniform(r, n))
        .collect::<Result<Vec<_>, _>>()?;
    let label = parts
        .iter()
        .map(|(r, n)| format!("U{r}{n}"))
        .collect::<Vec<_>>()
        .join("+");
    Ok(Matroid::direct_sum_all(&ms)?.with_label(label))
}

/// One row of the Hilbert-function table. Uniform rows stand for every rank.
#[derive(Debug, Clone)]
pub struct Table1Row {
    pub label: String,
    pub matroids: Vec<Matroid>,
    pub expected: Vec<usize>,
}

const TABLE1_SUMS: &[(&[(usize, usize)], &[usize])] = &[
    (&[(0, 1), (1, 1)], &[1, 1]),
    (&[(0, 1), (1, 2)], &[1, 3, 1]),
    (&[(0, 1), (0, 1), (1, 1)], &[1, 3, 1]),
    (&[(0, 1), (1, 1), (1, 1)], &[1, 3, 1]),
    (&[(1, 1), (1, 2)], &[1, 3, 1]),
    (&[(0, 1), (1, 3)], &[1, 4, 5, 1]),
    (&[(0, 1), (0, 1), (1, 2)], &[1, 5, 6, 1]),
    (&[(0, 1), (0, 1), (0, 1), (1, 1)], &[1, 5, 5, 1]),
    (&[(1, 2), (1, 2)], &[1, 4, 4, 1]),
    (&[(0, 1), (2, 3)], &[1, 5, 5, 1]),
    (&[(1, 1), (1, 3)], &[1, 5, 5, 1]),
    (&[(0, 1), (1, 1), (1, 2)], &[1, 6, 8, 1]),
    (&[(0, 1), (0, 1), (1, 1), (1, 1)], &[1, 6, 6, 1]),
    (&[(1, 1), (2, 3)], &[1, 4, 5, 1]),
    (&[(1, 1), (1, 1), (1, 2)], &[1, 5, 6, 1]),
    (&[(0, 1), (1, 1), (1, 1), (1, 1)], &[1, 5, 5, 1]),
    (&[(0, 1), (0, 1), (1, 3)], &[1, 6, 12, 9, 1]),
    (&[(0, 1), (0, 1), (0, 1), (1, 2)], &[1, 7, 14, 9, 1]),
    (&[(0, 1), (0, 1), (0, 1), (0, 1), (1, 1)], &[1, 7, 12, 7, 1]),
    (&[(0, 1), (2, 4)], &[1, 6, 11, 7, 1]),
    (&[(0, 1), (1, 1), (2, 3)], &[1, 8, 18, 12, 1]),
    (&[(1, 1), (3, 4)], &[1, 5, 9, 7, 1]),
    (&[(0, 1), (0, 1), (0, 1), (0, 1), (1, 2)], &[1, 9, 25, 28, 12, 1]),
    (&[(0, 1), (1, 1), (2, 4)], &[1, 10, 32, 39, 16, 1]),
    (&[(2, 3), (2, 3)], &[1, 7, 18, 20, 8, 1]),
    (&[(1, 1), (4, 5)], &[1, 6, 14, 16, 9, 1]),
];

/// Every row of the table, in the order: uniform row, then the remaining
/// matroids on the same ground set, for `n = 1..7`.
pub fn table1() -> Result<Vec<Table1Row>, CorpusError> {
    let uniform_rows: [&[usize]; 6] = [
        &[1],
        &[1, 1],
        &[1, 2, 1],
        &[1, 3, 3, 1],
        &[1, 4, 6, 4, 1],
        &[1, 5, 10, 10, 5, 1],
    ];
    let named: [(fn() -> Result<Matroid, CorpusError>, &[usize]); 6] = [
        (m1, &[1, 4, 5, 1]),
        (m2, &[1, 5, 9, 7, 1]),
        (m3, &[1, 6, 14, 16, 9, 1]),
        (mk4, &[1, 6, 14, 16, 8, 1]),
        (m4, &[1, 8, 22, 25, 11, 1]),
        (fano_minus, &[1, 7, 20, 30, 25, 11, 1]),
    ];
    let mut rows: BTreeMap<usize, Vec<Table1Row>> = BTreeMap::new();
    for (k, expected) in uniform_rows.iter().enumerate() {
        let n = k + 1;
        let matroids = (0..=n).map(|r| Matroid::uniform(r, n)).collect::<Result<Vec<_>, _>>()?;
        rows.entry(n).or_default().push(Table1Row {
            label: format!("U_{{r,{n}}}"),
            matroids,
            expected: expected.to_vec(),
        });
    }
    for (parts, expected) in TABLE1_SUMS {
        let m = uniform_sum(parts)?;
        rows.entry(m.n()).or_default().push(Table1Row {
            label: m.label().to_string(),
            matroids: vec![m],
            expected: expected.to_vec(),
        });
    }
    for (build, expected) in named {
        let m = build()?;
        rows.entry(m.n()).or_default().push(Table1Row {
            label: m.label().to_string(),
            matroids: vec![m],
            expected: expected.to_vec(),
        });
    }
    Ok(rows.into_values().flatten().collect())
}

/// The rank table of `m` relabelled by `perm` (0-indexed images).
fn permuted_ranks(m: &Matroid, perm: &[usize]) -> Vec<u8> {
    let mut out = vec![0u8; 1 << m.n()];
    for s in 0..=m.full_set() {
        let mut t: Subset = 0;
        for (i, &p) in perm.iter().enumerate() {
            if s >> i & 1 == 1 {
                t |= 1 << p;
            }
        }
        out[t as usize] = m.rank_of(s) as u8;
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Lexicographically least relabelled rank table; equal exactly for
/// isomorphic matroids on the same ground set.
pub fn canonical_form(m: &Matroid) -> Vec<u8> {
    permutations(m.n())
        .iter()
        .map(|p| permuted_ranks(m, p))
        .min()
        .expect("at least one permutation")
}

/// One representative of every isomorphism class of matroids on `n`
/// elements, ordered by rank and then by canonical form. Brute force over
/// families of `r`-subsets, so `n <= 5`.
pub fn isomorphism_classes(n: usize) -> Result<Vec<Matroid>, CorpusError> {
    assert!((1..=5).contains(&n), "enumeration is limited to 1 <= n <= 5");
    let mut out = Vec::new();
    for r in 0..=n {
        let candidates: Vec<Vec<usize>> = (0..1u32 << n)
            .filter(|s| s.count_ones() as usize == r)
            .map(crate::matroid::subset_elements)
            .collect();
        let mut classes: BTreeMap<Vec<u8>, Matroid> = BTreeMap::new();
        for family in 1u64..1 << candidates.len() {
            let bases: Vec<Vec<usize>> = candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| family >> i & 1 == 1)
                .map(|(_, b)| b.clone())
                .collect();
            let Ok(m) = Matroid::from_bases(n, &bases) else { continue };
            let key = canonical_form(&m);
            classes.entry(key).or_insert(m);
        }
        for (k, m) in classes.into_values().enumerate() {
            out.push(m.with_label(format!("n{n}r{r}#{k}")));
        }
    }
    Ok(out)
}

/// All matroids on at most five elements up to isomorphism, followed by the
/// named six- and seven-element matroids.
pub fn corpus() -> Result<Vec<Matroid>, CorpusError> {
    let mut out = Vec::new();
    for n in 1..=5 {
        out.extend(isomorphism_classes(n)?);
    }
    out.extend([m3()?, mk4()?, m4()?, fano_minus()?]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::subset_from_elements;

    fn set(e: &[usize], n: usize) -> Subset {
        subset_from_elements(e, n).unwrap()
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| isomorphism_classes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 4, 8, 17, 38]);
    }

    #[test]
    fn table_rows_cover_small_classes() {
        // the table lists every matroid on at most four elements
        let rows = table1().unwrap();
        for n in 1..=4 {
            let listed: std::collections::BTreeSet<Vec<u8>> = rows
                .iter()
                .flat_map(|r| r.matroids.iter())
                .filter(|m| m.n() == n)
                .map(canonical_form)
                .collect();
            assert_eq!(listed.len(), isomorphism_classes(n).unwrap().len(), "n={n}");
        }
    }

    #[test]
    fn named_matroids() {
        let k4 = mk4().unwrap();
        assert_eq!(k4.rank(), 3);
        let mut triangles: Vec<Subset> = k4.circuits().into_iter().filter(|c| c.count_ones() == 3).collect();
        let mut expected = vec![set(&[1, 2, 6], 6), set(&[1, 4, 5], 6), set(&[2, 3, 5], 6), set(&[3, 4, 6], 6)];
        triangles.sort_unstable();
        expected.sort_unstable();
        assert_eq!(triangles, expected);
        let f = fano_minus().unwrap();
        assert_eq!(f.rank(), 3);
        assert_eq!(f.rank_of(set(&[3, 5, 6], 7)), 3);
        assert_eq!(f.rank_of(set(&[1, 2, 3], 7)), 2);
        assert_eq!(f.flats()[2].len(), 6 + 3);
        assert_eq!(m4().unwrap().rank(), 4);
        assert_eq!(m3().unwrap().rank(), 2);
        assert_eq!(m2().unwrap().flats()[2].len(), 2 + 4);
        assert!(m1().unwrap().is_loopless());
    }

    #[test]
    fn builtin_names() {
        assert_eq!(builtin("uniform:2:4").unwrap().rank(), 2);
        assert!(builtin("uniform:5:4").is_err());
        assert!(builtin("uniform:x").is_err());
        assert!(builtin("k5").is_err());
        for name in ["m1", "m2", "m3", "m4", "mk4", "fano_minus"] {
            assert!(builtin(name).is_ok());
        }
    }

    #[test]
    fn json_specs() {
        let m = matroid_from_json(r#"{"type":"uniform","r":2,"n":4}"#).unwrap();
        assert_eq!(m.rank(), 2);
        let m = matroid_from_json(r#"{"type":"bases","n":2,"bases":[[1]]}"#).unwrap();
        assert_eq!(m.loops(), 0b10);
        let m = matroid_from_json(
            r#"{"type":"graphic","vertices":4,"edges":[[1,2],[2,3],[3,4],[4,1],[2,4],[1,3]]}"#,
        )
        .unwrap();
        assert_eq!(canonical_form(&m), canonical_form(&mk4().unwrap()));
        let m = matroid_from_json(
            r#"{"type":"direct_sum","parts":[{"type":"uniform","r":1,"n":1},{"type":"uniform","r":0,"n":1}]}"#,
        )
        .unwrap();
        assert_eq!((m.n(), m.rank()), (2, 1));
        assert!(matches!(matroid_from_json(r#"{"type":"bases","n":3,"bases":[[1],[2,3]]}"#), Err(CorpusError::Matroid(_))));
        assert!(matches!(matroid_from_json(r#"{"type":"cube"}"#), Err(CorpusError::Json(_))));
        assert!(matches!(matroid_from_json(r#"{"type":"direct_sum","parts":[]}"#), Err(CorpusError::EmptySum)));
    }
}
