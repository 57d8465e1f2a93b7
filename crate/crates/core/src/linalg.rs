//! Exact sparse linear algebra: echelon spaces, ranks, kernels.
//!
//! Vectors are sorted `(index, value)` lists over an arbitrary `u64` index
//! space, so callers can pack structured basis labels into the index.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::field::Field;

/// Sorted by index, no explicit zeros.
pub type SparseVec<F> = Vec<(u64, F)>;

/// `a + f * b`.
pub fn axpy<F: Field>(a: &SparseVec<F>, f: &F, b: &SparseVec<F>) -> SparseVec<F> {
    if f.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i].0 < b[j].0 {
            out.push(a[i].clone());
            i += 1;
        } else if a[i].0 > b[j].0 {
            out.push((b[j].0, f.mul(&b[j].1)));
            j += 1;
        } else {
            let v = a[i].1.add(&f.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(k, v)| (*k, f.mul(v))));
    out
}

pub fn scale<F: Field>(a: &SparseVec<F>, f: &F) -> SparseVec<F> {
    if f.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(k, v)| (*k, v.mul(f))).collect()
}

/// Builds a sparse vector from unsorted entries, summing duplicates.
pub fn collect<F: Field>(entries: impl IntoIterator<Item = (u64, F)>) -> SparseVec<F> {
    let mut map: BTreeMap<u64, F> = BTreeMap::new();
    for (k, v) in entries {
        accumulate(&mut map, k, &v);
    }
    map.into_iter().collect()
}

fn accumulate<F: Field>(map: &mut BTreeMap<u64, F>, k: u64, v: &F) {
    if v.is_zero() {
        return;
    }
    match map.get_mut(&k) {
        Some(e) => {
            *e = e.add(v);
            if e.is_zero() {
                map.remove(&k);
            }
        }
        None => {
            map.insert(k, v.clone());
        }
    }
}

#[derive(Clone, Debug)]
struct Row<F> {
    vec: SparseVec<F>,
    tag: SparseVec<F>,
}

/// Outcome of inserting a vector into an [`Echelon`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insertion<F> {
    /// The vector was independent and became row `usize`.
    Independent(usize),
    /// The vector was dependent; the payload is the tag relation
    /// `tag(v) - sum c_r tag(row_r)`, whose tagged combination vanishes.
    Dependent(SparseVec<F>),
}

/// A semi-echelon basis of a subspace. Every row has a distinct leading
/// index carrying coefficient one. Rows optionally carry a tag vector that
/// records how they were combined from the inserted vectors.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    rows: Vec<Row<F>>,
    pivots: HashMap<u64, usize>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon { rows: Vec::new(), pivots: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Top-reduces `v`, returning the residual and the accumulated tag
    /// combination `sum c_r tag(row_r)` where `v = sum c_r row_r + residual`.
    /// The residual is empty iff `v` lies in the span.
    pub fn reduce(&self, v: &SparseVec<F>) -> (SparseVec<F>, SparseVec<F>) {
        let mut acc: BTreeMap<u64, F> = v.iter().cloned().collect();
        let mut tag: BTreeMap<u64, F> = BTreeMap::new();
        let mut lower = 0u64;
        let mut residual_head = Vec::new();
        loop {
            let Some((&k, c)) = acc.range(lower..).next() else { break };
            let Some(&r) = self.pivots.get(&k) else {
                // top reduction stops here
                residual_head.push((k, c.clone()));
                break;
            };
            let f = c.clone();
            let row = &self.rows[r];
            for (idx, val) in &row.vec {
                accumulate(&mut acc, *idx, &f.mul(val).neg());
            }
            for (idx, val) in &row.tag {
                accumulate(&mut tag, *idx, &f.mul(val));
            }
            lower = k;
        }
        let residual = if residual_head.is_empty() {
            Vec::new()
        } else {
            acc.range(residual_head[0].0..).map(|(k, v)| (*k, v.clone())).collect()
        };
        (residual, tag.into_iter().collect())
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Inserts `v` with the given tag.
    pub fn insert(&mut self, v: &SparseVec<F>, tag: SparseVec<F>) -> Insertion<F> {
        let (residual, combo) = self.reduce(v);
        let relation = axpy(&tag, &F::one().neg(), &combo);
        if residual.is_empty() {
            return Insertion::Dependent(relation);
        }
        let inv = residual[0].1.inv().expect("nonzero lead");
        let row = Row { vec: scale(&residual, &inv), tag: scale(&relation, &inv) };
        let idx = self.rows.len();
        self.pivots.insert(row.vec[0].0, idx);
        self.rows.push(row);
        Insertion::Independent(idx)
    }

    /// Inserts without bookkeeping; returns whether the vector was independent.
    pub fn push(&mut self, v: &SparseVec<F>) -> bool {
        matches!(self.insert(v, Vec::new()), Insertion::Independent(_))
    }
}

/// Rank of a family of vectors.
pub fn rank<F: Field>(vectors: &[SparseVec<F>]) -> usize {
    let mut e = Echelon::new();
    vectors.iter().filter(|v| e.push(v)).count()
}

/// Kernel of the map sending basis vector `k` to `images[k]`, as vectors keyed
/// by `keys[k]`. Each kernel vector is the distinguished solution attached to
/// one non-pivot column: coefficient one there, zero on the other non-pivot
/// columns.
pub fn kernel<F: Field>(images: &[SparseVec<F>], keys: &[u64]) -> Vec<SparseVec<F>> {
    assert_eq!(images.len(), keys.len());
    let mut e = Echelon::new();
    let mut out = Vec::new();
    for (img, &key) in images.iter().zip(keys) {
        if let Insertion::Dependent(rel) = e.insert(img, alloc::vec![(key, F::one())]) {
            out.push(rel);
        }
    }
    out
}

/// Column-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<F> {
    pub nrows: usize,
    pub ncols: usize,
    /// Column `c` as a sparse vector over row indices.
    pub columns: Vec<SparseVec<F>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, columns: alloc::vec![Vec::new(); ncols] }
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        self.columns[c]
            .binary_search_by_key(&(r as u64), |e| e.0)
            .map(|i| self.columns[c][i].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    /// Product `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows);
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc = Vec::new();
                for (k, v) in col {
                    acc = axpy(&acc, v, &self.columns[*k as usize]);
                }
                acc
            })
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: other.ncols, columns }
    }

    pub fn rank(&self) -> usize {
        rank(&self.columns)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }
}
