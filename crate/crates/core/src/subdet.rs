//! Generic matrices, selections of minors and their symmetries.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grading::{Grading, GradingMode};
use crate::groebner::buchberger;
use crate::ideal::Ideal;
use crate::monomial::{MonomialOrder, VariableIndex};
use crate::poly::{Polynomial, VarLabels};

/// The `m x n` matrix of indeterminates `x_{ij}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenericMatrix {
    pub m: usize,
    pub n: usize,
}

impl GenericMatrix {
    pub fn new(m: usize, n: usize) -> Self {
        GenericMatrix { m, n }
    }

    pub fn nvars(&self) -> usize {
        self.m * self.n
    }

    pub fn cell(&self, row: usize, col: usize) -> VariableIndex {
        assert!((1..=self.m).contains(&row) && (1..=self.n).contains(&col));
        VariableIndex::new(row, col)
    }

    pub fn var(&self, row: usize, col: usize) -> usize {
        self.cell(row, col).position(self.n)
    }

    pub fn labels(&self) -> VarLabels {
        VarLabels::matrix(self.m, self.n)
    }

    pub fn grading(&self, mode: GradingMode) -> Grading {
        Grading::new(mode, self.m, self.n)
    }
}

/// A `t x t` minor given by strictly increasing 1-based row and column lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Minor {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Self {
        Minor { rows, cols }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    fn shares_variable(&self, other: &Minor) -> bool {
        self.rows.iter().any(|r| other.rows.contains(r)) && self.cols.iter().any(|c| other.cols.contains(c))
    }
}

impl fmt::Display for Minor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rows={:?} cols={:?}", self.rows, self.cols)
    }
}

fn check_indices(list: &[usize], bound: usize, what: &str, k: usize) -> Result<()> {
    if list.iter().any(|&x| x == 0 || x > bound) {
        return Err(Error::OutOfRange(format!("minor {k}: {what} {list:?} outside [1, {bound}]")));
    }
    if list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotIncreasing(format!("minor {k}: {what} {list:?}")));
    }
    Ok(())
}

/// Determinant of the submatrix on `rows x cols`, by the Leibniz expansion.
pub fn minor_polynomial<F: Field>(x: &GenericMatrix, rows: &[usize], cols: &[usize]) -> Result<Polynomial<F>> {
    if rows.len() != cols.len() || rows.is_empty() {
        return Err(Error::OutOfRange(format!("minor needs equal nonzero sizes, got {rows:?} x {cols:?}")));
    }
    check_indices(rows, x.m, "rows", 0)?;
    check_indices(cols, x.n, "cols", 0)?;
    let order = MonomialOrder::DegLex;
    let nvars = x.nvars();
    let mut terms = Vec::new();
    for (perm, sign) in permutations(rows.len()) {
        let mut exps = alloc::vec![0u32; nvars];
        for (k, &p) in perm.iter().enumerate() {
            exps[x.var(rows[k], cols[p])] += 1;
        }
        terms.push((crate::monomial::Monomial::from_exponents(&exps)?, F::from_i64(sign)));
    }
    Ok(Polynomial::from_terms(nvars, order, terms))
}

/// All permutations of `0..n` in lexicographic order, with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let inversions = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| perm[a] > perm[b]).count();
        out.push((perm.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    out
}

/// A set of `t x t` minors of the `m x n` generic matrix, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorSelection {
    pub m: usize,
    pub n: usize,
    pub t: usize,
    minors: Vec<Minor>,
}

/// Which index family a restriction acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    Columns,
    Rows,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Two rows, `l` columns.
    TwoByL,
    /// `l` rows, two columns.
    LByTwo,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ShapeVerdict {
    Empty,
    Block { orientation: Orientation, rows: Vec<usize>, cols: Vec<usize>, l: usize },
    NotBlock,
}

impl ShapeVerdict {
    pub fn is_block(&self) -> bool {
        matches!(self, ShapeVerdict::Block { .. })
    }
}

impl fmt::Display for ShapeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeVerdict::Empty => write!(f, "Empty"),
            ShapeVerdict::NotBlock => write!(f, "NotBlock"),
            ShapeVerdict::Block { rows, cols, .. } => {
                let list = |v: &[usize]| v.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(",");
                write!(f, "Block {}x{} rows=[{}] cols=[{}]", rows.len(), cols.len(), list(rows), list(cols))
            }
        }
    }
}

fn subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == t {
            out.push((0..n).filter(|&i| mask & (1 << i) != 0).map(|i| i + 1).collect());
        }
    }
    out.sort();
    out
}

impl MinorSelection {
    /// Validates index ranges, sizes and duplicates, then sorts the minors.
    pub fn new(m: usize, n: usize, t: usize, minors: Vec<Minor>) -> Result<Self> {
        for (k, minor) in minors.iter().enumerate() {
            if minor.rows.len() != t || minor.cols.len() != t {
                return Err(Error::OutOfRange(format!("minor {k}: expected {t} rows and {t} columns")));
            }
            check_indices(&minor.rows, m, "rows", k)?;
            check_indices(&minor.cols, n, "cols", k)?;
            if minors[..k].contains(minor) {
                return Err(Error::DuplicateMinor(k));
            }
        }
        let mut minors = minors;
        minors.sort();
        Ok(MinorSelection { m, n, t, minors })
    }

    /// All `t x t` minors in lexicographic order (row set, then column set).
    pub fn all_minors(m: usize, n: usize, t: usize) -> Vec<Minor> {
        let mut out = Vec::new();
        for rows in subsets(m, t) {
            for cols in subsets(n, t) {
                out.push(Minor::new(rows.clone(), cols));
            }
        }
        out
    }

    pub fn full(m: usize, n: usize, t: usize) -> Self {
        MinorSelection { m, n, t, minors: Self::all_minors(m, n, t) }
    }

    pub fn matrix(&self) -> GenericMatrix {
        GenericMatrix::new(self.m, self.n)
    }

    pub fn minors(&self) -> &[Minor] {
        &self.minors
    }

    pub fn len(&self) -> usize {
        self.minors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minors.is_empty()
    }

    pub fn polynomials<F: Field>(&self) -> Vec<Polynomial<F>> {
        let x = self.matrix();
        self.minors.iter().map(|mi| minor_polynomial(&x, &mi.rows, &mi.cols).expect("validated minor")).collect()
    }

    /// The ideal in `k[X]`, graded by `mode`.
    pub fn ideal<F: Field>(&self, mode: GradingMode) -> Ideal<F> {
        let x = self.matrix();
        Ideal::new(
            self.polynomials(),
            x.grading(mode).variable_degrees(),
            x.labels(),
            (0..x.nvars()).map(|p| VariableIndex::from_position(p, self.n)).collect(),
        )
        .expect("minors are homogeneous")
    }

    fn with_minors(&self, minors: Vec<Minor>) -> Self {
        let mut minors = minors;
        minors.sort();
        minors.dedup();
        MinorSelection { m: self.m, n: self.n, t: self.t, minors }
    }

    /// Indices of the selected minors in [`MinorSelection::all_minors`] order.
    pub fn indices(&self) -> Vec<usize> {
        let all = Self::all_minors(self.m, self.n, self.t);
        self.minors.iter().map(|mi| all.iter().position(|a| a == mi).unwrap()).collect()
    }

    pub fn from_indices(m: usize, n: usize, t: usize, idx: &[usize]) -> Self {
        let all = Self::all_minors(m, n, t);
        let minors = idx.iter().map(|&i| all[i].clone()).collect();
        MinorSelection { m, n, t, minors }.with_minors_sorted()
    }

    fn with_minors_sorted(mut self) -> Self {
        self.minors.sort();
        self
    }

    /// Image under row and column permutations (0-based images of 1-based indices).
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let map = |list: &[usize], p: &[usize]| {
            let mut v: Vec<usize> = list.iter().map(|&i| p[i - 1] + 1).collect();
            v.sort_unstable();
            v
        };
        self.with_minors(self.minors.iter().map(|mi| Minor::new(map(&mi.rows, row_perm), map(&mi.cols, col_perm))).collect())
    }

    /// The selection seen in the transposed matrix.
    pub fn transposed(&self) -> Self {
        let minors = self.minors.iter().map(|mi| Minor::new(mi.cols.clone(), mi.rows.clone())).collect();
        MinorSelection { m: self.n, n: self.m, t: self.t, minors }.with_minors_sorted()
    }

    /// Label `M{k}` by position among all minors of the same size (row set
    /// major, column set minor); for 3 x 3 and t = 2 this is `M1..M9`.
    pub fn label(&self, minor: &Minor) -> Option<String> {
        Self::all_minors(self.m, self.n, self.t).iter().position(|a| a == minor).map(|k| format!("M{}", k + 1))
    }
}

impl fmt::Display for MinorSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} t={} {{", self.m, self.n, self.t)?;
        for (k, mi) in self.minors.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{mi}")?;
        }
        write!(f, "}}")
    }
}

fn require_t2(sel: &MinorSelection) -> Result<()> {
    if sel.t != 2 {
        return Err(Error::MinorSizeNotTwo(sel.t));
    }
    Ok(())
}

fn union(lists: impl Iterator<Item = Vec<usize>>) -> Vec<usize> {
    let mut v: Vec<usize> = lists.flatten().collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Decides whether the selection is exactly all `2 x 2` minors of a `2 x l`
/// or `l x 2` submatrix. Block verdicts are confirmed by ideal equality via
/// Groebner membership in both directions.
pub fn shape_classify<F: Field>(sel: &MinorSelection) -> Result<ShapeVerdict> {
    require_t2(sel)?;
    if sel.is_empty() {
        return Ok(ShapeVerdict::Empty);
    }
    let rows = union(sel.minors.iter().map(|mi| mi.rows.clone()));
    let cols = union(sel.minors.iter().map(|mi| mi.cols.clone()));
    let block_count = |l: usize| l * (l - 1) / 2;
    let candidate = if rows.len() == 2 && sel.len() == block_count(cols.len()) {
        Some(Orientation::TwoByL)
    } else if cols.len() == 2 && sel.len() == block_count(rows.len()) {
        Some(Orientation::LByTwo)
    } else {
        None
    };
    // every selected minor lies in the submatrix, so equal counts mean equal sets
    let x = sel.matrix();
    let block: Vec<Minor> = subsets(rows.len(), 2)
        .into_iter()
        .flat_map(|r| {
            let (rows, cols) = (&rows, &cols);
            subsets(cols.len(), 2)
                .into_iter()
                .map(move |c| Minor::new(r.iter().map(|&i| rows[i - 1]).collect(), c.iter().map(|&j| cols[j - 1]).collect()))
        })
        .collect();
    let confirm = || -> bool {
        let ours = sel.polynomials::<F>();
        let theirs: Vec<Polynomial<F>> =
            block.iter().map(|mi| minor_polynomial(&x, &mi.rows, &mi.cols).unwrap()).collect();
        let gb_ours = buchberger(&ours, x.nvars(), MonomialOrder::DegLex);
        let gb_theirs = buchberger(&theirs, x.nvars(), MonomialOrder::DegLex);
        theirs.iter().all(|p| gb_ours.contains(p)) && ours.iter().all(|p| gb_theirs.contains(p))
    };
    match candidate {
        Some(orientation) => {
            if !confirm() {
                return Err(Error::Internal(format!("combinatorial block {rows:?} x {cols:?} failed ideal equality")));
            }
            let l = match orientation {
                Orientation::TwoByL => cols.len(),
                Orientation::LByTwo => rows.len(),
            };
            Ok(ShapeVerdict::Block { orientation, rows, cols, l })
        }
        None => {
            if (rows.len() == 2 || cols.len() == 2) && confirm() {
                return Err(Error::Internal(format!("selection {sel} generates a block ideal")));
            }
            Ok(ShapeVerdict::NotBlock)
        }
    }
}

/// Minors whose column set (or row set) is exactly `{a, b}`.
pub fn restrict_pair(sel: &MinorSelection, axis: Axis, a: usize, b: usize) -> Result<MinorSelection> {
    require_t2(sel)?;
    let bound = match axis {
        Axis::Columns => sel.n,
        Axis::Rows => sel.m,
    };
    if !(1 <= a && a < b && b <= bound) {
        return Err(Error::OutOfRange(format!("pair ({a}, {b}) outside [1, {bound}]")));
    }
    let pair = [a, b];
    let minors = sel
        .minors
        .iter()
        .filter(|mi| match axis {
            Axis::Columns => mi.cols == pair,
            Axis::Rows => mi.rows == pair,
        })
        .cloned()
        .collect();
    Ok(sel.with_minors(minors))
}

/// Connected components of the variable-sharing graph on the minors.
pub fn disjoint_split(sel: &MinorSelection) -> Vec<MinorSelection> {
    let k = sel.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for a in 0..k {
        for b in a + 1..k {
            if sel.minors[a].shares_variable(&sel.minors[b]) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Minor>> = BTreeMap::new();
    for a in 0..k {
        let r = find(&mut parent, a);
        groups.entry(r).or_default().push(sel.minors[a].clone());
    }
    groups.into_values().map(|g| sel.with_minors(g)).collect()
}

/// Row-permutation x column-permutation (x transpose when square) images.
pub fn orbit(sel: &MinorSelection) -> Vec<MinorSelection> {
    let rows = permutations(sel.m);
    let cols = permutations(sel.n);
    let mut out = Vec::with_capacity(rows.len() * cols.len() * 2);
    for (rp, _) in &rows {
        for (cp, _) in &cols {
            let img = sel.permuted(rp, cp);
            if sel.m == sel.n {
                out.push(img.transposed());
            }
            out.push(img);
        }
    }
    out
}

/// Lexicographically least index vector in the orbit.
pub fn canonicalize(sel: &MinorSelection) -> MinorSelection {
    let mut best = sel.clone();
    let mut best_idx = sel.indices();
    for img in orbit(sel) {
        let idx = img.indices();
        if idx < best_idx {
            best_idx = idx;
            best = img;
        }
    }
    best
}

fn check_cap(m: usize, n: usize, t: usize, cap: usize) -> Result<usize> {
    let count = MinorSelection::all_minors(m, n, t).len();
    if count > cap {
        return Err(Error::CapExceeded { count, cap });
    }
    Ok(count)
}

/// Every subset of the minors (in bitmask order), or one representative per
/// symmetry orbit.
pub fn enumerate_selections(m: usize, n: usize, t: usize, up_to_symmetry: bool, cap: usize) -> Result<Vec<MinorSelection>> {
    if up_to_symmetry {
        return Ok(enumerate_orbits(m, n, t, cap)?.into_iter().map(|(s, _)| s).collect());
    }
    let count = check_cap(m, n, t, cap)?;
    Ok((0u64..(1 << count))
        .map(|mask| {
            let idx: Vec<usize> = (0..count).filter(|&i| mask & (1 << i) != 0).collect();
            MinorSelection::from_indices(m, n, t, &idx)
        })
        .collect())
}

/// Orbit representatives with orbit sizes, sorted by (size of selection, minors).
pub fn enumerate_orbits(m: usize, n: usize, t: usize, cap: usize) -> Result<Vec<(MinorSelection, usize)>> {
    let count = check_cap(m, n, t, cap)?;
    let mut reps: BTreeMap<(usize, Vec<Minor>), (MinorSelection, usize)> = BTreeMap::new();
    for mask in 0u64..(1 << count) {
        let idx: Vec<usize> = (0..count).filter(|&i| mask & (1 << i) != 0).collect();
        let c = canonicalize(&MinorSelection::from_indices(m, n, t, &idx));
        reps.entry((c.len(), c.minors.clone())).or_insert_with(|| (c, 0)).1 += 1;
    }
    Ok(reps.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::F32003;

    fn sel(m: usize, n: usize, minors: &[(&[usize], &[usize])]) -> MinorSelection {
        MinorSelection::new(m, n, 2, minors.iter().map(|(r, c)| Minor::new(r.to_vec(), c.to_vec())).collect()).unwrap()
    }

    #[test]
    fn determinants() {
        let x = GenericMatrix::new(3, 4);
        let p: Polynomial<F32003> = minor_polynomial(&x, &[1, 2, 3], &[1, 2, 3]).unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p.degree(), Some(3));
        let q: Polynomial<F32003> = minor_polynomial(&GenericMatrix::new(2, 3), &[1, 2], &[1, 3]).unwrap();
        assert_eq!(q.render(&VarLabels::matrix(2, 3)), "x_{1,1}*x_{2,3} - x_{1,3}*x_{2,1}");
        assert!(minor_polynomial::<F32003>(&x, &[2, 1], &[1, 2]).is_err());
        assert!(minor_polynomial::<F32003>(&x, &[1, 4], &[1, 2]).is_err());
    }

    #[test]
    fn validation() {
        let dup = MinorSelection::new(2, 3, 2, alloc::vec![Minor::new(alloc::vec![1, 2], alloc::vec![1, 2]); 2]);
        assert_eq!(dup, Err(Error::DuplicateMinor(1)));
    }

    #[test]
    fn shapes() {
        let single = sel(2, 3, &[(&[1, 2], &[1, 2])]);
        assert!(matches!(
            shape_classify::<F32003>(&single).unwrap(),
            ShapeVerdict::Block { orientation: Orientation::TwoByL, l: 2, .. }
        ));
        let full = MinorSelection::full(2, 3, 2);
        assert_eq!(format!("{}", shape_classify::<F32003>(&full).unwrap()), "Block 2x3 rows=[1,2] cols=[1,2,3]");
        let two = sel(2, 3, &[(&[1, 2], &[1, 2]), (&[1, 2], &[1, 3])]);
        assert_eq!(shape_classify::<F32003>(&two).unwrap(), ShapeVerdict::NotBlock);
        let column_block = sel(3, 3, &[(&[1, 2], &[2, 3]), (&[1, 3], &[2, 3]), (&[2, 3], &[2, 3])]);
        assert!(matches!(
            shape_classify::<F32003>(&column_block).unwrap(),
            ShapeVerdict::Block { orientation: Orientation::LByTwo, l: 3, .. }
        ));
        assert_eq!(shape_classify::<F32003>(&sel(2, 2, &[])).unwrap(), ShapeVerdict::Empty);
    }

    #[test]
    fn restriction_and_labels() {
        let full = MinorSelection::full(3, 3, 2);
        let r = restrict_pair(&full, Axis::Columns, 1, 2).unwrap();
        let labels: Vec<String> = r.minors().iter().map(|mi| full.label(mi).unwrap()).collect();
        assert_eq!(labels, ["M1", "M4", "M7"]);
        assert_eq!(restrict_pair(&r, Axis::Columns, 1, 2).unwrap(), r);
        assert!(restrict_pair(&full, Axis::Rows, 2, 4).is_err());
    }

    #[test]
    fn splits() {
        let pair = sel(2, 4, &[(&[1, 2], &[1, 2]), (&[1, 2], &[3, 4])]);
        assert_eq!(disjoint_split(&pair).len(), 2);
        let shared = sel(2, 3, &[(&[1, 2], &[1, 2]), (&[1, 2], &[1, 3])]);
        assert_eq!(disjoint_split(&shared).len(), 1);
        assert!(disjoint_split(&sel(2, 3, &[])).is_empty());
    }

    #[test]
    fn canonical_forms() {
        let s = sel(3, 3, &[(&[2, 3], &[2, 3])]);
        assert_eq!(canonicalize(&s), sel(3, 3, &[(&[1, 2], &[1, 2])]));
        let c = canonicalize(&s);
        assert_eq!(canonicalize(&c), c);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_selections(2, 3, 2, false, 12).unwrap().len(), 8);
        assert_eq!(enumerate_selections(2, 4, 2, false, 12).unwrap().len(), 64);
        assert_eq!(enumerate_selections(3, 3, 2, false, 12).unwrap().len(), 512);
        assert!(matches!(enumerate_selections(4, 4, 2, false, 12), Err(Error::CapExceeded { count: 36, cap: 12 })));
        let orbits = enumerate_orbits(2, 3, 2, 12).unwrap();
        assert_eq!(orbits.len(), 4);
        assert_eq!(orbits.iter().map(|o| o.1).sum::<usize>(), 8);
    }

    #[test]
    fn permutation_signs() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().map(|x| x.1).sum::<i64>(), 0);
    }
}
