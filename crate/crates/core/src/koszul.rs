//! The Koszul complex `K(x; R)` on the variables, its homology with explicit
//! cycle representatives, and the induced product.
//!
//! Chains of bidegree `(i, j)` are sparse vectors over the pairs
//! `(W, u)` of an `i`-subset `W` of the variables (a bitmask) and a standard
//! monomial `u` of degree `j - i`, packed as `mask << 32 | index(u)`.
//! Everything splits by multidegree, so linear algebra runs per block.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::linalg::{axpy, collect, kernel, Echelon, Insertion, SparseMatrix, SparseVec};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{DegKey, QuotientRing};

#[inline]
pub fn chain_key(mask: u32, mono: u32) -> u64 {
    ((mask as u64) << 32) | mono as u64
}

#[inline]
pub fn split_key(key: u64) -> (u32, u32) {
    ((key >> 32) as u32, key as u32)
}

/// Sign of `e_A ^ e_B` relative to `e_{A u B}` for disjoint `A`, `B`.
pub fn shuffle_sign(a: u32, b: u32) -> i64 {
    let mut inversions = 0;
    let mut rest = b;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if v >= 31 { 0 } else { a & !((1u32 << (v + 1)) - 1) };
        inversions += above.count_ones();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn add_keys(a: &DegKey, b: &DegKey) -> DegKey {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_keys(a: &DegKey, b: &DegKey) -> Option<DegKey> {
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
}

/// Chain given by ring elements in normal form, one per wedge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulChain<F> {
    pub hom_degree: usize,
    pub terms: BTreeMap<u32, Polynomial<F>>,
}

impl<F: Field> KoszulChain<F> {
    pub fn zero(hom_degree: usize) -> Self {
        KoszulChain { hom_degree, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, mask: u32, p: Polynomial<F>) {
        if p.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&mask) {
            Some(q) => q.add(&p),
            None => p,
        };
        if !sum.is_zero() {
            self.terms.insert(mask, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, p) in &other.terms {
            out.insert(*m, p.clone());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = KoszulChain::zero(self.hom_degree);
        for (m, p) in &self.terms {
            out.insert(*m, p.scale(c));
        }
        out
    }

    /// Text form `(p) * e[(r,c)]^e[(r,c)] + ...` using matrix cells.
    pub fn render(&self, ring: &QuotientRing<F>) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let labels = ring.ideal().labels();
        let cells = ring.ideal().cells();
        let mut parts = Vec::new();
        for (mask, p) in &self.terms {
            let wedge: Vec<String> =
                (0..32).filter(|v| mask & (1 << v) != 0).map(|v| format!("e[({},{})]", cells[v].row, cells[v].col)).collect();
            if wedge.is_empty() {
                parts.push(format!("({})", p.render(labels)));
            } else {
                parts.push(format!("({}) * {}", p.render(labels), wedge.join("^")));
            }
        }
        parts.join(" + ")
    }
}

/// Homology of one multidegree block.
#[derive(Clone, Debug)]
pub struct HomologyBlock<F> {
    pub i: usize,
    pub j: u32,
    pub alpha: DegKey,
    /// Dimension of the chain space `(K_i)_alpha`.
    pub chain_dim: usize,
    pub cycle_dim: usize,
    pub boundary_rank: usize,
    /// Cycle representatives of a basis of the homology.
    pub reps: Vec<SparseVec<F>>,
    // boundaries (untagged) followed by the representatives (tagged by index)
    space: Echelon<F>,
}

impl<F: Field> HomologyBlock<F> {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates of a cycle in the representative basis, or `None` if the
    /// vector is not in the span of cycles.
    pub fn coordinates(&self, cycle: &SparseVec<F>) -> Option<SparseVec<F>> {
        let (residual, coords) = self.space.reduce(cycle);
        residual.is_empty().then_some(coords)
    }

    /// Whether `chain` lies in the boundary space.
    pub fn is_boundary(&self, chain: &SparseVec<F>) -> bool {
        matches!(self.coordinates(chain), Some(c) if c.is_empty())
    }
}

/// The complex over a quotient ring truncated at a coefficient degree.
#[derive(Clone, Debug)]
pub struct KoszulComplex<F> {
    ring: QuotientRing<F>,
    // masks[i] = (mask, multidegree of the wedge)
    masks: Vec<Vec<(u32, DegKey)>>,
}

/// The map `d_i` on one bidegree with explicit row/column bases.
#[derive(Clone, Debug)]
pub struct DifferentialMatrix<F> {
    pub columns: Vec<u64>,
    pub rows: Vec<u64>,
    pub matrix: SparseMatrix<F>,
}

impl<F: Field> KoszulComplex<F> {
    /// Builds the quotient ring up to coefficient degree `max_coeff_degree`.
    pub fn new(ideal: &Ideal<F>, max_coeff_degree: u32) -> Self {
        Self::from_ring(QuotientRing::new(ideal, MonomialOrder::DegLex, max_coeff_degree))
    }

    pub fn from_ring(ring: QuotientRing<F>) -> Self {
        let n = ring.nvars();
        assert!(n <= 31, "wedge masks need fewer than 32 variables");
        let width = ring.key_width();
        let mut masks: Vec<Vec<(u32, DegKey)>> = alloc::vec![Vec::new(); n + 1];
        for mask in 0u32..(1u32 << n) {
            let mut key = alloc::vec![0u32; width];
            for v in 0..n {
                if mask & (1 << v) != 0 {
                    key = add_keys(&key, ring.var_key(v));
                }
            }
            masks[mask.count_ones() as usize].push((mask, key));
        }
        KoszulComplex { ring, masks }
    }

    pub fn ring(&self) -> &QuotientRing<F> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    fn coeff_degree(i: usize, j: u32) -> Option<u32> {
        j.checked_sub(i as u32)
    }

    /// Multidegrees occurring in `(K_i)_j`, sorted.
    pub fn blocks(&self, i: usize, j: u32) -> Vec<DegKey> {
        let Some(d) = Self::coeff_degree(i, j) else { return Vec::new() };
        if i > self.nvars() || d > self.ring.max_degree() {
            return Vec::new();
        }
        let mut out = BTreeSet::new();
        for (_, wkey) in &self.masks[i] {
            for beta in self.ring.groups(d).keys() {
                out.insert(add_keys(wkey, beta));
            }
        }
        out.into_iter().collect()
    }

    /// Basis keys of `(K_i)_alpha` in total degree `j`, ascending.
    pub fn block_basis(&self, i: usize, j: u32, alpha: &DegKey) -> Vec<u64> {
        let Some(d) = Self::coeff_degree(i, j) else { return Vec::new() };
        if i > self.nvars() || d > self.ring.max_degree() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (mask, wkey) in &self.masks[i] {
            if let Some(beta) = sub_keys(alpha, wkey) {
                for &k in self.ring.group(d, &beta) {
                    out.push(chain_key(*mask, k));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// `d(u e_W)` for a basis key of coefficient degree `d`.
    pub fn differential_of_key(&self, key: u64, d: u32) -> SparseVec<F> {
        let (mask, mono) = split_key(key);
        let mut entries = Vec::new();
        let mut s = 0;
        for v in 0..self.nvars() {
            if mask & (1 << v) == 0 {
                continue;
            }
            let sign = if s % 2 == 0 { F::one() } else { F::one().neg() };
            s += 1;
            let rest = mask & !(1 << v);
            for (k, c) in self.ring.mul_var(d, mono, v) {
                entries.push((chain_key(rest, *k as u32), c.mul(&sign)));
            }
        }
        collect(entries)
    }

    /// `d` applied to a chain vector of bidegree `(i, j)`.
    pub fn differential(&self, i: usize, j: u32, chain: &SparseVec<F>) -> SparseVec<F> {
        let d = j - i as u32;
        let mut acc = Vec::new();
        for (k, c) in chain {
            acc = axpy(&acc, c, &self.differential_of_key(*k, d));
        }
        acc
    }

    /// The matrix of `d_i : (K_i)_j -> (K_{i-1})_j`.
    pub fn differential_matrix(&self, i: usize, j: u32) -> DifferentialMatrix<F> {
        let mut columns = Vec::new();
        let mut rows = Vec::new();
        for alpha in self.blocks(i, j) {
            columns.extend(self.block_basis(i, j, &alpha));
        }
        if i > 0 {
            for alpha in self.blocks(i - 1, j) {
                rows.extend(self.block_basis(i - 1, j, &alpha));
            }
        }
        let row_index: HashMap<u64, u64> = rows.iter().enumerate().map(|(r, k)| (*k, r as u64)).collect();
        let d = j.saturating_sub(i as u32);
        let cols = columns
            .iter()
            .map(|k| {
                if i == 0 {
                    return Vec::new();
                }
                collect(self.differential_of_key(*k, d).into_iter().map(|(key, c)| (row_index[&key], c)))
            })
            .collect();
        let matrix = SparseMatrix { nrows: rows.len(), ncols: columns.len(), columns: cols };
        DifferentialMatrix { columns, rows, matrix }
    }

    /// Homology of the block `(i, j, alpha)` with representatives.
    pub fn homology_block(&self, i: usize, j: u32, alpha: &DegKey) -> HomologyBlock<F> {
        let d = j - i as u32;
        let basis = self.block_basis(i, j, alpha);
        let images: Vec<SparseVec<F>> =
            basis.iter().map(|k| if i == 0 { Vec::new() } else { self.differential_of_key(*k, d) }).collect();
        let cycles = kernel(&images, &basis);
        let mut space = Echelon::new();
        if i < self.nvars() && d >= 1 {
            for k in self.block_basis(i + 1, j, alpha) {
                space.push(&self.differential_of_key(k, d - 1));
            }
        }
        let boundary_rank = space.rank();
        let mut reps = Vec::new();
        for z in cycles.iter() {
            let tag = alloc::vec![(reps.len() as u64, F::one())];
            if let Insertion::Independent(_) = space.insert(z, tag) {
                reps.push(z.clone());
            }
        }
        HomologyBlock {
            i,
            j,
            alpha: alpha.clone(),
            chain_dim: basis.len(),
            cycle_dim: cycles.len(),
            boundary_rank,
            reps,
            space,
        }
    }

    /// All blocks of bidegree `(i, j)`.
    pub fn homology(&self, i: usize, j: u32) -> Vec<HomologyBlock<F>> {
        self.blocks(i, j).iter().map(|a| self.homology_block(i, j, a)).collect()
    }

    /// `dim H_i(K)_j`.
    pub fn homology_dim(&self, i: usize, j: u32) -> usize {
        self.homology_dim_cached(i, j, &mut BTreeMap::new())
    }

    /// Rank of the differential leaving `(K_i)_alpha` in degree `j`.
    fn block_rank(&self, i: usize, j: u32, alpha: &DegKey) -> usize {
        if i == 0 || i > self.nvars() {
            return 0;
        }
        let Some(d) = Self::coeff_degree(i, j) else { return 0 };
        let mut space = Echelon::new();
        for k in self.block_basis(i, j, alpha) {
            space.push(&self.differential_of_key(k, d));
        }
        space.rank()
    }

    /// Homology dimension from ranks only; ranks are shared between adjacent degrees.
    fn homology_dim_cached(&self, i: usize, j: u32, ranks: &mut BTreeMap<(usize, u32, DegKey), usize>) -> usize {
        let mut total = 0;
        for alpha in self.blocks(i, j) {
            let chain_dim = self.block_basis(i, j, &alpha).len();
            let mut rank_of = |ii: usize| {
                *ranks.entry((ii, j, alpha.clone())).or_insert_with(|| self.block_rank(ii, j, &alpha))
            };
            let out = rank_of(i);
            let inc = rank_of(i + 1);
            total += chain_dim - out - inc;
        }
        total
    }

    /// Wedge product of chain vectors of bidegrees `(i1, j1)` and `(i2, j2)`.
    pub fn wedge(&self, a: &SparseVec<F>, (i1, j1): (usize, u32), b: &SparseVec<F>, (i2, j2): (usize, u32)) -> SparseVec<F> {
        let (d1, d2) = (j1 - i1 as u32, j2 - i2 as u32);
        let mut entries = Vec::new();
        for (ka, ca) in a {
            let (ma, ua) = split_key(*ka);
            for (kb, cb) in b {
                let (mb, ub) = split_key(*kb);
                if ma & mb != 0 {
                    continue;
                }
                let c = ca.mul(cb).mul(&F::from_i64(shuffle_sign(ma, mb)));
                for (k, x) in self.ring.mul_basis(d1, ua, d2, ub) {
                    entries.push((chain_key(ma | mb, k as u32), x.mul(&c)));
                }
            }
        }
        collect(entries)
    }

    /// Converts a chain vector of bidegree `(i, j)` to polynomial form.
    pub fn to_chain(&self, i: usize, j: u32, v: &SparseVec<F>) -> KoszulChain<F> {
        let d = j - i as u32;
        let mut by_mask: BTreeMap<u32, SparseVec<F>> = BTreeMap::new();
        for (k, c) in v {
            let (mask, mono) = split_key(*k);
            by_mask.entry(mask).or_default().push((mono as u64, c.clone()));
        }
        let mut out = KoszulChain::zero(i);
        for (mask, coeffs) in by_mask {
            out.insert(mask, self.ring.to_polynomial(d, &coeffs));
        }
        out
    }

    /// Converts a homogeneous chain with coefficient degree `j - i` to a vector.
    pub fn to_vector(&self, chain: &KoszulChain<F>, j: u32) -> SparseVec<F> {
        let d = j - chain.hom_degree as u32;
        let mut entries = Vec::new();
        for (mask, p) in &chain.terms {
            for (k, c) in self.ring.vectorize(d, p) {
                entries.push((chain_key(*mask, k as u32), c));
            }
        }
        collect(entries)
    }

    /// Differential computed with polynomial arithmetic and normal forms.
    pub fn chain_differential(&self, chain: &KoszulChain<F>) -> KoszulChain<F> {
        let gb = self.ring.groebner();
        let n = self.nvars();
        let mut out = KoszulChain::zero(chain.hom_degree.saturating_sub(1));
        for (mask, p) in &chain.terms {
            let mut s = 0;
            for v in 0..n {
                if mask & (1 << v) == 0 {
                    continue;
                }
                let x = Polynomial::var(n, p.order(), v);
                let term = if s % 2 == 0 { x.mul(p) } else { x.mul(p).neg() };
                s += 1;
                out.insert(mask & !(1 << v), gb.normal_form(&term));
            }
        }
        out
    }

    /// Wedge product computed with polynomial arithmetic and normal forms.
    pub fn chain_wedge(&self, a: &KoszulChain<F>, b: &KoszulChain<F>) -> KoszulChain<F> {
        let gb = self.ring.groebner();
        let mut out = KoszulChain::zero(a.hom_degree + b.hom_degree);
        for (ma, p) in &a.terms {
            for (mb, q) in &b.terms {
                if ma & mb != 0 {
                    continue;
                }
                let prod = p.mul(q).scale(&F::from_i64(shuffle_sign(*ma, *mb)));
                out.insert(ma | mb, gb.normal_form(&prod));
            }
        }
        out
    }
}

/// Betti numbers read off Koszul homology for `i <= max_i`, `j - i <= max_row`.
pub fn koszul_betti<F: Field>(ideal: &Ideal<F>, max_i: usize, max_row: u32) -> BettiTable {
    let (stripped, _) = ideal.strip_free_variables();
    let cx = KoszulComplex::new(&stripped, max_row + 1);
    let mut bt = BettiTable::new();
    let mut ranks = BTreeMap::new();
    for i in 0..=max_i.min(cx.nvars()) {
        for row in 0..=max_row {
            let j = i as u32 + row;
            bt.add(i as u32, j, cx.homology_dim_cached(i, j, &mut ranks) as u64);
        }
    }
    bt
}

/// A homology class: coordinates in the representative basis of a block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData<F> {
    pub i: usize,
    pub j: u32,
    pub alpha: DegKey,
    pub coordinates: SparseVec<F>,
    pub chain: KoszulChain<F>,
    pub text: String,
}

/// Two classes whose product is a nonzero class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductWitness<F> {
    pub left: ClassData<F>,
    pub right: ClassData<F>,
    pub product: ClassData<F>,
    /// Dimensions of the target block: chains, cycles, boundaries.
    pub target_chain_dim: usize,
    pub target_cycle_dim: usize,
    pub target_boundary_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductVerdict<F> {
    Trivial,
    Nontrivial(alloc::boxed::Box<ProductWitness<F>>),
}

impl<F> ProductVerdict<F> {
    pub fn is_trivial(&self) -> bool {
        matches!(self, ProductVerdict::Trivial)
    }
}

/// Homology over the support of a Betti table, checked against it.
pub struct HomologyBasis<F> {
    pub complex: KoszulComplex<F>,
    pub blocks: BTreeMap<(usize, u32), Vec<HomologyBlock<F>>>,
}

impl<F: Field> HomologyBasis<F> {
    /// Computes the homology at every `(i, j)` with `beta_{i,j} != 0`, `i >= 1`,
    /// asserting the dimensions agree with the table.
    pub fn over_support(ideal: &Ideal<F>, bt: &BettiTable) -> Result<Self> {
        let (stripped, _) = ideal.strip_free_variables();
        let support: Vec<(u32, u32, u64)> = bt.entries().filter(|e| e.0 >= 1).collect();
        let max_row = support.iter().map(|e| e.1 - e.0).max().unwrap_or(0);
        let complex = KoszulComplex::new(&stripped, max_row + 1);
        let mut blocks = BTreeMap::new();
        for (i, j, beta) in support {
            let hs: Vec<HomologyBlock<F>> = complex.homology(i as usize, j).into_iter().filter(|b| b.dim() > 0).collect();
            let dim: usize = hs.iter().map(|b| b.dim()).sum();
            if dim as u64 != beta {
                return Err(Error::Internal(format!("dim H_{i},{j} = {dim} but beta = {beta}")));
            }
            blocks.insert((i as usize, j), hs);
        }
        Ok(HomologyBasis { complex, blocks })
    }

    fn class(&self, block: &HomologyBlock<F>, coords: SparseVec<F>, chain: &SparseVec<F>) -> ClassData<F> {
        let kc = self.complex.to_chain(block.i, block.j, chain);
        let text = kc.render(self.complex.ring());
        ClassData { i: block.i, j: block.j, alpha: block.alpha.clone(), coordinates: coords, chain: kc, text }
    }

    /// Product of the `ka`-th class of `a` and the `kb`-th class of `b`;
    /// `None` when it vanishes in homology.
    pub fn basis_product(&self, a: &HomologyBlock<F>, ka: usize, b: &HomologyBlock<F>, kb: usize) -> Option<ProductWitness<F>> {
        let (i, j) = (a.i + b.i, a.j + b.j);
        let alpha = add_keys(&a.alpha, &b.alpha);
        let target = self.blocks.get(&(i, j))?.iter().find(|t| t.alpha == alpha)?;
        let w = self.complex.wedge(&a.reps[ka], (a.i, a.j), &b.reps[kb], (b.i, b.j));
        let coords = target.coordinates(&w).expect("a product of cycles is a cycle");
        if coords.is_empty() {
            return None;
        }
        Some(ProductWitness {
            left: self.class(a, alloc::vec![(ka as u64, F::one())], &a.reps[ka]),
            right: self.class(b, alloc::vec![(kb as u64, F::one())], &b.reps[kb]),
            product: self.class(target, coords, &w),
            target_chain_dim: target.chain_dim,
            target_cycle_dim: target.cycle_dim,
            target_boundary_rank: target.boundary_rank,
        })
    }
}

/// Sweeps all pairs of basis classes of positive homological degree whose
/// product can land in a nonzero homology block.
pub fn trivial_product_check<F: Field>(ideal: &Ideal<F>, bt: &BettiTable) -> Result<ProductVerdict<F>> {
    let hb = HomologyBasis::over_support(ideal, bt)?;
    let keys: Vec<(usize, u32)> = hb.blocks.keys().copied().collect();
    for (x, &s1) in keys.iter().enumerate() {
        for &s2 in &keys[x..] {
            let target = (s1.0 + s2.0, s1.1 + s2.1);
            if bt.get(target.0 as u32, target.1) == 0 {
                continue;
            }
            let (b1s, b2s) = (&hb.blocks[&s1], &hb.blocks[&s2]);
            for (y, a) in b1s.iter().enumerate() {
                let start = if s1 == s2 { y } else { 0 };
                for b in &b2s[start..] {
                    let same = s1 == s2 && a.alpha == b.alpha;
                    for ka in 0..a.dim() {
                        for kb in (if same { ka } else { 0 })..b.dim() {
                            if let Some(w) = hb.basis_product(a, ka, b, kb) {
                                return Ok(ProductVerdict::Nontrivial(alloc::boxed::Box::new(w)));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(ProductVerdict::Trivial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::minimal_resolution;
    use crate::field::F32003;
    use crate::grading::GradingMode;
    use crate::subdet::{Minor, MinorSelection};

    fn selection(m: usize, n: usize, minors: &[(&[usize], &[usize])]) -> MinorSelection {
        MinorSelection::new(m, n, 2, minors.iter().map(|(r, c)| Minor::new(r.to_vec(), c.to_vec())).collect()).unwrap()
    }

    #[test]
    fn signs() {
        assert_eq!(shuffle_sign(0b01, 0b10), 1);
        assert_eq!(shuffle_sign(0b10, 0b01), -1);
        assert_eq!(shuffle_sign(0b101, 0b010), -1);
    }

    #[test]
    fn polynomial_ring_is_acyclic() {
        let ideal = Ideal::<F32003>::standard(Vec::new(), 3).unwrap();
        let cx = KoszulComplex::new(&ideal, 4);
        assert_eq!(cx.homology_dim(0, 0), 1);
        for i in 1..=3 {
            for j in i as u32..=4 {
                assert_eq!(cx.homology_dim(i, j), 0, "H_{i},{j}");
            }
        }
    }

    #[test]
    fn differential_squares_to_zero() {
        let ideal = MinorSelection::full(2, 3, 2).ideal::<F32003>(GradingMode::RowColumn);
        let cx = KoszulComplex::new(&ideal, 3);
        for i in 1..=4 {
            for j in i as u32..i as u32 + 3 {
                let a = cx.differential_matrix(i, j);
                let b = cx.differential_matrix(i + 1, j);
                assert_eq!(a.columns, b.rows);
                assert!(a.matrix.mul(&b.matrix).is_zero());
            }
        }
    }

    #[test]
    fn first_differential_hits_variables() {
        let ideal = Ideal::<F32003>::standard(Vec::new(), 2).unwrap();
        let cx = KoszulComplex::new(&ideal, 2);
        let d = cx.differential_matrix(1, 1);
        assert_eq!(d.matrix.ncols, 2);
        assert_eq!(d.matrix.nrows, 2);
        assert_eq!(d.matrix.rank(), 2);
    }

    #[test]
    fn hypersurface_and_complete_intersection() {
        let h = selection(2, 2, &[(&[1, 2], &[1, 2])]).ideal::<F32003>(GradingMode::RowColumn);
        let cx = KoszulComplex::new(&h, 3);
        assert_eq!(cx.homology_dim(1, 2), 1);
        assert_eq!(cx.homology_dim(2, 4), 0);
        let ci = selection(2, 3, &[(&[1, 2], &[1, 2]), (&[1, 2], &[1, 3])]);
        let ideal = ci.ideal::<F32003>(GradingMode::RowColumn);
        let bt = minimal_resolution(ideal.gens()).unwrap();
        assert_eq!(bt.totals(), alloc::vec![1, 2, 1]);
        match trivial_product_check(&ideal, &bt).unwrap() {
            ProductVerdict::Nontrivial(w) => {
                assert_eq!((w.left.i, w.right.i, w.product.i), (1, 1, 2));
                assert_eq!(w.product.j, 4);
            }
            ProductVerdict::Trivial => panic!("complete intersection has nontrivial products"),
        }
    }

    #[test]
    fn block_has_trivial_product() {
        let ideal = MinorSelection::full(2, 3, 2).ideal::<F32003>(GradingMode::RowColumn);
        let bt = minimal_resolution(ideal.gens()).unwrap();
        assert!(trivial_product_check(&ideal, &bt).unwrap().is_trivial());
        assert_eq!(koszul_betti(&ideal, 3, 2), bt);
    }

    #[test]
    fn chain_routes_agree() {
        let ideal = MinorSelection::full(2, 3, 2).ideal::<F32003>(GradingMode::RowColumn);
        let cx = KoszulComplex::new(&ideal, 3);
        let (i, j) = (2, 4);
        for alpha in cx.blocks(i, j) {
            for k in cx.block_basis(i, j, &alpha) {
                let v = alloc::vec![(k, F32003::from_i64(3))];
                let chain = cx.to_chain(i, j, &v);
                let by_matrix = cx.to_chain(i - 1, j, &cx.differential(i, j, &v));
                assert_eq!(cx.chain_differential(&chain), by_matrix);
                assert_eq!(cx.to_vector(&chain, j), v);
            }
        }
    }
}
