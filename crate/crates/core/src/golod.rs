//! Poincare series of the residue field, the Golod bound, and the check that
//! compares them.
//!
//! The resolution of `k` over `R` is built degree by degree. An element of
//! `F_i` is a sparse vector keyed by `gen << 32 | index(u)` with `u` a
//! standard monomial, and the differential is stored through the images of
//! all basis elements of the current internal degree.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use hashbrown::HashMap;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use crate::betti::{minimal_resolution, BettiTable};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::grading::DegreeVector;
use crate::ideal::Ideal;
use crate::koszul::koszul_betti;
use crate::linalg::{collect, kernel, Echelon, Insertion, SparseVec};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, VarLabels};
use crate::ring::{DegKey, QuotientRing};
use crate::series::{BigradedSeries, Provenance};
use crate::subdet::{disjoint_split, MinorSelection};

struct Level<F> {
    // (internal degree, multidegree) of each generator
    gens: Vec<(u32, DegKey)>,
    // images in F_{i-1} of the basis elements of the current degree
    images: HashMap<u64, SparseVec<F>>,
}

impl<F> Level<F> {
    fn new() -> Self {
        Level { gens: Vec::new(), images: HashMap::new() }
    }
}

fn add_keys(a: &DegKey, b: &DegKey) -> DegKey {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `x_v * a` for `a` in `F_i` of internal degree `d`.
fn times_var<F: Field>(ring: &QuotientRing<F>, gens: &[(u32, DegKey)], d: u32, a: &SparseVec<F>, v: usize) -> SparseVec<F> {
    let mut entries = Vec::new();
    for (key, c) in a {
        let g = (key >> 32) as usize;
        let e = d - gens[g].0;
        for (k, x) in ring.mul_var(e, *key as u32, v) {
            entries.push((((g as u64) << 32) | *k, c.mul(x)));
        }
    }
    collect(entries)
}

/// Graded Betti numbers of `k` over `R = S/I` for internal degrees `<= max_degree`.
///
/// With `stop_against`, the computation ends after the first internal degree
/// at which the series differs from the given one; the returned degree is the
/// last one that was computed completely.
pub fn resolution_of_k_over_r<F: Field>(
    ring: &QuotientRing<F>,
    max_degree: u32,
    stop_against: Option<&BigradedSeries>,
) -> (BigradedSeries, u32) {
    assert!(ring.max_degree() >= max_degree, "ring truncated below the requested degree");
    let width = ring.key_width();
    let mut series = BigradedSeries::zero(max_degree, Provenance::ActualResolution);
    series.set(0, 0, 1);
    let mut levels: Vec<Level<F>> = alloc::vec![Level::new()];
    levels[0].gens.push((0, alloc::vec![0; width]));
    levels[0].images.insert(0, Vec::new());
    for d in 1..=max_degree {
        // extend the images of old generators to degree d
        for i in 0..levels.len() {
            let (lower, upper) = levels.split_at_mut(i);
            let level = &mut upper[0];
            let mut next = HashMap::new();
            for (g, (deg, _)) in level.gens.iter().enumerate() {
                let e = d - deg;
                for (k, u) in ring.basis(e).iter().enumerate() {
                    let key = ((g as u64) << 32) | k as u64;
                    if i == 0 {
                        next.insert(key, Vec::new());
                        continue;
                    }
                    let v = u.max_var().expect("positive degree");
                    let w = Monomial::var(u.nvars(), v).quotient_of(u).expect("divisible");
                    let kw = ring.index_of(e - 1, &w).expect("standard monomials are closed under division");
                    let prev = &level.images[&(((g as u64) << 32) | kw as u64)];
                    next.insert(key, times_var(ring, &lower[i - 1].gens, d - 1, prev, v));
                }
            }
            level.images = next;
        }
        for i in 0..d as usize {
            if i >= levels.len() {
                break;
            }
            if levels.len() == i + 1 {
                levels.push(Level::new());
            }
            // blocks of F_i in degree d
            let mut blocks: BTreeMap<DegKey, Vec<u64>> = BTreeMap::new();
            for key in levels[i].images.keys() {
                let (g, k) = ((key >> 32) as usize, *key as u32);
                let (deg, gkey) = &levels[i].gens[g];
                blocks.entry(add_keys(gkey, ring.key(d - deg, k))).or_default().push(*key);
            }
            let mut upper_blocks: HashMap<DegKey, Vec<u64>> = HashMap::new();
            for key in levels[i + 1].images.keys() {
                let (g, k) = ((key >> 32) as usize, *key as u32);
                let (deg, gkey) = &levels[i + 1].gens[g];
                upper_blocks.entry(add_keys(gkey, ring.key(d - deg, k))).or_default().push(*key);
            }
            let mut found = Vec::new();
            for (alpha, mut keys) in blocks {
                keys.sort_unstable();
                let images: Vec<SparseVec<F>> = keys.iter().map(|k| levels[i].images[k].clone()).collect();
                let ker = kernel(&images, &keys);
                if ker.is_empty() {
                    continue;
                }
                let mut span = Echelon::new();
                if let Some(up) = upper_blocks.get_mut(&alpha) {
                    up.sort_unstable();
                    for k in up.iter() {
                        span.push(&levels[i + 1].images[k]);
                    }
                }
                let ker_dim = ker.len();
                for z in ker {
                    if span.rank() == ker_dim {
                        break;
                    }
                    if let Insertion::Independent(_) = span.insert(&z, Vec::new()) {
                        found.push((alpha.clone(), z));
                    }
                }
            }
            if !found.is_empty() {
                series.add(i as u32 + 1, d, found.len() as u64);
                let up = &mut levels[i + 1];
                for (alpha, z) in found {
                    let g = up.gens.len() as u64;
                    up.gens.push((d, alpha));
                    up.images.insert(g << 32, z);
                }
            }
        }
        while levels.last().is_some_and(|l| l.gens.is_empty()) {
            levels.pop();
        }
        if let Some(bound) = stop_against {
            if (0..=d).any(|i| series.get(i, d) != bound.get(i, d)) {
                return (series, d);
            }
        }
    }
    (series, max_degree)
}

/// Expansion of `(1 + zt)^nvars / (1 - sum_{i >= 1} beta_{i,j} z^{i+1} t^j)`
/// for `t`-degrees up to `max_degree`.
pub fn golod_bound_series(bt: &BettiTable, nvars: usize, max_degree: u32) -> BigradedSeries {
    let terms: Vec<(u32, u32, u64)> = bt.entries().filter(|e| e.0 >= 1).map(|(i, j, v)| (i + 1, j, v)).collect();
    let mut c = BigradedSeries::zero(max_degree, Provenance::GolodBound);
    c.set(0, 0, 1);
    for j in 1..=max_degree {
        for i in 0..=max_degree {
            let mut acc = 0u64;
            for &(a, b, v) in &terms {
                if a <= i && b <= j {
                    acc = acc.checked_add(v.checked_mul(c.get(i - a, j - b)).expect("overflow")).expect("overflow");
                }
            }
            if acc > 0 {
                c.set(i, j, acc);
            }
        }
    }
    let mut out = c.times_one_plus_zt(nvars);
    out.provenance = Provenance::GolodBound;
    out
}

/// Coefficientwise `actual <= bound` on the common window.
pub fn serre_inequality_check(actual: &BigradedSeries, bound: &BigradedSeries) -> bool {
    actual.dominated_by(bound, actual.max_degree.min(bound.max_degree))
}

/// Quotient by `count` random linear forms, each certified as a
/// nonzerodivisor by `K_{R/l}(t) = K_R(t)`.
///
/// Each step substitutes `x_last = sum c_w x_w` with random nonzero `c_w`,
/// which is the quotient by the form `x_last - sum c_w x_w`. The result is
/// standard graded. Returns the ideal and the number of attempts used.
pub fn artinian_reduction<F: Field>(ideal: &Ideal<F>, count: usize, seed: u64, retries: usize) -> Result<(Ideal<F>, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = MonomialOrder::DegRevLex;
    let mut current = ideal.with_standard_grading();
    let mut k_poly = current.groebner(order).k_polynomial();
    let mut attempts = 0;
    for _ in 0..count {
        let n = current.nvars();
        if n == 0 {
            return Err(Error::RetryBudgetExhausted(retries));
        }
        let mut done = false;
        for _ in 0..retries {
            attempts += 1;
            let mut form = Polynomial::zero(n, MonomialOrder::DegLex);
            for w in 0..n - 1 {
                form = form.add(&Polynomial::var(n, MonomialOrder::DegLex, w).scale(&F::sample_nonzero(&mut rng)));
            }
            let map: Vec<Option<usize>> = (0..n).map(|v| (v + 1 < n).then_some(v)).collect();
            let gens: Vec<Polynomial<F>> = current
                .gens()
                .iter()
                .map(|g| g.substitute(n - 1, &form).remap(n - 1, &map).expect("last variable eliminated"))
                .collect();
            let next = Ideal::new(
                gens,
                alloc::vec![DegreeVector(alloc::vec![1]); n - 1],
                VarLabels(current.labels().0[..n - 1].to_vec()),
                current.cells()[..n - 1].to_vec(),
            )?;
            let kp = next.groebner(order).k_polynomial();
            if trim(&kp) == trim(&k_poly) {
                current = next;
                k_poly = kp;
                done = true;
                break;
            }
        }
        if !done {
            return Err(Error::RetryBudgetExhausted(retries));
        }
    }
    Ok((current, attempts))
}

fn trim(p: &[i64]) -> &[i64] {
    let end = p.iter().rposition(|c| *c != 0).map_or(0, |k| k + 1);
    &p[..end]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reduction {
    None,
    FreeVariables,
    /// Free variables, then `depth` random linear forms.
    Artinian { seed: u64, retries: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GolodOptions {
    pub max_degree: u32,
    pub fast_paths: bool,
    pub stop_at_first_gap: bool,
    pub reduction: Reduction,
}

impl Default for GolodOptions {
    fn default() -> Self {
        GolodOptions {
            max_degree: 8,
            fast_paths: true,
            stop_at_first_gap: true,
            reduction: Reduction::Artinian { seed: 0, retries: 16 },
        }
    }
}

/// Facts known in advance that decide the verdict without a resolution.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GolodHints {
    pub split_groups: usize,
    pub nontrivial_product: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gap {
    pub i: u32,
    pub j: u32,
    pub size: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GolodVerdict {
    /// Definitive. The gap is absent when a fast path decided.
    NotGolod { gap: Option<Gap> },
    /// Actual series equals the bound for all internal degrees `<= D`.
    ConsistentUpTo(u32),
}

impl GolodVerdict {
    pub fn is_not_golod(&self) -> bool {
        matches!(self, GolodVerdict::NotGolod { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FastPath {
    None,
    DisjointSplit,
    ProductWitness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GolodReport {
    pub verdict: GolodVerdict,
    pub max_degree: u32,
    /// Last internal degree for which `actual` is complete.
    pub computed_upto: u32,
    pub actual: Option<BigradedSeries>,
    pub bound: BigradedSeries,
    pub fast_path: FastPath,
    pub seed: Option<u64>,
    /// Variables removed: (free, by linear forms).
    pub removed: (usize, usize),
    pub attempts: usize,
}

impl GolodReport {
    /// First `(i, bound - actual)` after setting `t = 1`, over the computed window.
    pub fn collapsed_gap(&self) -> Option<(usize, i64)> {
        let actual = self.actual.as_ref()?.truncate(self.computed_upto).collapse();
        let bound = self.bound.truncate(self.computed_upto).collapse();
        actual.iter().zip(&bound).enumerate().find(|(_, (a, b))| a != b).map(|(i, (a, b))| (i, *b as i64 - *a as i64))
    }
}

/// Compares the Poincare series of `k` over `S/I` with the Golod bound for
/// internal degrees up to `opts.max_degree`. `bt` is the Betti table of `S/I`.
pub fn golod_check<F: Field>(ideal: &Ideal<F>, bt: &BettiTable, opts: &GolodOptions, hints: &GolodHints) -> Result<GolodReport> {
    let dmax = opts.max_degree;
    let nvars = ideal.nvars();
    let bound = golod_bound_series(bt, nvars, dmax);
    let seed = match opts.reduction {
        Reduction::Artinian { seed, .. } => Some(seed),
        _ => None,
    };
    let mut report = GolodReport {
        verdict: GolodVerdict::ConsistentUpTo(dmax),
        max_degree: dmax,
        computed_upto: 0,
        actual: None,
        bound: bound.clone(),
        fast_path: FastPath::None,
        seed,
        removed: (0, 0),
        attempts: 0,
    };
    if opts.fast_paths && (hints.split_groups >= 2 || hints.nontrivial_product) {
        report.verdict = GolodVerdict::NotGolod { gap: None };
        report.fast_path = if hints.split_groups >= 2 { FastPath::DisjointSplit } else { FastPath::ProductWitness };
        return Ok(report);
    }
    let (work, free) = match opts.reduction {
        Reduction::None => (ideal.clone(), 0),
        _ => ideal.strip_free_variables(),
    };
    let mut reduced = (work.clone(), 0usize);
    let mut order = MonomialOrder::DegLex;
    if let Reduction::Artinian { seed, retries } = opts.reduction {
        let depth = work.nvars().saturating_sub(bt.projective_dimension() as usize);
        if depth > 0 {
            if let Ok((r, attempts)) = artinian_reduction(&work, depth, seed, retries) {
                reduced = (r, depth);
                report.attempts = attempts;
                order = MonomialOrder::DegRevLex;
            }
        }
    }
    let (small, linear) = reduced;
    report.removed = (free, linear);
    let removed = free + linear;
    let ring = QuotientRing::new(&small, order, dmax);
    let small_bound = golod_bound_series(bt, small.nvars(), dmax);
    let stop = opts.stop_at_first_gap.then_some(&small_bound);
    let (small_actual, upto) = resolution_of_k_over_r(&ring, dmax, stop);
    let actual = small_actual.times_one_plus_zt(removed);
    report.computed_upto = upto;
    let (a, b) = (actual.truncate(upto), bound.truncate(upto));
    if !serre_inequality_check(&a, &b) {
        return Err(Error::Internal(format!("actual series exceeds the Golod bound up to degree {upto}")));
    }
    if let Some((i, j, size)) = a.first_difference(&b, upto) {
        report.verdict = GolodVerdict::NotGolod { gap: Some(Gap { i, j, size: size as u64 }) };
    }
    report.actual = Some(actual);
    Ok(report)
}

/// `mu(I_1) * mu(I_2)` for a selection that splits into exactly two groups.
pub fn tensor_obstruction(sel: &MinorSelection) -> Result<u64> {
    let groups = disjoint_split(sel);
    if groups.len() != 2 {
        return Err(Error::SplitCount(groups.len()));
    }
    Ok(groups[0].len() as u64 * groups[1].len() as u64)
}

/// Compares total Koszul homology of the whole selection with the
/// convolution of the totals of its disjoint groups.
pub fn kunneth_check<F: Field>(sel: &MinorSelection) -> Result<bool> {
    let groups = disjoint_split(sel);
    if groups.len() < 2 {
        return Ok(true);
    }
    let totals = |s: &MinorSelection| -> Result<Vec<u64>> {
        let ideal = s.ideal::<F>(crate::grading::GradingMode::RowColumn);
        let bt = minimal_resolution(ideal.gens())?;
        let window = koszul_betti(&ideal, bt.projective_dimension() as usize + 1, bt.regularity() + 1);
        let mut t = window.totals();
        t.resize(bt.projective_dimension() as usize + 2, 0);
        Ok(t)
    };
    let mut expected = alloc::vec![1u64];
    for g in &groups {
        let t = totals(g)?;
        let mut next = alloc::vec![0u64; expected.len() + t.len() - 1];
        for (p, a) in expected.iter().enumerate() {
            for (q, b) in t.iter().enumerate() {
                next[p + q] += a * b;
            }
        }
        expected = next;
    }
    let mut whole = totals(sel)?;
    let len = whole.len().max(expected.len());
    whole.resize(len, 0);
    expected.resize(len, 0);
    Ok(whole == expected)
}
