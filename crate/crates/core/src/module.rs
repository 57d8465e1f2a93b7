//! Free-module elements, the shared Buchberger engine and syzygy modules.
//!
//! Ideals are handled as submodules of `S^1`, so one engine serves both.
//! Module terms are compared position-over-term: a smaller position index
//! ranks higher, ties are broken by the monomial order.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Echelon;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

/// One term `c * m * e_pos`.
pub(crate) type Term<F> = (u32, Monomial, F);

/// A module element as terms in strictly descending order.
pub(crate) type ModVec<F> = Vec<Term<F>>;

#[derive(Clone, Copy)]
pub(crate) struct ModOrder<'a> {
    pub order: MonomialOrder,
    pub shifts: &'a [u32],
}

impl ModOrder<'_> {
    #[inline]
    pub fn cmp(&self, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering {
        match b.0.cmp(&a.0) {
            Ordering::Equal => self.order.cmp(a.1, b.1),
            o => o,
        }
    }

    pub fn degree(&self, pos: u32, m: &Monomial) -> u32 {
        m.degree() + self.shifts[pos as usize]
    }
}

/// Key type for ordered accumulators; orders like the module terms.
#[derive(Clone, Copy, PartialEq, Eq)]
struct Key {
    pos: u32,
    mono: Monomial,
    order: MonomialOrder,
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        match other.pos.cmp(&self.pos) {
            Ordering::Equal => self.order.cmp(&self.mono, &other.mono),
            o => o,
        }
    }
}

fn add_to<F: Field>(acc: &mut BTreeMap<Key, F>, key: Key, c: F) {
    match acc.get_mut(&key) {
        Some(e) => {
            *e = e.add(&c);
            if e.is_zero() {
                acc.remove(&key);
            }
        }
        None => {
            if !c.is_zero() {
                acc.insert(key, c);
            }
        }
    }
}

fn monic<F: Field>(v: &mut ModVec<F>) {
    if let Some((_, _, c)) = v.first() {
        if !c.is_one() {
            let inv = c.inv().expect("nonzero");
            for t in v.iter_mut() {
                t.2 = t.2.mul(&inv);
            }
        }
    }
}

/// Full reduction of `v` modulo `basis` (only elements flagged active).
pub(crate) fn reduce<F: Field>(v: &ModVec<F>, basis: &[ModVec<F>], active: &[bool], ord: ModOrder) -> ModVec<F> {
    let order = ord.order;
    let mut acc: BTreeMap<Key, F> = BTreeMap::new();
    for (p, m, c) in v {
        add_to(&mut acc, Key { pos: *p, mono: *m, order }, c.clone());
    }
    let mut out = Vec::new();
    while let Some((key, c)) = acc.pop_last() {
        let divisor = basis.iter().zip(active).find(|(g, &a)| a && g[0].0 == key.pos && g[0].1.divides(&key.mono));
        match divisor {
            Some((g, _)) => {
                let q = g[0].1.quotient_of(&key.mono).unwrap();
                let f = c.div(&g[0].2).unwrap().neg();
                for (p, m, d) in &g[1..] {
                    add_to(&mut acc, Key { pos: *p, mono: m.mul(&q), order }, f.mul(d));
                }
            }
            None => out.push((key.pos, key.mono, c)),
        }
    }
    out
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: u32,
    degree: u32,
}

fn spoly<F: Field>(f: &ModVec<F>, g: &ModVec<F>, lcm: &Monomial, ord: ModOrder) -> ModVec<F> {
    let order = ord.order;
    let qf = f[0].1.quotient_of(lcm).unwrap();
    let qg = g[0].1.quotient_of(lcm).unwrap();
    let cf = f[0].2.inv().unwrap();
    let cg = g[0].2.inv().unwrap().neg();
    let mut acc: BTreeMap<Key, F> = BTreeMap::new();
    for (p, m, c) in &f[1..] {
        add_to(&mut acc, Key { pos: *p, mono: m.mul(&qf), order }, c.mul(&cf));
    }
    for (p, m, c) in &g[1..] {
        add_to(&mut acc, Key { pos: *p, mono: m.mul(&qg), order }, c.mul(&cg));
    }
    acc.into_iter().rev().map(|(k, c)| (k.pos, k.mono, c)).collect()
}

/// Gebauer-Moeller update after adding `basis[h]`.
fn update<F: Field>(basis: &[ModVec<F>], active: &mut [bool], pairs: &mut Vec<Pair>, h: usize, ord: ModOrder, product_criterion: bool) {
    let (hpos, hlead) = (basis[h][0].0, basis[h][0].1);
    let new_pair = |g: usize| {
        let lcm = basis[g][0].1.lcm(&hlead);
        Pair { i: g, j: h, lcm, pos: hpos, degree: ord.degree(hpos, &lcm) }
    };
    let mut candidates: Vec<Pair> = (0..h).filter(|&g| active[g] && basis[g][0].0 == hpos).map(new_pair).collect();
    let coprime = |p: &Pair| product_criterion && basis[p.i][0].1.is_coprime(&hlead);

    // chain criterion among the new pairs
    let mut kept: Vec<Pair> = Vec::new();
    for k in 0..candidates.len() {
        let p = &candidates[k];
        let dominated = candidates
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .any(|(l, q)| q.lcm.divides(&p.lcm) && (q.lcm != p.lcm || l < k));
        let dominated_kept = kept.iter().any(|q| q.lcm.divides(&p.lcm));
        if coprime(p) || !(dominated || dominated_kept) {
            kept.push(p.clone());
        }
    }
    candidates.clear();
    kept.retain(|p| !coprime(p));

    // old pairs made redundant by the new lead
    pairs.retain(|p| {
        if p.pos != hpos || !hlead.divides(&p.lcm) {
            return true;
        }
        let li = basis[p.i][0].1.lcm(&hlead);
        let lj = basis[p.j][0].1.lcm(&hlead);
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(kept);

    for g in 0..h {
        if active[g] && basis[g][0].0 == hpos && hlead.divides(&basis[g][0].1) {
            active[g] = false;
        }
    }
}

/// Reduced Groebner basis of the submodule generated by `gens`.
///
/// Pairs are processed by the normal strategy: smallest degree first, ties
/// broken by the lcm term in the module order, then by index.
pub(crate) fn groebner_engine<F: Field>(gens: &[ModVec<F>], ord: ModOrder, product_criterion: bool) -> Vec<ModVec<F>> {
    let mut basis: Vec<ModVec<F>> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<ModVec<F>> = gens.iter().filter(|g| !g.is_empty()).cloned().collect();
    inputs.sort_by(|a, b| {
        let da = ord.degree(a[0].0, &a[0].1);
        let db = ord.degree(b[0].0, &b[0].1);
        da.cmp(&db).then_with(|| ord.cmp((a[0].0, &a[0].1), (b[0].0, &b[0].1)))
    });
    let mut pending = inputs.into_iter().peekable();

    loop {
        // next degree to work on: the smaller of the next input and the next pair
        let pair_deg = pairs.iter().map(|p| p.degree).min();
        let input_deg = pending.peek().map(|g| ord.degree(g[0].0, &g[0].1));
        let take_input = match (input_deg, pair_deg) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => a <= b,
        };
        let candidate = if take_input {
            pending.next().unwrap()
        } else {
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    let (p, q) = (&pairs[a], &pairs[b]);
                    p.degree
                        .cmp(&q.degree)
                        .then_with(|| ord.cmp((p.pos, &p.lcm), (q.pos, &q.lcm)))
                        .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
                })
                .unwrap();
            let p = pairs.swap_remove(best);
            spoly(&basis[p.i], &basis[p.j], &p.lcm, ord)
        };
        let mut h = reduce(&candidate, &basis, &active, ord);
        if h.is_empty() {
            continue;
        }
        monic(&mut h);
        basis.push(h);
        active.push(true);
        let idx = basis.len() - 1;
        update(&basis, &mut active, &mut pairs, idx, ord, product_criterion);
    }

    // inter-reduce the tails
    let keep: Vec<usize> = (0..basis.len()).filter(|&k| active[k]).collect();
    let mut out = Vec::with_capacity(keep.len());
    for &k in &keep {
        let mut others = active.clone();
        others[k] = false;
        let tail: ModVec<F> = basis[k][1..].to_vec();
        let mut g = alloc::vec![basis[k][0].clone()];
        g.extend(reduce(&tail, &basis, &others, ord));
        out.push(g);
    }
    out.sort_by(|a, b| ord.cmp((a[0].0, &a[0].1), (b[0].0, &b[0].1)));
    out
}

/// An element of a graded free module `sum_k S(-shift_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleElement<F> {
    pub components: Vec<Polynomial<F>>,
    pub shifts: Vec<u32>,
}

impl<F: Field> FreeModuleElement<F> {
    pub fn new(components: Vec<Polynomial<F>>, shifts: Vec<u32>) -> Result<Self> {
        if components.len() != shifts.len() {
            return Err(Error::LengthMismatch { left: components.len(), right: shifts.len() });
        }
        Ok(FreeModuleElement { components, shifts })
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// Internal degree, `None` for zero, an error if inhomogeneous.
    pub fn degree(&self) -> Result<Option<u32>> {
        let mut deg = None;
        for (c, s) in self.components.iter().zip(&self.shifts) {
            for (m, _) in c.terms() {
                let d = m.degree() + s;
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => {
                        return Err(Error::Inhomogeneous(alloc::format!("module element mixes degrees {e} and {d}")))
                    }
                    _ => {}
                }
            }
        }
        Ok(deg)
    }

    fn to_modvec(&self, offset: u32, order: MonomialOrder, shifts: &[u32]) -> ModVec<F> {
        let mut terms: ModVec<F> = Vec::new();
        for (k, c) in self.components.iter().enumerate() {
            for (m, x) in c.terms() {
                terms.push((offset + k as u32, *m, x.clone()));
            }
        }
        let ord = ModOrder { order, shifts };
        terms.sort_by(|a, b| ord.cmp((b.0, &b.1), (a.0, &a.1)));
        terms
    }
}

fn from_modvec<F: Field>(v: &ModVec<F>, offset: u32, rank: usize, nvars: usize, order: MonomialOrder, shifts: Vec<u32>) -> FreeModuleElement<F> {
    let mut comps: Vec<Vec<(Monomial, F)>> = alloc::vec![Vec::new(); rank];
    for (p, m, c) in v {
        comps[(*p - offset) as usize].push((*m, c.clone()));
    }
    FreeModuleElement {
        components: comps.into_iter().map(|t| Polynomial::from_terms(nvars, order, t)).collect(),
        shifts,
    }
}

/// Selects minimal generators: processes elements by degree and keeps those
/// whose normal forms modulo a Groebner basis of the lower-degree kept
/// elements are linearly independent. Normal forms modulo a reduced basis
/// are linear, so this is the graded Nakayama test.
pub fn minimalize<F: Field>(elems: &[FreeModuleElement<F>]) -> Result<Vec<FreeModuleElement<F>>> {
    let Some(first) = elems.first() else {
        return Ok(Vec::new());
    };
    let shifts = first.shifts.clone();
    let order = first.components.iter().find(|c| !c.is_zero()).map_or(MonomialOrder::DegLex, |c| c.order());
    let ord = ModOrder { order, shifts: &shifts };
    let mut by_degree: BTreeMap<u32, Vec<&FreeModuleElement<F>>> = BTreeMap::new();
    for e in elems {
        if e.shifts != shifts {
            return Err(Error::Internal("module elements live in different free modules".into()));
        }
        if let Some(d) = e.degree()? {
            by_degree.entry(d).or_default().push(e);
        }
    }
    let mut kept: Vec<FreeModuleElement<F>> = Vec::new();
    let mut index: HashMap<(u32, Monomial), u64> = HashMap::new();
    for group in by_degree.values() {
        let lower: Vec<ModVec<F>> = kept.iter().map(|g| g.to_modvec(0, order, &shifts)).collect();
        let gb = groebner_engine(&lower, ord, false);
        let active = alloc::vec![true; gb.len()];
        let mut space = Echelon::new();
        for g in group {
            let r = reduce(&g.to_modvec(0, order, &shifts), &gb, &active, ord);
            let mut v = Vec::with_capacity(r.len());
            for (p, m, c) in r {
                let next = index.len() as u64;
                v.push((*index.entry((p, m)).or_insert(next), c));
            }
            if space.push(&crate::linalg::collect(v)) {
                kept.push((*g).clone());
            }
        }
    }
    Ok(kept)
}

/// All monomials of degree `d` in `nvars` variables, ascending in the
/// order of generation.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut layer = alloc::vec![Monomial::one(nvars)];
    for _ in 0..d {
        let mut next = Vec::new();
        for m in &layer {
            let start = m.max_var().unwrap_or(0);
            for v in start..nvars {
                next.push(m.mul_var(v));
            }
        }
        layer = next;
    }
    layer
}

/// Minimal generators of the syzygy module of `gens`.
///
/// Uses the augmented module `(g_j, e_j)` with a position-over-term order in
/// which the `g`-positions dominate; the basis elements with vanishing
/// `g`-part generate the syzygies, which are then minimalized by degree.
pub fn module_syzygies<F: Field>(gens: &[FreeModuleElement<F>], order: MonomialOrder) -> Result<Vec<FreeModuleElement<F>>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let s = first.rank();
    let nvars = first
        .components
        .iter()
        .map(|c| c.nvars())
        .next()
        .ok_or_else(|| Error::Internal("rank-zero module".into()))?;
    let mut degrees = Vec::with_capacity(gens.len());
    for g in gens {
        if g.rank() != s || g.shifts != first.shifts {
            return Err(Error::Internal("module generators live in different free modules".into()));
        }
        degrees.push(g.degree()?.ok_or_else(|| Error::Internal("zero module generator".into()))?);
    }
    let r = gens.len();
    let mut shifts = first.shifts.clone();
    shifts.extend_from_slice(&degrees);
    let ord = ModOrder { order, shifts: &shifts };
    let augmented: Vec<ModVec<F>> = gens
        .iter()
        .enumerate()
        .map(|(j, g)| {
            let mut v = g.to_modvec(0, order, &shifts);
            v.push(((s + j) as u32, Monomial::one(nvars), F::one()));
            v
        })
        .collect();
    let gb = groebner_engine(&augmented, ord, false);
    let syz: Vec<FreeModuleElement<F>> = gb
        .iter()
        .filter(|v| v[0].0 as usize >= s)
        .map(|v| from_modvec(v, s as u32, r, nvars, order, degrees.clone()))
        .collect();
    minimalize(&syz)
}
