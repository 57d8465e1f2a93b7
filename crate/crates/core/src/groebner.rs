//! Reduced Groebner bases of ideals, normal forms, standard monomials and
//! Hilbert series.

use alloc::vec::Vec;

use crate::field::Field;
use crate::module::{groebner_engine, reduce, ModOrder, ModVec};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

const NO_SHIFT: [u32; 1] = [0];

/// The reduced Groebner basis of an ideal, together with its input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<F> {
    nvars: usize,
    order: MonomialOrder,
    generators: Vec<Polynomial<F>>,
    original: Vec<Polynomial<F>>,
}

fn to_modvec<F: Field>(p: &Polynomial<F>) -> ModVec<F> {
    p.terms().iter().map(|(m, c)| (0u32, *m, c.clone())).collect()
}

fn from_modvec<F: Field>(v: ModVec<F>, nvars: usize, order: MonomialOrder) -> Polynomial<F> {
    Polynomial::from_sorted_unchecked(nvars, order, v.into_iter().map(|(_, m, c)| (m, c)).collect())
}

/// Buchberger's algorithm with the product and chain criteria.
///
/// All inputs must live in the same ring; they are re-sorted for `order`.
pub fn buchberger<F: Field>(gens: &[Polynomial<F>], nvars: usize, order: MonomialOrder) -> GroebnerBasis<F> {
    let original: Vec<Polynomial<F>> = gens.iter().map(|g| g.with_order(order)).collect();
    for g in &original {
        assert_eq!(g.nvars(), nvars, "generator lives in a different ring");
    }
    let input: Vec<ModVec<F>> = original.iter().map(to_modvec).collect();
    let ord = ModOrder { order, shifts: &NO_SHIFT };
    let out = groebner_engine(&input, ord, true);
    let mut generators: Vec<Polynomial<F>> = out.into_iter().map(|v| from_modvec(v, nvars, order)).collect();
    // descending by leading monomial
    generators.reverse();
    GroebnerBasis { nvars, order, generators, original }
}

/// Remainder of `p` modulo the basis.
pub fn normal_form<F: Field>(p: &Polynomial<F>, gb: &GroebnerBasis<F>) -> Polynomial<F> {
    gb.normal_form(p)
}

impl<F: Field> GroebnerBasis<F> {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn original(&self) -> &[Polynomial<F>] {
        &self.original
    }

    pub fn leads(&self) -> Vec<Monomial> {
        self.generators.iter().map(|g| *g.lead_monomial().unwrap()).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant())
    }

    pub fn normal_form(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let p = p.with_order(self.order);
        let basis: Vec<ModVec<F>> = self.generators.iter().map(to_modvec).collect();
        let active = alloc::vec![true; basis.len()];
        let ord = ModOrder { order: self.order, shifts: &NO_SHIFT };
        from_modvec(reduce(&to_modvec(&p), &basis, &active, ord), self.nvars, self.order)
    }

    pub fn contains(&self, p: &Polynomial<F>) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Whether `m` is a standard monomial (not divisible by any lead).
    pub fn is_standard(&self, m: &Monomial) -> bool {
        self.generators.iter().all(|g| !g.lead_monomial().unwrap().divides(m))
    }

    /// Degree-`d` monomials outside the initial ideal, descending in the order.
    pub fn quotient_monomial_basis(&self, d: u32) -> Vec<Monomial> {
        let mut layer = alloc::vec![Monomial::one(self.nvars)];
        if !self.is_standard(&layer[0]) {
            return Vec::new();
        }
        for _ in 0..d {
            let mut next = Vec::new();
            for m in &layer {
                let start = m.max_var().unwrap_or(0);
                for v in start..self.nvars {
                    let n = m.mul_var(v);
                    if self.is_standard(&n) {
                        next.push(n);
                    }
                }
            }
            layer = next;
        }
        layer.sort_by(|a, b| self.order.cmp(b, a));
        layer
    }

    pub fn hilbert_function(&self, d: u32) -> u64 {
        self.quotient_monomial_basis(d).len() as u64
    }

    /// Numerator `K(t)` of the Hilbert series `K(t) / (1 - t)^nvars`.
    pub fn k_polynomial(&self) -> Vec<i64> {
        hilbert_numerator(&self.leads(), self.nvars)
    }

    /// Krull dimension: `nvars` minus the order of vanishing of `K` at `t = 1`.
    pub fn krull_dimension(&self) -> usize {
        let mut k = self.k_polynomial();
        let mut divisions = 0;
        while !k.is_empty() && k.iter().sum::<i64>() == 0 {
            k = divide_by_one_minus_t(&k);
            divisions += 1;
        }
        self.nvars - divisions
    }

    /// The Hilbert series numerator after cancelling all factors `1 - t`:
    /// `(h-vector, dimension)`.
    pub fn h_vector(&self) -> (Vec<i64>, usize) {
        let mut k = self.k_polynomial();
        let mut dim = self.nvars;
        while !k.is_empty() && k.iter().sum::<i64>() == 0 {
            k = divide_by_one_minus_t(&k);
            dim -= 1;
        }
        (k, dim)
    }
}

/// Exact division of a polynomial with `p(1) = 0` by `1 - t`.
pub fn divide_by_one_minus_t(p: &[i64]) -> Vec<i64> {
    // p = (1 - t) q  =>  q_k = sum_{i <= k} p_i
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = 0;
    for &c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc);
    }
    trim(&mut q);
    q
}

fn trim(p: &mut Vec<i64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = alloc::vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = alloc::vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn minimal_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// K-polynomial of `S / (gens)` for a monomial ideal, by the recursion
/// `K(J) = K(J + x) + t K(J : x)`.
pub fn hilbert_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    let gens = minimal_monomials(gens.to_vec());
    numerator_rec(gens, nvars)
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    if gens.is_empty() {
        return alloc::vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    // pairwise coprime generators form a regular sequence
    let mut counts = alloc::vec![0usize; nvars];
    for g in &gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let (pivot, &count) = counts.iter().enumerate().max_by_key(|(v, c)| (**c, core::cmp::Reverse(*v))).unwrap();
    if count <= 1 {
        let mut k = alloc::vec![1i64];
        for g in &gens {
            let mut f = alloc::vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            k = poly_mul(&k, &f);
        }
        return k;
    }
    let x = Monomial::var(nvars, pivot);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(pivot) == 0).copied().collect();
    plus.push(x);
    let colon: Vec<Monomial> =
        gens.iter().map(|g| if g.exp(pivot) > 0 { x.quotient_of(g).unwrap() } else { *g }).collect();
    let a = numerator_rec(minimal_monomials(plus), nvars);
    let b = numerator_rec(minimal_monomials(colon), nvars);
    let mut tb = alloc::vec![0i64];
    tb.extend(b);
    poly_add(&a, &tb)
}
