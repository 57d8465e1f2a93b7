//! Graded pieces of a quotient ring `R = S / I` in standard-monomial bases.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::field::Field;
use crate::grading::{monomial_degree, DegreeVector};
use crate::groebner::GroebnerBasis;
use crate::ideal::Ideal;
use crate::linalg::{axpy, SparseVec};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

/// Multidegree key of a graded piece.
pub type DegKey = Vec<u32>;

/// `R` in degrees `0..=max_degree`, with multiplication-by-variable tables.
#[derive(Clone, Debug)]
pub struct QuotientRing<F> {
    ideal: Ideal<F>,
    gb: GroebnerBasis<F>,
    max_degree: u32,
    basis: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, u32>>,
    keys: Vec<Vec<DegKey>>,
    groups: Vec<BTreeMap<DegKey, Vec<u32>>>,
    // mul[d][k * nvars + v] = NF(basis[d][k] * x_v) over basis[d + 1]
    mul: Vec<Vec<SparseVec<F>>>,
}

impl<F: Field> QuotientRing<F> {
    pub fn new(ideal: &Ideal<F>, order: MonomialOrder, max_degree: u32) -> Self {
        let gb = ideal.groebner(order);
        Self::with_basis(ideal, gb, max_degree)
    }

    pub fn with_basis(ideal: &Ideal<F>, gb: GroebnerBasis<F>, max_degree: u32) -> Self {
        let n = ideal.nvars();
        let mut basis = Vec::new();
        let mut index = Vec::new();
        let mut keys = Vec::new();
        let mut groups = Vec::new();
        for d in 0..=max_degree {
            let b = gb.quotient_monomial_basis(d);
            let idx: HashMap<Monomial, u32> = b.iter().enumerate().map(|(k, m)| (*m, k as u32)).collect();
            let ks: Vec<DegKey> = b.iter().map(|m| monomial_degree(m, ideal.var_degrees()).0).collect();
            let mut g: BTreeMap<DegKey, Vec<u32>> = BTreeMap::new();
            for (k, key) in ks.iter().enumerate() {
                g.entry(key.clone()).or_default().push(k as u32);
            }
            basis.push(b);
            index.push(idx);
            keys.push(ks);
            groups.push(g);
        }
        let mut mul = Vec::new();
        for d in 0..max_degree as usize {
            let mut table = Vec::with_capacity(basis[d].len() * n);
            for m in &basis[d] {
                for v in 0..n {
                    let prod = m.mul_var(v);
                    let vec = if index[d + 1].contains_key(&prod) {
                        alloc::vec![(index[d + 1][&prod] as u64, F::one())]
                    } else {
                        let p = Polynomial::monomial(prod, F::one(), gb.order());
                        let nf = gb.normal_form(&p);
                        crate::linalg::collect(nf.terms().iter().map(|(t, c)| (index[d + 1][t] as u64, c.clone())))
                    };
                    table.push(vec);
                }
            }
            mul.push(table);
        }
        QuotientRing { ideal: ideal.clone(), gb, max_degree, basis, index, keys, groups, mul }
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn groebner(&self) -> &GroebnerBasis<F> {
        &self.gb
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn dim(&self, d: u32) -> usize {
        self.basis[d as usize].len()
    }

    pub fn basis(&self, d: u32) -> &[Monomial] {
        &self.basis[d as usize]
    }

    pub fn index_of(&self, d: u32, m: &Monomial) -> Option<u32> {
        self.index[d as usize].get(m).copied()
    }

    pub fn key(&self, d: u32, k: u32) -> &DegKey {
        &self.keys[d as usize][k as usize]
    }

    /// Basis indices of degree `d` grouped by multidegree.
    pub fn groups(&self, d: u32) -> &BTreeMap<DegKey, Vec<u32>> {
        &self.groups[d as usize]
    }

    pub fn group(&self, d: u32, key: &DegKey) -> &[u32] {
        self.groups[d as usize].get(key).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn var_key(&self, v: usize) -> &DegKey {
        &self.ideal.var_degrees()[v].0
    }

    pub fn key_width(&self) -> usize {
        self.ideal.var_degrees().first().map_or(1, |d| d.width())
    }

    #[inline]
    pub fn mul_var(&self, d: u32, k: u32, v: usize) -> &SparseVec<F> {
        &self.mul[d as usize][k as usize * self.nvars() + v]
    }

    /// `x_v * a` for `a` in degree `d`.
    pub fn apply_var(&self, d: u32, a: &SparseVec<F>, v: usize) -> SparseVec<F> {
        let mut acc = Vec::new();
        for (k, c) in a {
            acc = axpy(&acc, c, self.mul_var(d, *k as u32, v));
        }
        acc
    }

    /// `m * a` for `a` in degree `d`.
    pub fn apply_monomial(&self, d: u32, a: &SparseVec<F>, m: &Monomial) -> SparseVec<F> {
        let mut cur = a.clone();
        let mut deg = d;
        for v in m.support() {
            for _ in 0..m.exp(v) {
                cur = self.apply_var(deg, &cur, v);
                deg += 1;
            }
        }
        cur
    }

    /// Product of basis elements `basis[d1][k1] * basis[d2][k2]`.
    pub fn mul_basis(&self, d1: u32, k1: u32, d2: u32, k2: u32) -> SparseVec<F> {
        let m = self.basis[d1 as usize][k1 as usize];
        self.apply_monomial(d2, &alloc::vec![(k2 as u64, F::one())], &m)
    }

    /// Coordinates of a homogeneous polynomial of degree `d` after reduction.
    pub fn vectorize(&self, d: u32, p: &Polynomial<F>) -> SparseVec<F> {
        let nf = self.gb.normal_form(p);
        crate::linalg::collect(nf.terms().iter().map(|(m, c)| {
            assert_eq!(m.degree(), d, "polynomial is not homogeneous of degree {d}");
            (self.index[d as usize][m] as u64, c.clone())
        }))
    }

    pub fn to_polynomial(&self, d: u32, a: &SparseVec<F>) -> Polynomial<F> {
        Polynomial::from_terms(
            self.nvars(),
            self.gb.order(),
            a.iter().map(|(k, c)| (self.basis[d as usize][*k as usize], c.clone())).collect(),
        )
    }

    pub fn multidegree_of(&self, m: &Monomial) -> DegreeVector {
        monomial_degree(m, self.ideal.var_degrees())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::F32003;

    #[test]
    fn hypersurface_pieces() {
        let o = MonomialOrder::DegLex;
        type P = Polynomial<F32003>;
        let f = P::var(4, o, 0).mul(&P::var(4, o, 3)).sub(&P::var(4, o, 1).mul(&P::var(4, o, 2)));
        let ideal = Ideal::standard(alloc::vec![f], 4).unwrap();
        let r = QuotientRing::new(&ideal, o, 4);
        assert_eq!((0..=4).map(|d| r.dim(d)).collect::<Vec<_>>(), alloc::vec![1, 4, 9, 16, 25]);
        // x11 * x22 reduces to x12 * x21
        let x11 = r.index_of(1, &Monomial::var(4, 0)).unwrap();
        let v = r.mul_var(1, x11, 3);
        assert_eq!(v.len(), 1);
        let m = r.basis(2)[v[0].0 as usize];
        assert_eq!(m, Monomial::var(4, 1).mul(&Monomial::var(4, 2)));
    }
}
