//! Minimal graded free resolutions of `S/I` over `S` and Betti tables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::GroebnerBasis;
use crate::module::{minimalize, module_syzygies, FreeModuleElement};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

/// Graded Betti numbers `beta_{i,j}`; only nonzero entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        BettiTable::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (u32, u32, u64)>) -> Self {
        let mut t = BettiTable::new();
        for (i, j, v) in entries {
            t.add(i, j, v);
        }
        t
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: u32, j: u32, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    /// `(i, j, beta_{i,j})` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    /// Projective dimension (largest `i` with a nonzero entry).
    pub fn projective_dimension(&self) -> u32 {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Castelnuovo-Mumford regularity `max (j - i)`.
    pub fn regularity(&self) -> u32 {
        self.entries.keys().map(|k| k.1 - k.0).max().unwrap_or(0)
    }

    pub fn max_internal_degree(&self) -> u32 {
        self.entries.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// `beta_i = sum_j beta_{i,j}` for `i = 0..=pd`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = alloc::vec![0; self.projective_dimension() as usize + 1];
        for (&(i, _), &v) in &self.entries {
            out[i as usize] += v;
        }
        out
    }

    /// Alternating sum `sum (-1)^i beta_{i,j} t^j`, indexed by `j`.
    pub fn k_polynomial(&self) -> Vec<i64> {
        let mut out = alloc::vec![0i64; self.max_internal_degree() as usize + 1];
        for (&(i, j), &v) in &self.entries {
            let s = if i % 2 == 0 { 1 } else { -1 };
            out[j as usize] += s * v as i64;
        }
        out
    }

    /// Tally layout: columns `i`, rows `j - i`, then a `total:` line.
    pub fn render(&self) -> String {
        let pd = self.projective_dimension();
        let reg = self.regularity();
        let cell = |v: u64| if v == 0 { String::from(".") } else { format!("{v}") };
        let width = self.entries.values().map(|v| format!("{v}").len()).max().unwrap_or(1).max(1);
        let label_width = format!("{reg}:").len().max("total:".len());
        let mut out = String::new();
        out.push_str(&format!("{:>label_width$}", ""));
        for i in 0..=pd {
            out.push_str(&format!(" {i:>width$}"));
        }
        out.push('\n');
        out.push_str(&format!("{:>label_width$}", "total:"));
        for v in self.totals() {
            out.push_str(&format!(" {:>width$}", v));
        }
        out.push('\n');
        for r in 0..=reg {
            out.push_str(&format!("{:>label_width$}", format!("{r}:")));
            for i in 0..=pd {
                out.push_str(&format!(" {:>width$}", cell(self.get(i, i + r))));
            }
            out.push('\n');
        }
        out
    }
}

fn as_element<F: Field>(p: &Polynomial<F>) -> FreeModuleElement<F> {
    FreeModuleElement { components: alloc::vec![p.clone()], shifts: alloc::vec![0] }
}

/// Betti table of `S/I` by iterated minimal syzygies.
pub fn minimal_resolution<F: Field>(gens: &[Polynomial<F>]) -> Result<BettiTable> {
    let mut table = BettiTable::new();
    table.add(0, 0, 1);
    let nonzero: Vec<&Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return Ok(table);
    };
    let nvars = first.nvars();
    for (k, g) in nonzero.iter().enumerate() {
        if !g.is_homogeneous() {
            return Err(Error::Inhomogeneous(format!("generator {k}")));
        }
        if g.is_constant() {
            return Err(Error::Internal("unit ideal".into()));
        }
    }
    let order = MonomialOrder::DegLex;
    let elems: Vec<FreeModuleElement<F>> = nonzero.iter().map(|g| as_element(&g.with_order(order))).collect();
    let mut current = minimalize(&elems)?;
    let mut i = 1u32;
    while !current.is_empty() {
        if i as usize > nvars {
            return Err(Error::Internal(format!("resolution longer than {nvars} steps")));
        }
        for g in &current {
            table.add(i, g.degree()?.expect("nonzero generator"), 1);
        }
        current = module_syzygies(&current, order)?;
        i += 1;
    }
    Ok(table)
}

/// Whether the ideal (generated in degree `gendeg`) has a linear resolution.
pub fn linear_resolution_check(bt: &BettiTable, gendeg: u32) -> Result<bool> {
    let first: Vec<usize> = bt.entries().filter(|e| e.0 == 1).map(|e| e.1 as usize).collect();
    if first.iter().any(|&j| j != gendeg as usize) {
        return Err(Error::MixedGeneratorDegrees(first));
    }
    Ok(bt.entries().filter(|e| e.0 >= 1).all(|(i, j, _)| j == gendeg + i - 1))
}

/// Checks `sum (-1)^i beta_{i,j} t^j = (1 - t)^n * sum_{d <= D} HF(d) t^d`
/// coefficientwise up to `t^D`.
pub fn hilbert_certificate<F: Field>(bt: &BettiTable, gb: &GroebnerBasis<F>, max_degree: u32) -> bool {
    if max_degree < bt.max_internal_degree() {
        return false;
    }
    let d = max_degree as usize;
    let mut lhs = bt.k_polynomial();
    lhs.resize(d + 1, 0);
    let mut rhs: Vec<i128> = (0..=max_degree).map(|k| gb.hilbert_function(k) as i128).collect();
    for _ in 0..gb.nvars() {
        for k in (1..=d).rev() {
            rhs[k] -= rhs[k - 1];
        }
    }
    lhs.iter().zip(&rhs).all(|(a, b)| *a as i128 == *b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::F32003;
    use crate::groebner::buchberger;
    use crate::subdet::MinorSelection;

    #[test]
    fn hypersurface_table() {
        let gens = MinorSelection::full(2, 2, 2).polynomials::<F32003>();
        let bt = minimal_resolution(&gens).unwrap();
        assert_eq!(bt, BettiTable::from_entries([(0, 0, 1), (1, 2, 1)]));
        let gb = buchberger(&gens, 4, MonomialOrder::DegLex);
        assert!(hilbert_certificate(&bt, &gb, 6));
        assert!(linear_resolution_check(&bt, 2).unwrap());
    }

    #[test]
    fn two_by_three() {
        let gens = MinorSelection::full(2, 3, 2).polynomials::<F32003>();
        let bt = minimal_resolution(&gens).unwrap();
        assert_eq!(bt, BettiTable::from_entries([(0, 0, 1), (1, 2, 3), (2, 3, 2)]));
        assert_eq!(bt.k_polynomial(), alloc::vec![1, 0, -3, 2]);
        assert!(bt.render().contains("total: 1 3 2"));
    }

    #[test]
    fn empty_ideal() {
        let bt = minimal_resolution::<F32003>(&[]).unwrap();
        assert_eq!(bt.totals(), alloc::vec![1]);
        assert!(linear_resolution_check(&bt, 2).unwrap());
        let gb = buchberger::<F32003>(&[], 4, MonomialOrder::DegLex);
        assert!(hilbert_certificate(&bt, &gb, 5));
    }

    #[test]
    fn mixed_degrees_rejected() {
        let bt = BettiTable::from_entries([(0, 0, 1), (1, 2, 1), (1, 3, 1)]);
        assert!(matches!(linear_resolution_check(&bt, 2), Err(Error::MixedGeneratorDegrees(_))));
    }
}
