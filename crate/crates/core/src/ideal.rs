//! Homogeneous ideals together with the grading and naming of their ring.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grading::{multidegree_with, DegreeVector, Multidegree};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::monomial::{MonomialOrder, VariableIndex};
use crate::poly::{Polynomial, VarLabels};

/// Generators of an ideal in a polynomial ring whose variables carry degree
/// vectors, printable names and a matrix cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal<F> {
    nvars: usize,
    gens: Vec<Polynomial<F>>,
    var_degrees: Vec<DegreeVector>,
    labels: VarLabels,
    cells: Vec<VariableIndex>,
}

impl<F: Field> Ideal<F> {
    /// Validates that every generator is homogeneous for the given degrees.
    pub fn new(
        gens: Vec<Polynomial<F>>,
        var_degrees: Vec<DegreeVector>,
        labels: VarLabels,
        cells: Vec<VariableIndex>,
    ) -> Result<Self> {
        let nvars = var_degrees.len();
        if labels.len() != nvars || cells.len() != nvars {
            return Err(Error::LengthMismatch { left: nvars, right: labels.len().min(cells.len()) });
        }
        let mut kept = Vec::with_capacity(gens.len());
        for (k, g) in gens.into_iter().enumerate() {
            if g.nvars() != nvars {
                return Err(Error::RingMismatch { left: g.nvars(), right: nvars });
            }
            match multidegree_with(&g, &var_degrees) {
                Multidegree::Inhomogeneous => {
                    return Err(Error::Inhomogeneous(format!("generator {k} is not homogeneous")))
                }
                Multidegree::Bottom => {}
                Multidegree::Homogeneous(_) => kept.push(g.with_order(MonomialOrder::DegLex)),
            }
        }
        Ok(Ideal { nvars, gens: kept, var_degrees, labels, cells })
    }

    /// Standard grading, variables named `y_k`.
    pub fn standard(gens: Vec<Polynomial<F>>, nvars: usize) -> Result<Self> {
        Self::new(
            gens,
            alloc::vec![DegreeVector(alloc::vec![1]); nvars],
            VarLabels::indexed(nvars),
            (1..=nvars).map(|c| VariableIndex::new(1, c)).collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn var_degrees(&self) -> &[DegreeVector] {
        &self.var_degrees
    }

    pub fn labels(&self) -> &VarLabels {
        &self.labels
    }

    pub fn cells(&self) -> &[VariableIndex] {
        &self.cells
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn groebner(&self, order: MonomialOrder) -> GroebnerBasis<F> {
        buchberger(&self.gens, self.nvars, order)
    }

    /// Sorted distinct total degrees of the generators.
    pub fn generator_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.gens.iter().filter_map(|g| g.degree()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Variables occurring in some generator.
    pub fn used_variables(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.gens.iter().any(|g| g.terms().iter().any(|(m, _)| m.exp(v) > 0))).collect()
    }

    /// Restricts to the ring of the variables that occur in the generators.
    /// Returns the smaller ideal and the number of removed variables.
    pub fn strip_free_variables(&self) -> (Ideal<F>, usize) {
        let used = self.used_variables();
        let mut map = alloc::vec![None; self.nvars];
        for (new, &old) in used.iter().enumerate() {
            map[old] = Some(new);
        }
        let gens = self.gens.iter().map(|g| g.remap(used.len(), &map).expect("used variable")).collect();
        let ideal = Ideal {
            nvars: used.len(),
            gens,
            var_degrees: used.iter().map(|&v| self.var_degrees[v].clone()).collect(),
            labels: VarLabels(used.iter().map(|&v| self.labels.0[v].clone()).collect()),
            cells: used.iter().map(|&v| self.cells[v]).collect(),
        };
        (ideal, self.nvars - used.len())
    }

    /// Forgets the multigrading.
    pub fn with_standard_grading(&self) -> Ideal<F> {
        Ideal { var_degrees: alloc::vec![DegreeVector(alloc::vec![1]); self.nvars], ..self.clone() }
    }
}
