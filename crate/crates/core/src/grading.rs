//! Gradings of the matrix-variable ring by vectors.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::Field;
use crate::monomial::{Monomial, VariableIndex};
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GradingMode {
    /// Every variable has degree 1.
    Standard,
    /// `deg x_{ij} = e_j` in `Z^n`.
    Column,
    /// `deg x_{ij} = e_i` in `Z^m`.
    Row,
    /// One unit vector per variable, `Z^{mn}`.
    Fine,
    /// `deg x_{ij} = (e_i, e_j)` in `Z^{m+n}`; the finest grading in which
    /// every minor is homogeneous.
    RowColumn,
}

/// A degree vector; the partial order is componentwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeVector(pub Vec<u32>);

impl DegreeVector {
    pub fn zero(width: usize) -> Self {
        DegreeVector(vec![0; width])
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        DegreeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` if `other <= self`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(DegreeVector(out))
    }
}

impl PartialOrd for DegreeVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.0.len() != other.0.len() {
            return None;
        }
        let le = self.0.iter().zip(&other.0).all(|(a, b)| a <= b);
        let ge = self.0.iter().zip(&other.0).all(|(a, b)| a >= b);
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Grading {
    pub mode: GradingMode,
    pub rows: usize,
    pub cols: usize,
}

impl Grading {
    pub fn new(mode: GradingMode, rows: usize, cols: usize) -> Self {
        Grading { mode, rows, cols }
    }

    pub fn width(&self) -> usize {
        match self.mode {
            GradingMode::Standard => 1,
            GradingMode::Column => self.cols,
            GradingMode::Row => self.rows,
            GradingMode::Fine => self.rows * self.cols,
            GradingMode::RowColumn => self.rows + self.cols,
        }
    }

    pub fn degree_of(&self, v: VariableIndex) -> DegreeVector {
        let mut d = DegreeVector::zero(self.width());
        match self.mode {
            GradingMode::Standard => d.0[0] = 1,
            GradingMode::Column => d.0[v.col - 1] = 1,
            GradingMode::Row => d.0[v.row - 1] = 1,
            GradingMode::Fine => d.0[v.position(self.cols)] = 1,
            GradingMode::RowColumn => {
                d.0[v.row - 1] = 1;
                d.0[self.rows + v.col - 1] = 1;
            }
        }
        d
    }

    /// Degree vectors of all variables in row-major order.
    pub fn variable_degrees(&self) -> Vec<DegreeVector> {
        (0..self.rows * self.cols)
            .map(|p| self.degree_of(VariableIndex::from_position(p, self.cols)))
            .collect()
    }
}

/// Multidegree of a monomial given the degree vector of each variable.
pub fn monomial_degree(m: &Monomial, var_degrees: &[DegreeVector]) -> DegreeVector {
    let width = var_degrees.first().map_or(0, |d| d.width());
    let mut out = DegreeVector::zero(width);
    for v in m.support() {
        let e = m.exp(v);
        for (o, d) in out.0.iter_mut().zip(&var_degrees[v].0) {
            *o += e * d;
        }
    }
    out
}

/// Result of a multidegree query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Multidegree {
    /// The zero polynomial, compatible with every degree.
    Bottom,
    Homogeneous(DegreeVector),
    Inhomogeneous,
}

impl Multidegree {
    /// Degree of a product; `Bottom` absorbs, `Inhomogeneous` is contagious.
    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Multidegree::Bottom, _) | (_, Multidegree::Bottom) => Multidegree::Bottom,
            (Multidegree::Homogeneous(a), Multidegree::Homogeneous(b)) => Multidegree::Homogeneous(a.add(b)),
            _ => Multidegree::Inhomogeneous,
        }
    }
}

/// Multidegree with respect to explicit variable degrees.
pub fn multidegree_with<F: Field>(p: &Polynomial<F>, var_degrees: &[DegreeVector]) -> Multidegree {
    let mut terms = p.terms().iter();
    let Some((first, _)) = terms.next() else {
        return Multidegree::Bottom;
    };
    let d = monomial_degree(first, var_degrees);
    for (m, _) in terms {
        if monomial_degree(m, var_degrees) != d {
            return Multidegree::Inhomogeneous;
        }
    }
    Multidegree::Homogeneous(d)
}

/// Multidegree of a polynomial in the `rows x cols` matrix variables.
pub fn multidegree<F: Field>(p: &Polynomial<F>, g: &Grading) -> Multidegree {
    assert_eq!(p.nvars(), g.rows * g.cols, "polynomial ring does not match the grading");
    multidegree_with(p, &g.variable_degrees())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::F32003;
    use crate::monomial::MonomialOrder;

    type P = Polynomial<F32003>;

    fn x(r: usize, c: usize, cols: usize) -> P {
        P::var(2 * cols, MonomialOrder::DegLex, VariableIndex::new(r, c).position(cols))
    }

    #[test]
    fn minor_column_degree() {
        let f = x(1, 1, 3).mul(&x(2, 3, 3)).sub(&x(1, 3, 3).mul(&x(2, 1, 3)));
        let g = Grading::new(GradingMode::Column, 2, 3);
        assert_eq!(multidegree(&f, &g), Multidegree::Homogeneous(DegreeVector(vec![1, 0, 1])));
        let s = Grading::new(GradingMode::Standard, 2, 3);
        assert_eq!(multidegree(&f, &s), Multidegree::Homogeneous(DegreeVector(vec![2])));
        let mixed = x(1, 1, 3).add(&x(1, 1, 3).mul(&x(2, 2, 3)));
        assert_eq!(multidegree(&mixed, &s), Multidegree::Inhomogeneous);
        assert_eq!(multidegree(&P::zero(6, MonomialOrder::DegLex), &s), Multidegree::Bottom);
    }

    #[test]
    fn minors_are_not_fine_homogeneous() {
        let f = x(1, 1, 2).mul(&x(2, 2, 2)).sub(&x(1, 2, 2).mul(&x(2, 1, 2)));
        assert_eq!(multidegree(&f, &Grading::new(GradingMode::Fine, 2, 2)), Multidegree::Inhomogeneous);
        assert!(matches!(
            multidegree(&f, &Grading::new(GradingMode::RowColumn, 2, 2)),
            Multidegree::Homogeneous(_)
        ));
    }

    #[test]
    fn partial_order() {
        let a = DegreeVector(vec![1, 0, 2]);
        let b = DegreeVector(vec![1, 1, 2]);
        let c = DegreeVector(vec![0, 2, 0]);
        assert!(a < b);
        assert_eq!(a.partial_cmp(&c), None);
        assert_eq!(b.checked_sub(&a), Some(DegreeVector(vec![0, 1, 0])));
        assert_eq!(a.checked_sub(&b), None);
    }
}
