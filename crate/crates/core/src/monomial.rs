//! Exponent vectors over the matrix-variable alphabet and the monomial orders.

use core::cmp::Ordering;
use core::fmt;

use crate::error::Error;

/// Hard limit on the number of variables a monomial can carry.
pub const MAX_VARS: usize = 32;

/// A variable `x_{row,col}` of the generic matrix, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableIndex {
    pub row: usize,
    pub col: usize,
}

impl VariableIndex {
    pub fn new(row: usize, col: usize) -> Self {
        VariableIndex { row, col }
    }

    /// Row-major position among the `m * n` variables (0-based).
    pub fn position(self, ncols: usize) -> usize {
        (self.row - 1) * ncols + (self.col - 1)
    }

    pub fn from_position(pos: usize, ncols: usize) -> Self {
        VariableIndex { row: pos / ncols + 1, col: pos % ncols + 1 }
    }
}

/// Exponent vector of fixed length `nvars`.
///
/// Variables are ranked by their row-major position: `x_{1,1} < x_{1,2} < ... < x_{m,n}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    degree: u16,
    nvars: u8,
}

/// Alias matching the data-model vocabulary.
pub type ExponentVector = Monomial;

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        Monomial { exps: [0; MAX_VARS], degree: 0, nvars: nvars as u8 }
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        assert!(v < nvars);
        let mut m = Self::one(nvars);
        m.exps[v] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self, Error> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        let mut m = Self::one(exps.len());
        let mut deg = 0u32;
        for (v, &e) in exps.iter().enumerate() {
            if e > u8::MAX as u32 {
                return Err(Error::ExponentOverflow);
            }
            m.exps[v] = e as u8;
            deg += e;
        }
        m.degree = deg as u16;
        Ok(m)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    #[inline]
    pub fn exp(&self, v: usize) -> u32 {
        self.exps[v] as u32
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps[..self.nvars as usize]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Variables occurring in the monomial, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nvars as usize).filter(move |&v| self.exps[v] > 0)
    }

    /// Largest variable index occurring, if any.
    pub fn max_var(&self) -> Option<usize> {
        (0..self.nvars as usize).rev().find(|&v| self.exps[v] > 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        for v in 0..self.nvars as usize {
            out.exps[v] = self.exps[v].checked_add(other.exps[v]).expect("exponent overflow");
        }
        out.degree = self.degree + other.degree;
        out
    }

    pub fn mul_var(&self, v: usize) -> Monomial {
        let mut out = *self;
        out.exps[v] = out.exps[v].checked_add(1).expect("exponent overflow");
        out.degree += 1;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        (0..self.nvars as usize).all(|v| self.exps[v] <= other.exps[v])
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = *other;
        for v in 0..self.nvars as usize {
            out.exps[v] -= self.exps[v];
        }
        out.degree -= self.degree;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0u16;
        for v in 0..self.nvars as usize {
            out.exps[v] = self.exps[v].max(other.exps[v]);
            deg += out.exps[v] as u16;
        }
        out.degree = deg;
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0u16;
        for v in 0..self.nvars as usize {
            out.exps[v] = self.exps[v].min(other.exps[v]);
            deg += out.exps[v] as u16;
        }
        out.degree = deg;
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..self.nvars as usize).all(|v| self.exps[v] == 0 || other.exps[v] == 0)
    }

    /// Re-embeds the monomial into a ring with `nvars` variables via `map[old] = new`.
    pub fn remap(&self, nvars: usize, map: &[Option<usize>]) -> Option<Monomial> {
        let mut out = Monomial::one(nvars);
        for v in self.support() {
            let w = map[v]?;
            out.exps[w] = self.exps[v];
        }
        out.degree = self.degree;
        Some(out)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

/// Graded monomial orders over the row-major variable ranking.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree first, ties broken at the largest variable where the exponents
    /// differ: the larger exponent wins. This is the system order.
    #[default]
    DegLex,
    /// Degree first, ties broken at the smallest variable where the exponents
    /// differ: the smaller exponent wins.
    DegRevLex,
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.degree.cmp(&b.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        let n = a.nvars.max(b.nvars) as usize;
        match self {
            MonomialOrder::DegLex => {
                for v in (0..n).rev() {
                    match a.exps[v].cmp(&b.exps[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex => {
                for v in 0..n {
                    match a.exps[v].cmp(&b.exps[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Compares two exponent vectors; vectors of different lengths are rejected.
pub fn monomial_compare(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Result<Ordering, Error> {
    if a.nvars != b.nvars {
        return Err(Error::LengthMismatch { left: a.nvars(), right: b.nvars() });
    }
    Ok(order.cmp(a, b))
}
