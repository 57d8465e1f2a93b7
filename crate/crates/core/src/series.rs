//! Truncated bigraded series `sum c_{i,j} z^i t^j`.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    ActualResolution,
    GolodBound,
}

/// Coefficients `c_{i,j}` for `0 <= i, j <= max_degree`; only `j >= i` can be
/// nonzero for the series handled here.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BigradedSeries {
    pub max_degree: u32,
    pub provenance: Provenance,
    coeffs: Vec<Vec<u64>>,
}

impl BigradedSeries {
    pub fn zero(max_degree: u32, provenance: Provenance) -> Self {
        let n = max_degree as usize + 1;
        BigradedSeries { max_degree, provenance, coeffs: vec![vec![0; n]; n] }
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        if i > self.max_degree || j > self.max_degree {
            return 0;
        }
        self.coeffs[i as usize][j as usize]
    }

    pub fn set(&mut self, i: u32, j: u32, v: u64) {
        self.coeffs[i as usize][j as usize] = v;
    }

    pub fn add(&mut self, i: u32, j: u32, v: u64) {
        let c = &mut self.coeffs[i as usize][j as usize];
        *c = c.checked_add(v).expect("series coefficient overflow");
    }

    /// Rows `[i][j]` of the coefficient table.
    pub fn table(&self) -> &[Vec<u64>] {
        &self.coeffs
    }

    /// Coefficients of `z^i` after setting `t = 1` (within the window).
    pub fn collapse(&self) -> Vec<u64> {
        self.coeffs.iter().map(|row| row.iter().sum()).collect()
    }

    /// Multiplies by `(1 + z t)^k` and truncates.
    pub fn times_one_plus_zt(&self, k: usize) -> Self {
        let mut cur = self.clone();
        for _ in 0..k {
            let mut next = cur.clone();
            for i in 0..self.max_degree {
                for j in 0..self.max_degree {
                    let c = cur.coeffs[i as usize][j as usize];
                    if c != 0 {
                        next.add(i + 1, j + 1, c);
                    }
                }
            }
            cur = next;
        }
        cur
    }

    /// Restriction to `j <= upto`.
    pub fn truncate(&self, upto: u32) -> Self {
        let mut out = self.clone();
        for row in out.coeffs.iter_mut() {
            for (j, c) in row.iter_mut().enumerate() {
                if j as u32 > upto {
                    *c = 0;
                }
            }
        }
        out
    }

    /// Whether `self <= other` coefficientwise for internal degrees `<= upto`.
    pub fn dominated_by(&self, other: &Self, upto: u32) -> bool {
        (0..=upto.min(self.max_degree))
            .all(|j| (0..=self.max_degree).all(|i| self.get(i, j) <= other.get(i, j)))
    }

    /// First `(i, j, other - self)` with a difference, scanning `j` then `i`.
    pub fn first_difference(&self, other: &Self, upto: u32) -> Option<(u32, u32, i64)> {
        for j in 0..=upto.min(self.max_degree) {
            for i in 0..=j {
                let (a, b) = (self.get(i, j), other.get(i, j));
                if a != b {
                    return Some((i, j, b as i64 - a as i64));
                }
            }
        }
        None
    }
}
