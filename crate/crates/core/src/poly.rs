//! Sparse multivariate polynomials in canonical ordered form.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{prints_negative, Field};
use crate::monomial::{Monomial, MonomialOrder, VariableIndex};

/// Printable names of the variables of a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarLabels(pub Vec<String>);

impl VarLabels {
    /// `x_{i,j}` names for an `m x n` generic matrix, row-major.
    pub fn matrix(m: usize, n: usize) -> Self {
        VarLabels(
            (0..m * n)
                .map(|p| {
                    let v = VariableIndex::from_position(p, n);
                    format!("x_{{{},{}}}", v.row, v.col)
                })
                .collect(),
        )
    }

    /// `y_1, y_2, ...` for rings without matrix structure.
    pub fn indexed(nvars: usize) -> Self {
        VarLabels((1..=nvars).map(|i| format!("y_{i}")).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for v in m.support() {
            let e = m.exp(v);
            if e == 1 {
                parts.push(self.0[v].clone());
            } else {
                parts.push(format!("{}^{}", self.0[v], e));
            }
        }
        parts.join("*")
    }

    fn lookup(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|l| l == name)
    }
}

/// A polynomial stored as `(monomial, coefficient)` pairs, strictly
/// descending in its monomial order, without zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F> {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize, order: MonomialOrder) -> Self {
        Polynomial { nvars, order, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, order: MonomialOrder, c: F) -> Self {
        Self::monomial(Monomial::one(nvars), c, order)
    }

    pub fn one(nvars: usize, order: MonomialOrder) -> Self {
        Self::constant(nvars, order, F::one())
    }

    pub fn var(nvars: usize, order: MonomialOrder, v: usize) -> Self {
        Self::monomial(Monomial::var(nvars, v), F::one(), order)
    }

    pub fn monomial(m: Monomial, c: F, order: MonomialOrder) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Self::zero(nvars, order);
        }
        Polynomial { nvars, order, terms: alloc::vec![(m, c)] }
    }

    /// Builds the canonical form of an arbitrary list of terms.
    pub fn from_terms(nvars: usize, order: MonomialOrder, mut terms: Vec<(Monomial, F)>) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match out.last_mut() {
                Some(last) if last.0 == m => {
                    last.1 = last.1.add(&c);
                }
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if last.1.is_zero() {
                out.pop();
            }
        }
        Polynomial { nvars, order, terms: out }
    }

    /// Wraps terms that are already sorted and free of zeros.
    pub(crate) fn from_sorted_unchecked(nvars: usize, order: MonomialOrder, terms: Vec<(Monomial, F)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Polynomial { nvars, order, terms }
    }

    /// Re-normalizes the polynomial; a no-op on canonical input.
    pub fn canonicalize(&self) -> Self {
        Self::from_terms(self.nvars, self.order, self.terms.clone())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn lead(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree (the orders are graded, so this is the lead's degree).
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Same polynomial sorted for another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { nvars: self.nvars, order, terms }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "{}", Error::RingMismatch { left: self.nvars, right: other.nvars });
        assert_eq!(self.order, other.order, "polynomials sorted for different monomial orders");
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        self.check(other);
        let order = self.order;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate_other { t.1.neg() } else { t.1.clone() };
            out.push((t.0, c));
        }
        Polynomial { nvars: self.nvars, order, terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, d)| (*m, d.mul(c))).collect(),
        }
    }

    /// `c * m * self`; the order is multiplicative so sortedness is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(t, d)| (t.mul(m), d.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                terms.push((m.mul(n), c.mul(d)));
            }
        }
        Self::from_terms(self.nvars, self.order, terms)
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero lead")),
        }
    }

    /// Moves the polynomial into a ring with `nvars` variables via `map[old] = Some(new)`.
    /// Returns `None` if a variable without image occurs.
    pub fn remap(&self, nvars: usize, map: &[Option<usize>]) -> Option<Self> {
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            terms.push((m.remap(nvars, map)?, c.clone()));
        }
        Some(Self::from_terms(nvars, self.order, terms))
    }

    /// Substitutes `x_v := replacement` (a polynomial in the same ring).
    pub fn substitute(&self, v: usize, replacement: &Self) -> Self {
        self.check(replacement);
        let mut acc = Self::zero(self.nvars, self.order);
        // powers of the replacement, computed on demand
        let mut powers: Vec<Self> = alloc::vec![Self::one(self.nvars, self.order)];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(replacement);
                powers.push(next);
            }
            let mut rest = *m;
            for _ in 0..e {
                rest = Monomial::var(self.nvars, v).quotient_of(&rest).unwrap();
            }
            acc = acc.add(&powers[e].mul_term(&rest, c));
        }
        acc
    }

    /// Text form: terms in descending order, variables named by `labels`.
    pub fn render(&self, labels: &VarLabels) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = prints_negative(c);
            let abs = if neg { c.neg() } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = labels.render_monomial(m);
            if m.is_one() {
                s.push_str(&format!("{abs}"));
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{abs}*{mono}"));
            }
        }
        s
    }

    /// Parses the output of [`Polynomial::render`].
    pub fn parse(text: &str, labels: &VarLabels, order: MonomialOrder) -> Result<Self> {
        let nvars = labels.len();
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if compact == "0" {
            return Ok(Self::zero(nvars, order));
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut depth = 0i32;
        for ch in compact.chars() {
            match ch {
                '{' | '(' => {
                    depth += 1;
                    current.push(ch);
                }
                '}' | ')' => {
                    depth -= 1;
                    current.push(ch);
                }
                '+' | '-' if depth == 0 => {
                    if !current.is_empty() {
                        pieces.push((negative, core::mem::take(&mut current)));
                    }
                    negative = ch == '-';
                }
                _ => current.push(ch),
            }
        }
        if current.is_empty() {
            return Err(Error::Parse(format!("dangling sign in '{text}'")));
        }
        pieces.push((negative, current));
        let mut terms = Vec::new();
        for (neg, piece) in pieces {
            let mut coeff = F::one();
            let mut exps = alloc::vec![0u32; nvars];
            for factor in piece.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in '{piece}'")));
                }
                if let Some(idx) = labels.lookup(factor) {
                    exps[idx] += 1;
                    continue;
                }
                if let Some((base, e)) = factor.rsplit_once('^') {
                    if let (Some(idx), Ok(e)) = (labels.lookup(base), e.parse::<u32>()) {
                        exps[idx] += e;
                        continue;
                    }
                }
                match F::parse(factor) {
                    Some(c) => coeff = coeff.mul(&c),
                    None => return Err(Error::Parse(format!("unknown factor '{factor}'"))),
                }
            }
            if neg {
                coeff = coeff.neg();
            }
            terms.push((Monomial::from_exponents(&exps)?, coeff));
        }
        Ok(Self::from_terms(nvars, order, terms))
    }
}

impl<F: fmt::Debug> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter().map(|(m, c)| (c, m))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, F32003};

    type P = Polynomial<F32003>;
    const O: MonomialOrder = MonomialOrder::DegLex;

    fn x(r: usize, c: usize) -> P {
        // 2x3 matrix
        P::var(6, O, VariableIndex::new(r, c).position(3))
    }

    fn minor(c1: usize, c2: usize) -> P {
        x(1, c1).mul(&x(2, c2)).sub(&x(1, c2).mul(&x(2, c1)))
    }

    #[test]
    fn additive_inverse_and_identity() {
        let m = minor(1, 2);
        let other = x(1, 2).mul(&x(2, 1)).sub(&x(1, 1).mul(&x(2, 2)));
        assert!(m.add(&other).is_zero());
        assert_eq!(m.mul(&P::one(6, O)), m);
    }

    #[test]
    fn product_of_two_minors() {
        let p = minor(1, 2).mul(&minor(1, 3));
        assert_eq!(p.len(), 4);
        assert!(p.terms().iter().all(|(_, c)| c.is_one() || c.neg().is_one()));
        let labels = VarLabels::matrix(2, 3);
        assert_eq!(labels.render_monomial(p.lead_monomial().unwrap()), "x_{1,1}^2*x_{2,2}*x_{2,3}");
    }

    #[test]
    fn render_parse_round_trip() {
        let labels = VarLabels::matrix(2, 3);
        let p = minor(1, 2).mul(&minor(2, 3)).scale(&F32003::from_i64(-3)).add(&P::constant(6, O, F32003::from_i64(5)));
        let text = p.render(&labels);
        assert_eq!(P::parse(&text, &labels, O).unwrap(), p);
        let q: Polynomial<Rational> = Polynomial::parse("3/2*x_{1,1}^2 - x_{2,3}", &labels, O).unwrap();
        assert_eq!(q.render(&labels), "3/2*x_{1,1}^2 - x_{2,3}");
        assert!(P::parse("x_{9,9}", &labels, O).is_err());
    }

    #[test]
    fn substitution() {
        // x11 -> x12 + x21 in x11*x22
        let p = x(1, 1).mul(&x(2, 2));
        let r = x(1, 2).add(&x(2, 1));
        let s = p.substitute(0, &r);
        assert_eq!(s, x(1, 2).mul(&x(2, 2)).add(&x(2, 1).mul(&x(2, 2))));
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let p = minor(1, 3).mul(&minor(2, 3));
        assert_eq!(p.canonicalize(), p);
        assert_eq!(p.canonicalize().canonicalize(), p.canonicalize());
    }
}
