//! Re-verification of product witnesses from their text form alone.
//!
//! This path shares only polynomial arithmetic and normal forms with the
//! engine: chains are parsed back from text, differentials and wedges are
//! recomputed term by term, and the boundary test is a dense rank
//! computation over every `u e_W` of the right multidegree in the full ring.

use std::collections::{BTreeMap, HashMap};

use anyhow::{anyhow, bail, Context};
use golodcheck_core::{buchberger, Field, GroebnerBasis, MinorSelection, Monomial, MonomialOrder, Polynomial, VarLabels};

use crate::report::WitnessRecord;
use crate::with_field;

/// Wedge index sets are kept sorted.
type Chain<F> = BTreeMap<Vec<usize>, Polynomial<F>>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WitnessCheck {
    pub left_cycle: bool,
    pub right_cycle: bool,
    pub product_cycle: bool,
    pub product_is_wedge: bool,
    pub product_not_boundary: bool,
    pub boundary_rank: usize,
}

impl WitnessCheck {
    pub fn ok(&self) -> bool {
        self.left_cycle && self.right_cycle && self.product_cycle && self.product_is_wedge && self.product_not_boundary
    }
}

struct Ring<F> {
    m: usize,
    n: usize,
    labels: VarLabels,
    gb: GroebnerBasis<F>,
}

fn sort_with_sign(vars: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut inversions = 0;
    for a in 0..vars.len() {
        for b in a + 1..vars.len() {
            if vars[a] == vars[b] {
                return None;
            }
            if vars[a] > vars[b] {
                inversions += 1;
            }
        }
    }
    let mut sorted = vars.to_vec();
    sorted.sort_unstable();
    Some((sorted, inversions % 2 == 1))
}

fn add_term<F: Field>(chain: &mut Chain<F>, w: Vec<usize>, p: Polynomial<F>) {
    if p.is_zero() {
        return;
    }
    let sum = match chain.remove(&w) {
        Some(q) => q.add(&p),
        None => p,
    };
    if !sum.is_zero() {
        chain.insert(w, sum);
    }
}

impl<F: Field> Ring<F> {
    fn new(sel: &MinorSelection) -> Self {
        let gens = sel.polynomials::<F>();
        let nvars = sel.m * sel.n;
        Ring { m: sel.m, n: sel.n, labels: VarLabels::matrix(sel.m, sel.n), gb: buchberger(&gens, nvars, MonomialOrder::DegLex) }
    }

    fn nvars(&self) -> usize {
        self.m * self.n
    }

    fn parse_chain(&self, text: &str) -> anyhow::Result<Chain<F>> {
        let mut chain = Chain::new();
        let s = text.trim();
        if s == "0" {
            return Ok(chain);
        }
        let mut rest = s;
        loop {
            rest = rest.trim_start();
            let body = rest.strip_prefix('(').ok_or_else(|| anyhow!("expected '(' at {rest:?}"))?;
            let close = body.find(')').ok_or_else(|| anyhow!("unbalanced parenthesis"))?;
            let poly = Polynomial::parse(&body[..close], &self.labels, MonomialOrder::DegLex)
                .map_err(|e| anyhow!("coefficient {:?}: {e}", &body[..close]))?;
            rest = body[close + 1..].trim_start();
            let mut vars = Vec::new();
            if let Some(wedge) = rest.strip_prefix('*') {
                rest = wedge.trim_start();
                loop {
                    let inner = rest.strip_prefix("e[(").ok_or_else(|| anyhow!("expected e[(r,c)] at {rest:?}"))?;
                    let end = inner.find(")]").ok_or_else(|| anyhow!("unterminated e[...]"))?;
                    let (r, c) = inner[..end].split_once(',').ok_or_else(|| anyhow!("bad cell {:?}", &inner[..end]))?;
                    let (r, c): (usize, usize) = (r.trim().parse()?, c.trim().parse()?);
                    if r == 0 || c == 0 || r > self.m || c > self.n {
                        bail!("cell ({r},{c}) outside the matrix");
                    }
                    vars.push((r - 1) * self.n + (c - 1));
                    rest = &inner[end + 2..];
                    match rest.strip_prefix('^') {
                        Some(more) => rest = more,
                        None => break,
                    }
                }
            }
            if let Some((w, negative)) = sort_with_sign(&vars) {
                add_term(&mut chain, w, if negative { poly.neg() } else { poly });
            }
            rest = rest.trim_start();
            if rest.is_empty() {
                return Ok(chain);
            }
            rest = rest.strip_prefix('+').ok_or_else(|| anyhow!("expected '+' at {rest:?}"))?;
        }
    }

    fn reduce(&self, chain: Chain<F>) -> Chain<F> {
        let mut out = Chain::new();
        for (w, p) in chain {
            add_term(&mut out, w, self.gb.normal_form(&p));
        }
        out
    }

    fn differential(&self, chain: &Chain<F>) -> Chain<F> {
        let mut out = Chain::new();
        for (w, p) in chain {
            for (s, &v) in w.iter().enumerate() {
                let x = Polynomial::var(self.nvars(), MonomialOrder::DegLex, v);
                let term = x.mul(p);
                let mut rest = w.clone();
                rest.remove(s);
                add_term(&mut out, rest, if s % 2 == 0 { term } else { term.neg() });
            }
        }
        self.reduce(out)
    }

    fn wedge(&self, a: &Chain<F>, b: &Chain<F>) -> Chain<F> {
        let mut out = Chain::new();
        for (wa, p) in a {
            for (wb, q) in b {
                let joined: Vec<usize> = wa.iter().chain(wb).copied().collect();
                if let Some((w, negative)) = sort_with_sign(&joined) {
                    let prod = p.mul(q);
                    add_term(&mut out, w, if negative { prod.neg() } else { prod });
                }
            }
        }
        self.reduce(out)
    }

    fn var_degree(&self, v: usize) -> Vec<u32> {
        let mut d = vec![0; self.m + self.n];
        d[v / self.n] += 1;
        d[self.m + v % self.n] += 1;
        d
    }

    fn multidegree(&self, chain: &Chain<F>) -> anyhow::Result<(usize, u32, Vec<u32>)> {
        let mut found = None;
        for (w, p) in chain {
            for (mono, _) in p.terms() {
                let mut d = vec![0; self.m + self.n];
                for v in w.iter().copied().chain(mono.support().flat_map(|v| std::iter::repeat_n(v, mono.exp(v) as usize))) {
                    for (a, b) in d.iter_mut().zip(self.var_degree(v)) {
                        *a += b;
                    }
                }
                let key = (w.len(), w.len() as u32 + mono.degree(), d);
                match &found {
                    None => found = Some(key),
                    Some(k) if *k == key => {}
                    Some(_) => bail!("chain is not homogeneous"),
                }
            }
        }
        found.ok_or_else(|| anyhow!("zero chain"))
    }

    /// Monomials of degree `d` in all variables with the given row/column degree.
    fn monomials_with_degree(&self, d: u32, target: &[u32]) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.nvars()];
        fn go(ring_m: usize, n: usize, v: usize, left: u32, target: &mut Vec<u32>, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if left == 0 {
                if target.iter().all(|x| *x == 0) {
                    out.push(Monomial::from_exponents(exps).expect("small exponents"));
                }
                return;
            }
            if v == exps.len() {
                return;
            }
            let (r, c) = (v / n, ring_m + v % n);
            let max = left.min(target[r]).min(target[c]);
            for e in (0..=max).rev() {
                target[r] -= e;
                target[c] -= e;
                exps[v] = e;
                go(ring_m, n, v + 1, left - e, target, exps, out);
                target[r] += e;
                target[c] += e;
            }
            exps[v] = 0;
        }
        let mut t = target.to_vec();
        go(self.m, self.n, 0, d, &mut t, &mut exps, &mut out);
        out
    }

    /// Whether `z` (a cycle of bidegree `(i, j)`) is a boundary. Returns the
    /// answer and the rank of the boundary space.
    fn is_boundary(&self, z: &Chain<F>) -> anyhow::Result<(bool, usize)> {
        if z.is_empty() {
            return Ok((true, 0));
        }
        let (i, j, alpha) = self.multidegree(z)?;
        let nv = self.nvars();
        let mut generators = Vec::new();
        if i < nv && j > i as u32 {
            for mask in 0u64..(1u64 << nv) {
                if mask.count_ones() as usize != i + 1 {
                    continue;
                }
                let w: Vec<usize> = (0..nv).filter(|v| mask & (1 << v) != 0).collect();
                let mut rest = alpha.clone();
                let mut fits = true;
                for &v in &w {
                    for (a, b) in rest.iter_mut().zip(self.var_degree(v)) {
                        if *a < b {
                            fits = false;
                        }
                        *a = a.saturating_sub(b);
                    }
                }
                if !fits {
                    continue;
                }
                for u in self.monomials_with_degree(j - i as u32 - 1, &rest) {
                    let mut c = Chain::new();
                    c.insert(w.clone(), Polynomial::monomial(u, F::one(), MonomialOrder::DegLex));
                    generators.push(self.differential(&c));
                }
            }
        }
        let mut columns: HashMap<(Vec<usize>, Monomial), usize> = HashMap::new();
        for c in generators.iter().chain(std::iter::once(z)) {
            for (w, p) in c {
                for (mono, _) in p.terms() {
                    let next = columns.len();
                    columns.entry((w.clone(), *mono)).or_insert(next);
                }
            }
        }
        let dense = |c: &Chain<F>| {
            let mut row = vec![F::zero(); columns.len()];
            for (w, p) in c {
                for (mono, coeff) in p.terms() {
                    row[columns[&(w.clone(), *mono)]] = coeff.clone();
                }
            }
            row
        };
        let mut rows: Vec<Vec<F>> = generators.iter().map(dense).collect();
        let r = dense_rank(rows.clone());
        rows.push(dense(z));
        Ok((dense_rank(rows) == r, r))
    }
}

/// Rank by plain Gaussian elimination.
pub fn dense_rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        let pivot: Vec<F> = rows[rank].iter().map(|x| x.mul(&inv)).collect();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

pub fn verify_with<F: Field>(sel: &MinorSelection, w: &WitnessRecord) -> anyhow::Result<WitnessCheck> {
    let ring = Ring::<F>::new(sel);
    let text = |c: &crate::report::ClassRecord| c.chain.clone().context("witness has no serialized chain");
    let left = ring.reduce(ring.parse_chain(&text(&w.left)?)?);
    let right = ring.reduce(ring.parse_chain(&text(&w.right)?)?);
    let product = ring.reduce(ring.parse_chain(&text(&w.product)?)?);
    let (boundary, rank) = ring.is_boundary(&product)?;
    Ok(WitnessCheck {
        left_cycle: ring.differential(&left).is_empty(),
        right_cycle: ring.differential(&right).is_empty(),
        product_cycle: ring.differential(&product).is_empty(),
        product_is_wedge: ring.wedge(&left, &right) == product,
        product_not_boundary: !boundary,
        boundary_rank: rank,
    })
}

pub fn verify(sel: &MinorSelection, field: crate::FieldChoice, w: &WitnessRecord) -> anyhow::Result<WitnessCheck> {
    with_field!(field, F => verify_with::<F>(sel, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use golodcheck_core::F32003;

    #[test]
    fn parse_and_signs() {
        let sel = MinorSelection::full(2, 2, 2);
        let ring = Ring::<F32003>::new(&sel);
        let c = ring.parse_chain("(x_{1,1}) * e[(2,2)]^e[(1,1)] + (x_{1,1}) * e[(1,1)]^e[(2,2)]").unwrap();
        assert!(c.is_empty());
        let d = ring.parse_chain("(x_{2,2}) * e[(1,1)] + (-x_{1,2}) * e[(2,1)]").unwrap();
        assert_eq!(d.len(), 2);
        assert!(ring.differential(&d).is_empty());
        assert!(ring.parse_chain("(x_{3,1}) * e[(1,1)]").is_err());
        assert!(ring.parse_chain("x_{1,1} * e[(1,1)]").is_err());
    }

    #[test]
    fn boundary_detection() {
        let sel = MinorSelection::full(2, 2, 2);
        let ring = Ring::<F32003>::new(&sel);
        // d(e_11 ^ e_22) = x_11 e_22 - x_22 e_11 is a boundary
        let b = ring.parse_chain("(x_{1,1}) * e[(2,2)] + (-x_{2,2}) * e[(1,1)]").unwrap();
        assert!(ring.is_boundary(&b).unwrap().0);
        // the Koszul cycle of the determinant is not
        let z = ring.parse_chain("(x_{2,2}) * e[(1,1)] + (-x_{1,2}) * e[(2,1)]").unwrap();
        assert!(!ring.is_boundary(&z).unwrap().0);
    }

    #[test]
    fn rank() {
        let v = |xs: &[i64]| xs.iter().map(|&x| F32003::from_i64(x)).collect::<Vec<_>>();
        assert_eq!(dense_rank(vec![v(&[1, 2]), v(&[2, 4]), v(&[0, 1])]), 2);
        assert_eq!(dense_rank::<F32003>(vec![]), 0);
    }
}
