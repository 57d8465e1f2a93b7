//! Verification campaigns over all selections of a small generic matrix.

use std::collections::BTreeMap;

use golodcheck_core::golod::{artinian_reduction, kunneth_check};
use golodcheck_core::koszul::koszul_betti;
use golodcheck_core::subdet::{canonicalize, enumerate_orbits, enumerate_selections, orbit, restrict_pair, shape_classify, Axis};
use golodcheck_core::{minimal_resolution, trivial_product_check, Error, Field, GradingMode, MinorSelection, ShapeVerdict, QQ};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{analyze, Analysis, Config};
use crate::report::{betti_entries, minor_labels, Conditions, Meta, WitnessRecord};
use crate::witness;
use crate::with_field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    pub m: usize,
    pub n: usize,
    pub t: usize,
    /// Every selection instead of one per symmetry orbit.
    pub all_selections: bool,
    /// Re-run a random non-canonical orbit member and compare verdicts.
    pub symmetry_check: bool,
    /// Compare the Betti table with Koszul homology dimensions.
    pub cross_route: bool,
    /// Compare the Betti table with the one computed over the rationals.
    pub rational_check: bool,
    /// Re-verify every product witness through the independent path.
    pub verify_witnesses: bool,
}

impl CensusOptions {
    pub fn new(m: usize, n: usize) -> Self {
        CensusOptions {
            m,
            n,
            t: 2,
            all_selections: false,
            symmetry_check: true,
            cross_route: false,
            rational_check: false,
            verify_witnesses: true,
        }
    }
}

/// Data dumped for a selection that breaks the expected pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Artifacts {
    pub ideal: Vec<String>,
    pub groebner: Vec<String>,
    pub betti_table: String,
    pub witness: Option<WitnessRecord>,
    pub series_actual: Option<Vec<Vec<u64>>>,
    pub series_bound: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    /// Number of selections this record stands for.
    pub weight: usize,
    pub conditions: Conditions,
    pub betti: Vec<[u64; 3]>,
    pub split_groups: usize,
    pub witness: Option<WitnessRecord>,
    /// `None` when the equivalence is not asserted (`t != 2`).
    pub equivalent: Option<bool>,
    pub symmetry_ok: Option<bool>,
    pub cross_route_ok: Option<bool>,
    pub rational_ok: Option<bool>,
    pub witness_verified: Option<bool>,
    pub artifacts: Option<Artifacts>,
}

impl CensusRecord {
    pub fn linear(&self) -> bool {
        self.conditions.linear == Some(true)
    }

    pub fn block(&self) -> bool {
        self.conditions.shape.as_deref().is_some_and(|s| s.starts_with("Block"))
    }

    pub fn trivial(&self) -> bool {
        self.conditions.product == "trivial"
    }

    pub fn consistent(&self) -> bool {
        !self.conditions.golod.is_not_golod()
    }

    /// Every auxiliary check that ran passed.
    pub fn checks_ok(&self) -> bool {
        [self.equivalent, self.symmetry_ok, self.cross_route_ok, self.rational_ok, self.witness_verified]
            .iter()
            .all(|c| c.unwrap_or(true))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    /// Nonzero selections covered (orbit records are weighted by orbit size).
    pub selections: usize,
    pub records: usize,
    pub linear: usize,
    pub block: usize,
    pub trivial: usize,
    pub consistent: usize,
    pub all_three: usize,
    pub failures: usize,
    /// Counts per `linear/shape/product/golod` combination.
    pub combinations: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub meta: Meta,
    pub m: usize,
    pub n: usize,
    pub t: usize,
    pub all_selections: bool,
    pub records: Vec<CensusRecord>,
    pub summary: CensusSummary,
}

impl CensusReport {
    pub fn ok(&self) -> bool {
        self.summary.failures == 0
    }

    /// Human-readable table of verdict combinations.
    pub fn render_summary(&self) -> String {
        let s = &self.summary;
        let mut out = format!(
            "census {}x{} t={} ({}): {} nonzero selections in {} records\n",
            self.m,
            self.n,
            self.t,
            if self.all_selections { "all selections" } else { "orbit representatives" },
            s.selections,
            s.records
        );
        out.push_str(&format!(
            "linear {}  block {}  trivial product {}  golod-consistent {}  linear+block+trivial {}  failures {}\n",
            s.linear, s.block, s.trivial, s.consistent, s.all_three, s.failures
        ));
        out.push_str("linear/shape/product/golod   count\n");
        for (k, v) in &s.combinations {
            out.push_str(&format!("{k:<28} {v}\n"));
        }
        out
    }
}

fn same_verdicts(a: &Analysis, b: &Analysis) -> bool {
    a.linear == b.linear
        && a.is_block() == b.is_block()
        && a.product_trivial == b.product_trivial
        && a.golod.verdict.is_not_golod() == b.golod.verdict.is_not_golod()
        && a.betti == b.betti
}

fn artifacts_with<F: Field>(a: &Analysis) -> Artifacts {
    let ideal = a.selection.ideal::<F>(GradingMode::RowColumn);
    let gb = ideal.groebner(golodcheck_core::MonomialOrder::DegLex);
    Artifacts {
        ideal: ideal.gens().iter().map(|g| g.render(ideal.labels())).collect(),
        groebner: gb.generators().iter().map(|g| g.render(ideal.labels())).collect(),
        betti_table: a.betti.render(),
        witness: a.witness.clone(),
        series_actual: a.golod.actual.as_ref().map(|s| s.table().to_vec()),
        series_bound: a.golod.bound.table().to_vec(),
    }
}

/// Koszul homology is taken on an Artinian reduction when one is found:
/// `Tor` does not change modulo a regular sequence of linear forms.
fn cross_route_with<F: Field>(sel: &MinorSelection, seed: u64, retries: usize) -> Result<bool, Error> {
    let ideal = sel.ideal::<F>(GradingMode::RowColumn);
    let bt = minimal_resolution(ideal.gens())?;
    let (stripped, _) = ideal.strip_free_variables();
    let depth = stripped.nvars().saturating_sub(bt.projective_dimension() as usize);
    let reduced = match artinian_reduction(&stripped, depth, seed, retries) {
        Ok((r, _)) => r,
        Err(Error::RetryBudgetExhausted(_)) => stripped,
        Err(e) => return Err(e),
    };
    let window = koszul_betti(&reduced, bt.projective_dimension() as usize + 1, bt.regularity() + 1);
    Ok(window == bt)
}

fn rational_matches(sel: &MinorSelection, bt: &golodcheck_core::BettiTable) -> Result<bool, Error> {
    Ok(minimal_resolution(&sel.polynomials::<QQ>())? == *bt)
}

fn census_record(sel: &MinorSelection, weight: usize, opts: &CensusOptions, cfg: &Config) -> Result<CensusRecord, Error> {
    let a = analyze(sel, cfg)?;
    let equivalent = (opts.t == 2).then(|| {
        let block = a.is_block() == Some(true);
        let linear = a.linear == Some(true);
        linear == block && a.product_trivial == block && a.golod.verdict.is_not_golod() != block
    });
    let symmetry_ok = if opts.symmetry_check && !opts.all_selections {
        let members = orbit(sel);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ sel.indices().iter().fold(0u64, |h, &i| h.wrapping_mul(31).wrapping_add(i as u64 + 1)));
        let canonical = canonicalize(sel);
        let others: Vec<&MinorSelection> = members.iter().filter(|s| s.indices() != canonical.indices()).collect();
        if others.is_empty() {
            None
        } else {
            let pick = others[rng.gen_range(0..others.len())];
            Some(same_verdicts(&a, &analyze(pick, cfg)?))
        }
    } else {
        None
    };
    let cross_route_ok = if opts.cross_route { Some(with_field!(cfg.field, F => cross_route_with::<F>(sel, cfg.seed, cfg.retries))?) } else { None };
    let rational_ok = if opts.rational_check { Some(rational_matches(sel, &a.betti)?) } else { None };
    let witness_verified = match (&a.witness, opts.verify_witnesses) {
        (Some(w), true) => Some(witness::verify(sel, cfg.field, w).map(|c| c.ok()).unwrap_or(false)),
        _ => None,
    };
    let mut record = CensusRecord {
        indices: sel.indices(),
        labels: minor_labels(sel),
        weight,
        conditions: a.conditions(),
        betti: betti_entries(&a.betti),
        split_groups: a.split_groups,
        witness: a.witness.as_ref().map(|w| if cfg.witness { w.clone() } else { w.without_chains() }),
        equivalent,
        symmetry_ok,
        cross_route_ok,
        rational_ok,
        witness_verified,
        artifacts: None,
    };
    if !record.checks_ok() {
        record.artifacts = Some(with_field!(cfg.field, F => artifacts_with::<F>(&a)));
    }
    Ok(record)
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Computes all four conditions for every nonzero selection (or one per
/// orbit) and checks the equivalence pattern for `t = 2`.
pub fn verify_theorem(opts: &CensusOptions, cfg: &Config) -> Result<CensusReport, Error> {
    let work: Vec<(MinorSelection, usize)> = if opts.all_selections {
        enumerate_selections(opts.m, opts.n, opts.t, false, cfg.cap)?.into_iter().map(|s| (s, 1)).collect()
    } else {
        enumerate_orbits(opts.m, opts.n, opts.t, cfg.cap)?
    };
    let work: Vec<(MinorSelection, usize)> = work.into_iter().filter(|(s, _)| !s.is_empty()).collect();
    let mut records = in_pool(cfg.jobs, || {
        work.par_iter().map(|(s, w)| census_record(s, *w, opts, cfg)).collect::<Result<Vec<_>, Error>>()
    })?;
    records.sort_by(|a, b| (a.indices.len(), &a.indices).cmp(&(b.indices.len(), &b.indices)));
    let mut summary = CensusSummary { records: records.len(), ..Default::default() };
    for r in &records {
        let w = r.weight;
        summary.selections += w;
        summary.linear += w * r.linear() as usize;
        summary.block += w * r.block() as usize;
        summary.trivial += w * r.trivial() as usize;
        summary.consistent += w * r.consistent() as usize;
        summary.all_three += w * (r.linear() && r.block() && r.trivial()) as usize;
        summary.failures += w * (!r.checks_ok()) as usize;
        let key = format!(
            "{}/{}/{}/{}",
            if r.linear() { "linear" } else { "nonlinear" },
            match r.conditions.shape.as_deref() {
                None => "skipped",
                Some(_) if r.block() => "block",
                Some(_) => "notblock",
            },
            r.conditions.product,
            if r.consistent() { "consistent" } else { "not-golod" }
        );
        *summary.combinations.entry(key).or_insert(0) += w;
    }
    Ok(CensusReport { meta: Meta::new(cfg), m: opts.m, n: opts.n, t: opts.t, all_selections: opts.all_selections, records, summary })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionRecord {
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    pub trivial: bool,
    /// `(axis, a, b, verdict)` for every non-empty restriction.
    pub restrictions: Vec<(String, usize, usize, String)>,
    pub has_nonblock_restriction: bool,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionReport {
    pub meta: Meta,
    pub m: usize,
    pub n: usize,
    pub records: Vec<RestrictionRecord>,
    /// Orbits with trivial product.
    pub passing: usize,
    /// Orbits with nontrivial product and a non-block pair restriction.
    pub failing_with_nonblock_restriction: usize,
    /// Orbits with nontrivial product whose pair restrictions are all blocks.
    pub failing_without_nonblock_restriction: usize,
    pub violations: usize,
}

impl RestrictionReport {
    pub fn ok(&self) -> bool {
        self.violations == 0
    }
}

pub fn restrictions_of<F: Field>(sel: &MinorSelection) -> Result<Vec<(String, usize, usize, String)>, Error> {
    let mut out = Vec::new();
    for (axis, bound, name) in [(Axis::Rows, sel.m, "rows"), (Axis::Columns, sel.n, "cols")] {
        for a in 1..=bound {
            for b in a + 1..=bound {
                let r = restrict_pair(sel, axis, a, b)?;
                let v = shape_classify::<F>(&r)?;
                if v != ShapeVerdict::Empty {
                    out.push((name.to_string(), a, b, v.to_string()));
                }
            }
        }
    }
    Ok(out)
}

fn restriction_record<F: Field>(sel: &MinorSelection) -> Result<RestrictionRecord, Error> {
    let ideal = sel.ideal::<F>(GradingMode::RowColumn);
    let bt = minimal_resolution(ideal.gens())?;
    let trivial = trivial_product_check(&ideal, &bt)?.is_trivial();
    let restrictions = restrictions_of::<F>(sel)?;
    let has_nonblock = restrictions.iter().any(|r| r.3 == "NotBlock");
    Ok(RestrictionRecord {
        indices: sel.indices(),
        labels: minor_labels(sel),
        trivial,
        restrictions,
        has_nonblock_restriction: has_nonblock,
        consistent: !(trivial && has_nonblock),
    })
}

/// Checks that trivial product forces every two-row and two-column
/// restriction to be a block or empty.
pub fn verify_restriction(m: usize, n: usize, cfg: &Config) -> Result<RestrictionReport, Error> {
    let work: Vec<MinorSelection> =
        enumerate_orbits(m, n, 2, cfg.cap)?.into_iter().map(|(s, _)| s).filter(|s| !s.is_empty()).collect();
    let mut records = in_pool(cfg.jobs, || {
        work.par_iter()
            .map(|s| with_field!(cfg.field, F => restriction_record::<F>(s)))
            .collect::<Result<Vec<_>, Error>>()
    })?;
    records.sort_by(|a, b| (a.indices.len(), &a.indices).cmp(&(b.indices.len(), &b.indices)));
    let passing = records.iter().filter(|r| r.trivial).count();
    let with = records.iter().filter(|r| !r.trivial && r.has_nonblock_restriction).count();
    let violations = records.iter().filter(|r| !r.consistent).count();
    Ok(RestrictionReport {
        meta: Meta::new(cfg),
        m,
        n,
        passing,
        failing_with_nonblock_restriction: with,
        failing_without_nonblock_restriction: records.len() - passing - with,
        violations,
        records,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Remark45Choice {
    pub labels: Vec<String>,
    pub betti: Vec<[u64; 3]>,
    pub betti_table: String,
    pub totals: Vec<u64>,
    pub conditions: Conditions,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Remark45Report {
    pub meta: Meta,
    pub choices: Vec<Remark45Choice>,
    pub ok: bool,
}

/// Three of the four maximal minors of the generic `3 x 4` matrix: totals
/// `(1, 3, 3, 1)`, nonlinear resolution, consistent Golod comparison and
/// trivial Koszul product, for each of the four choices.
pub fn reproduce_remark45(cfg: &Config) -> Result<Remark45Report, Error> {
    let all = MinorSelection::all_minors(3, 4, 3);
    let choices: Vec<MinorSelection> = (0..4)
        .map(|skip| {
            let minors = all.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, m)| m.clone()).collect();
            MinorSelection::new(3, 4, 3, minors)
        })
        .collect::<Result<_, _>>()?;
    let cfg = Config { fast_paths: false, ..*cfg };
    let analyses = in_pool(cfg.jobs, || choices.par_iter().map(|s| analyze(s, &cfg)).collect::<Result<Vec<_>, Error>>())?;
    let choices: Vec<Remark45Choice> = analyses
        .iter()
        .map(|a| {
            let totals = a.betti.totals();
            let ok = totals == [1, 3, 3, 1] && a.linear == Some(false) && a.product_trivial && !a.golod.verdict.is_not_golod();
            Remark45Choice {
                labels: minor_labels(&a.selection),
                betti: betti_entries(&a.betti),
                betti_table: a.betti.render(),
                totals,
                conditions: a.conditions(),
                ok,
            }
        })
        .collect();
    let ok = choices.iter().all(|c| c.ok);
    Ok(Remark45Report { meta: Meta::new(&cfg), choices, ok })
}

/// Runs `kunneth_check` over the chosen field.
pub fn kunneth(sel: &MinorSelection, cfg: &Config) -> Result<bool, Error> {
    with_field!(cfg.field, F => kunneth_check::<F>(sel))
}
