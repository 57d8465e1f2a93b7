//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p golodcheck --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use golodcheck::harness::{kunneth, reproduce_remark45, verify_theorem, CensusOptions, CensusReport};
use golodcheck::Config;
use golodcheck_core::golod::{serre_inequality_check, tensor_obstruction};
use golodcheck_core::koszul::{chain_key, split_key};
use golodcheck_core::linalg::{axpy, SparseVec};
use golodcheck_core::subdet::{disjoint_split, enumerate_orbits, enumerate_selections};
use golodcheck_core::{
    golod_check, hilbert_certificate, minimal_resolution, BettiTable, Field, GolodHints, GolodOptions,
    GradingMode, KoszulComplex, MinorSelection, MonomialOrder, Reduction, F32003,
};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(cond: bool, ok: impl Into<String>, bad: impl Into<String>) -> Outcome {
    if cond {
        Ok(ok.into())
    } else {
        Err(bad.into())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    if t <= limit {
        Ok(())
    } else {
        Err(format!("took {:.1}s, limit {}s", t.as_secs_f64(), limit.as_secs()))
    }
}

fn census(m: usize, n: usize, cross_route: bool, rational: bool) -> Result<CensusReport, String> {
    let opts = CensusOptions { all_selections: true, cross_route, rational_check: rational, ..CensusOptions::new(m, n) };
    verify_theorem(&opts, &Config::default()).map_err(|e| e.to_string())
}

fn remark45() -> Outcome {
    let start = Instant::now();
    let r = reproduce_remark45(&Config::default()).map_err(|e| e.to_string())?;
    for c in &r.choices {
        let g = &c.conditions.golod;
        if c.totals != [1, 3, 3, 1] {
            return Err(format!("{}: totals {:?}", c.labels.join(","), c.totals));
        }
        if c.conditions.linear != Some(false) {
            return Err(format!("{}: linear {:?}", c.labels.join(","), c.conditions.linear));
        }
        if g.verdict != "consistent-up-to" || g.max_degree != 8 {
            return Err(format!("{}: golod {} D={}", c.labels.join(","), g.verdict, g.max_degree));
        }
        if c.conditions.product != "trivial" {
            return Err(format!("{}: product {}", c.labels.join(","), c.conditions.product));
        }
    }
    within(Duration::from_secs(60), start)?;
    check(r.choices.len() == 4 && r.ok, "4 choices: totals 1 3 3 1, nonlinear, ConsistentUpTo(8), trivial", "report not ok")
}

fn census_2x3() -> Outcome {
    let start = Instant::now();
    let r = census(2, 3, false, false)?;
    within(Duration::from_secs(30), start)?;
    let s = &r.summary;
    if s.selections != 7 || s.linear != 4 || s.block != 4 || s.trivial != 4 || s.consistent != 4 || s.all_three != 4 {
        return Err(format!("counts {s:?}"));
    }
    for rec in r.records.iter().filter(|x| !x.block()) {
        let explicit = rec.witness.is_some() && rec.witness_verified == Some(true);
        if rec.consistent() || !explicit {
            return Err(format!("{:?}: golod {} witness {:?}", rec.labels, rec.conditions.golod.verdict, rec.witness_verified));
        }
    }
    check(s.failures == 0, "4 of 7 in each condition, 3 NotGolod with verified witnesses", format!("{} failures", s.failures))
}

fn census_2x4() -> Outcome {
    let start = Instant::now();
    let r = census(2, 4, false, false)?;
    within(Duration::from_secs(300), start)?;
    let s = &r.summary;
    check(
        s.selections == 63 && s.all_three == 11 && s.consistent == 11 && s.failures == 0,
        "11 of 63",
        format!("counts {s:?}"),
    )
}

fn census_3x3(r: &CensusReport, elapsed: Duration) -> Outcome {
    if elapsed > Duration::from_secs(1800) {
        return Err(format!("took {:.1}s", elapsed.as_secs_f64()));
    }
    let s = &r.summary;
    let all_equivalent = r.records.iter().all(|x| x.equivalent == Some(true));
    check(
        s.selections == 511 && r.records.len() == 511 && s.all_three == 15 && s.consistent == 15 && all_equivalent,
        format!("15 of 511, equivalence on all 511 ({:.1}s)", elapsed.as_secs_f64()),
        format!("counts {s:?}, all equivalent {all_equivalent}"),
    )
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

fn eagon_northcott() -> Outcome {
    for l in 2..=4usize {
        let bt = minimal_resolution(&MinorSelection::full(2, l, 2).polynomials::<F32003>()).map_err(|e| e.to_string())?;
        let mut expected = BettiTable::from_entries([(0, 0, 1)]);
        for i in 1..l as u32 {
            expected.add(i, i + 1, i as u64 * binomial(l as u64, i as u64 + 1));
        }
        if bt != expected {
            return Err(format!("2x{l}:\n{}", bt.render()));
        }
    }
    Ok("2x2, 2x3, 2x4 match i * C(l, i+1)".into())
}

fn no_fast_full() -> GolodOptions {
    GolodOptions { fast_paths: false, stop_at_first_gap: false, ..GolodOptions::default() }
}

fn obstruction() -> Outcome {
    let sel = MinorSelection::from_indices(2, 4, 2, &[0, 5]);
    let ideal = sel.ideal::<F32003>(GradingMode::RowColumn);
    let bt = minimal_resolution(ideal.gens()).map_err(|e| e.to_string())?;
    let r = golod_check(&ideal, &bt, &no_fast_full(), &GolodHints::default()).map_err(|e| e.to_string())?;
    let predicted = tensor_obstruction(&sel).map_err(|e| e.to_string())?;
    let gap = r.collapsed_gap();
    check(
        gap == Some((3, predicted as i64)) && predicted == 1,
        format!("z^3 gap {predicted} = mu(I1) mu(I2)"),
        format!("collapsed gap {gap:?}, predicted {predicted}"),
    )
}

fn kunneth_all() -> Outcome {
    let cfg = Config::default();
    let mut count = 0;
    for (m, n) in [(2, 3), (2, 4), (3, 3)] {
        for sel in enumerate_selections(m, n, 2, false, cfg.cap).map_err(|e| e.to_string())? {
            if disjoint_split(&sel).len() < 2 {
                continue;
            }
            count += 1;
            if !kunneth(&sel, &cfg).map_err(|e| e.to_string())? {
                return Err(format!("{m}x{n} {:?}", sel.indices()));
            }
        }
    }
    check(count > 0, format!("{count} split selections"), "no split selections")
}

/// A random sparse chain in a random nonempty block of bidegree `(i, i + d)`.
fn random_chain<F: Field>(cx: &KoszulComplex<F>, rng: &mut ChaCha8Rng, i: usize, d: u32) -> SparseVec<F> {
    let j = i as u32 + d;
    let blocks = cx.blocks(i, j);
    if blocks.is_empty() {
        return Vec::new();
    }
    let alpha = &blocks[rng.next_u32() as usize % blocks.len()];
    let basis = cx.block_basis(i, j, alpha);
    let mut v = Vec::new();
    for _ in 0..1 + rng.next_u32() % 5 {
        let k = basis[rng.next_u32() as usize % basis.len()];
        v = axpy(&v, &F::sample_nonzero(rng), &vec![(k, F::one())]);
    }
    v
}

/// `d(d a) = 0` and `d(a b) = d(a) b + (-1)^i a d(b)` on random chains.
fn chain_identities<F: Field>(cx: &KoszulComplex<F>, rng: &mut ChaCha8Rng, trials: usize) -> Result<(), String> {
    let n = cx.nvars();
    for t in 0..trials {
        let (i1, i2) = (rng.next_u32() as usize % (n + 1), rng.next_u32() as usize % (n + 1));
        let (d1, d2) = (rng.next_u32() % 2, rng.next_u32() % 2);
        let (j1, j2) = (i1 as u32 + d1, i2 as u32 + d2);
        let a = random_chain(cx, rng, i1, d1);
        let b = random_chain(cx, rng, i2, d2);
        if i1 >= 2 && !cx.differential(i1 - 1, j1, &cx.differential(i1, j1, &a)).is_empty() {
            return Err(format!("trial {t}: d^2 != 0 at ({i1}, {j1})"));
        }
        if i1 + i2 > n || i1 + i2 == 0 {
            continue;
        }
        let ab = cx.wedge(&a, (i1, j1), &b, (i2, j2));
        let lhs = cx.differential(i1 + i2, j1 + j2, &ab);
        let mut rhs = Vec::new();
        if i1 > 0 {
            rhs = cx.wedge(&cx.differential(i1, j1, &a), (i1 - 1, j1), &b, (i2, j2));
        }
        if i2 > 0 {
            let sign = if i1 % 2 == 0 { F::one() } else { F::one().neg() };
            rhs = axpy(&rhs, &sign, &cx.wedge(&a, (i1, j1), &cx.differential(i2, j2, &b), (i2 - 1, j2)));
        }
        if lhs != rhs {
            return Err(format!("trial {t}: Leibniz fails for ({i1}, {j1}) x ({i2}, {j2})"));
        }
    }
    Ok(())
}

fn property_ideals() -> Result<Vec<MinorSelection>, String> {
    let mut out = enumerate_selections(2, 3, 2, false, 12).map_err(|e| e.to_string())?;
    out.extend(enumerate_orbits(3, 3, 2, 12).map_err(|e| e.to_string())?.into_iter().map(|(s, _)| s));
    let all = MinorSelection::all_minors(3, 4, 3);
    out.push(MinorSelection::new(3, 4, 3, all[..3].to_vec()).map_err(|e| e.to_string())?);
    Ok(out.into_iter().filter(|s| !s.is_empty()).collect())
}

fn properties(c23: &CensusReport, c33: &CensusReport) -> Outcome {
    let ideals = property_ideals()?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let cfg = Config::default();
    for sel in &ideals {
        let ideal = sel.ideal::<F32003>(GradingMode::RowColumn);
        let (stripped, _) = ideal.strip_free_variables();
        let cx = KoszulComplex::new(&stripped, 3);
        chain_identities(&cx, &mut rng, 1000).map_err(|e| format!("{:?}: {e}", sel.indices()))?;

        let bt = minimal_resolution(ideal.gens()).map_err(|e| e.to_string())?;
        let gb = ideal.groebner(MonomialOrder::DegLex);
        if !hilbert_certificate(&bt, &gb, bt.max_internal_degree() + 4) {
            return Err(format!("{:?}: Hilbert certificate", sel.indices()));
        }
        let opts = GolodOptions { fast_paths: false, stop_at_first_gap: true, ..cfg.golod_options() };
        let r = golod_check(&ideal, &bt, &opts, &GolodHints::default()).map_err(|e| e.to_string())?;
        let actual = r.actual.as_ref().ok_or("no actual series")?.truncate(r.computed_upto);
        if !serre_inequality_check(&actual, &r.bound) {
            return Err(format!("{:?}: Serre inequality", sel.indices()));
        }
    }
    for rep in [c23, c33] {
        if rep.records.iter().any(|x| x.cross_route_ok != Some(true)) {
            return Err(format!("{}x{}: syzygy and Koszul routes disagree", rep.m, rep.n));
        }
    }
    if c33.records.iter().any(|x| x.rational_ok != Some(true)) {
        return Err("3x3: F_32003 and QQ tables differ".into());
    }
    Ok(format!(
        "{} ideals x 1000 chains, certificates, Serre; cross-route on {} + {}; QQ on {}",
        ideals.len(),
        c23.records.len(),
        c33.records.len(),
        c33.records.len()
    ))
}

/// Coefficients of `(1 + z)^a / (1 - z^2)^b` up to `z^upto`.
fn closed_form(a: u64, b: u64, upto: usize) -> Vec<u64> {
    let mut out = vec![0u64; upto + 1];
    for (k, o) in out.iter_mut().enumerate() {
        for e in (0..=k).step_by(2) {
            let m = (e / 2) as u64;
            // z^(2m) in (1 - z^2)^-b has coefficient C(m + b - 1, b - 1).
            *o += binomial(a, (k - e) as u64) * binomial(m + b - 1, b - 1);
        }
    }
    out
}

fn poincare_oracles() -> Outcome {
    let cases = [
        (MinorSelection::from_indices(2, 2, 2, &[0]), 4, 1),
        (MinorSelection::from_indices(2, 3, 2, &[0, 1]), 6, 2),
    ];
    for (sel, a, b) in cases {
        let ideal = sel.ideal::<F32003>(GradingMode::RowColumn);
        let bt = minimal_resolution(ideal.gens()).map_err(|e| e.to_string())?;
        let opts = GolodOptions { reduction: Reduction::None, ..no_fast_full() };
        let r = golod_check(&ideal, &bt, &opts, &GolodHints::default()).map_err(|e| e.to_string())?;
        if r.computed_upto != 8 {
            return Err(format!("{:?}: computed to {}", sel.indices(), r.computed_upto));
        }
        let actual = r.actual.as_ref().ok_or("no actual series")?.collapse();
        let expected = closed_form(a, b, 8);
        if actual[..=8] != expected[..] {
            return Err(format!("{:?}: {:?} vs {:?}", sel.indices(), &actual[..=8], expected));
        }
    }
    Ok("hypersurface and complete intersection match to z^8".into())
}

fn main() -> ExitCode {
    // Chain keys pack the exterior mask above the monomial index.
    assert_eq!(split_key(chain_key(5, 7)), (5, 7));
    let mut results: Vec<(&str, Outcome, Duration)> = Vec::new();
    let mut run = |name: &'static str, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let out = f();
        let e = t.elapsed();
        let line = match &out {
            Ok(msg) => format!("PASS {name} ({:.1}s): {msg}", e.as_secs_f64()),
            Err(msg) => format!("FAIL {name} ({:.1}s): {msg}", e.as_secs_f64()),
        };
        println!("{line}");
        results.push((name, out, e));
    };

    run("1 maximal-minors-3x4", &mut remark45);
    run("2 census-2x3", &mut census_2x3);
    run("3 census-2x4", &mut census_2x4);
    let t = Instant::now();
    let c33 = census(3, 3, true, true);
    let c33_time = t.elapsed();
    run("4 census-3x3", &mut || census_3x3(c33.as_ref().map_err(|e| e.clone())?, c33_time));
    run("5 eagon-northcott", &mut eagon_northcott);
    run("6 obstruction", &mut obstruction);
    run("7 kunneth", &mut kunneth_all);
    let c23 = census(2, 3, true, false);
    run("8 properties", &mut || {
        let c23 = c23.as_ref().map_err(|e| e.clone())?;
        let c33 = c33.as_ref().map_err(|e| e.clone())?;
        properties(c23, c33)
    });
    run("9 poincare-oracles", &mut poincare_oracles);

    let failed = results.iter().filter(|r| r.1.is_err()).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
