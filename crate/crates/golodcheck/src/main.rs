use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail};
use clap::{Args, Parser, Subcommand};
use golodcheck::harness::{reproduce_remark45, verify_restriction, verify_theorem, CensusOptions};
use golodcheck::report::{to_json, AnalyzeReport};
use golodcheck::{analyze, with_field, Config, FieldChoice, IdealFile};
use golodcheck_core::subdet::shape_classify;
use golodcheck_core::ShapeVerdict;

#[derive(Parser, Debug)]
#[command(name = "golodcheck", version, about = "Golod, linearity, shape and Koszul-product checks for ideals of minors")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Coefficient field: fp:2, fp:3, fp:101, fp:32003 or qq.
    #[arg(long, global = true)]
    field: Option<FieldChoice>,
    /// Largest internal degree of the Poincare series comparison.
    #[arg(long = "max-internal-degree", global = true, default_value_t = 8)]
    max_degree: u32,
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest number of minors a census may enumerate over.
    #[arg(long, global = true, default_value_t = 12)]
    cap: usize,
    /// Include full cycle serializations of product witnesses.
    #[arg(long, global = true)]
    witness: bool,
    /// Write the structured report here.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Compute the whole series window instead of stopping at the first gap.
    #[arg(long = "full-series", global = true)]
    full_series: bool,
    /// Always run the resolution of the residue field.
    #[arg(long = "no-fast-paths", global = true)]
    no_fast_paths: bool,
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the shape verdict of an ideal file.
    Classify { input: PathBuf },
    /// Run the full pipeline on an ideal file.
    Analyze { input: PathBuf },
    /// Run a verification campaign.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// Census of all selections of 2 x 2 minors.
    Theorem {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Size of the minors; only t = 2 asserts the equivalence.
        #[arg(long = "minor-size", default_value_t = 2)]
        t: usize,
        /// Every selection instead of one per symmetry orbit.
        #[arg(long)]
        all: bool,
        /// Also compare Betti numbers with Koszul homology dimensions.
        #[arg(long = "cross-route")]
        cross_route: bool,
        /// Also compare Betti tables with the rationals.
        #[arg(long)]
        rational: bool,
    },
    /// Two-row and two-column restrictions of trivial-product selections.
    Restriction {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
    /// The 3 x 4 example with three maximal minors.
    Remark45,
}

/// Failures of an internal consistency check.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Inconsistent(String);

fn config(g: &Global, file_field: Option<FieldChoice>) -> anyhow::Result<Config> {
    if g.max_degree < 2 {
        bail!("--max-internal-degree must be at least 2");
    }
    if g.jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    Ok(Config {
        field: g.field.or(file_field).unwrap_or_default(),
        max_degree: g.max_degree,
        seed: g.seed,
        jobs: g.jobs,
        cap: g.cap,
        witness: g.witness,
        fast_paths: !g.no_fast_paths,
        full_series: g.full_series,
        ..Config::default()
    })
}

fn write_output(path: Option<&Path>, body: &str) -> anyhow::Result<()> {
    if let Some(p) = path {
        std::fs::write(p, body).map_err(|e| anyhow!("cannot write {}: {e}", p.display()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let g = &cli.global;
    let start = Instant::now();
    let code = match &cli.command {
        Command::Classify { input } => {
            let file = IdealFile::load(input)?;
            let sel = file.selection()?;
            let cfg = config(g, file.field()?)?;
            let verdict = with_field!(cfg.field, F => shape_classify::<F>(&sel))?;
            println!("{verdict}");
            let doc = serde_json::json!({
                "meta": golodcheck::report::Meta::new(&cfg),
                "input": file,
                "shape": verdict.to_string(),
            });
            write_output(g.output.as_deref(), &to_json(&doc))?;
            u8::from(verdict == ShapeVerdict::NotBlock)
        }
        Command::Analyze { input } => {
            let file = IdealFile::load(input)?;
            let sel = file.selection()?;
            let cfg = config(g, file.field()?)?;
            let a = analyze(&sel, &cfg)?;
            let report = AnalyzeReport::new(&a, &cfg);
            for n in &report.notices {
                println!("notice: {n}");
            }
            let c = &report.conditions;
            println!("shape:   {}", c.shape.as_deref().unwrap_or("skipped"));
            println!("linear:  {}", c.linear.map_or("undefined".to_string(), |b| b.to_string()));
            println!("product: {}", c.product);
            match &c.golod.first_gap {
                Some(gap) => println!("golod:   NotGolod, first gap {} at (i, j) = ({}, {})", gap.size, gap.i, gap.j),
                None if c.golod.is_not_golod() => println!("golod:   NotGolod ({})", c.golod.fast_path),
                None => println!("golod:   ConsistentUpTo({})", c.golod.max_degree),
            }
            print!("{}", report.betti_table);
            write_output(g.output.as_deref(), &to_json(&report))?;
            u8::from(!a.all_positive())
        }
        Command::Verify(v) => {
            let cfg = config(g, None)?;
            match v {
                Verify::Theorem { rows, cols, t, all, cross_route, rational } => {
                    let opts = CensusOptions {
                        t: *t,
                        all_selections: *all,
                        cross_route: *cross_route,
                        rational_check: *rational,
                        ..CensusOptions::new(*rows, *cols)
                    };
                    let report = verify_theorem(&opts, &cfg)?;
                    print!("{}", report.render_summary());
                    write_output(g.output.as_deref(), &to_json(&report))?;
                    if !report.ok() {
                        return Err(Inconsistent(format!("{} selections break the expected pattern", report.summary.failures)).into());
                    }
                    0
                }
                Verify::Restriction { rows, cols } => {
                    let report = verify_restriction(*rows, *cols, &cfg)?;
                    println!(
                        "restriction {}x{}: {} trivial-product orbits, {} violations; nontrivial with a non-block restriction {}, without {}",
                        rows,
                        cols,
                        report.passing,
                        report.violations,
                        report.failing_with_nonblock_restriction,
                        report.failing_without_nonblock_restriction
                    );
                    write_output(g.output.as_deref(), &to_json(&report))?;
                    if !report.ok() {
                        return Err(Inconsistent(format!("{} restriction violations", report.violations)).into());
                    }
                    0
                }
                Verify::Remark45 => {
                    let report = reproduce_remark45(&cfg)?;
                    for c in &report.choices {
                        println!("{}: totals {:?} golod {} product {} ok {}", c.labels.join(","), c.totals, c.conditions.golod.verdict, c.conditions.product, c.ok);
                    }
                    if let Some(first) = report.choices.first() {
                        print!("{}", first.betti_table);
                    }
                    write_output(g.output.as_deref(), &to_json(&report))?;
                    if !report.ok {
                        return Err(Inconsistent("3 x 4 example does not reproduce".to_string()).into());
                    }
                    0
                }
            }
        }
    };
    if g.verbose {
        eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let internal = e.downcast_ref::<Inconsistent>().is_some()
                || matches!(e.downcast_ref::<golodcheck_core::Error>(), Some(golodcheck_core::Error::Internal(_)));
            ExitCode::from(if internal { 3 } else { 2 })
        }
    }
}
