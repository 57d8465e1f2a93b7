//! Serializable report documents.
//!
//! Reports contain no timing so that identical inputs, configuration and seed
//! give byte-identical files.

use golodcheck_core::golod::{FastPath, GolodReport, GolodVerdict};
use golodcheck_core::series::BigradedSeries;
use golodcheck_core::{BettiTable, MinorSelection};
use serde::{Deserialize, Serialize};

use crate::analysis::{Analysis, Config};
use crate::idealfile::IdealFile;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    pub field: String,
    #[serde(rename = "D")]
    pub max_degree: u32,
    pub seed: u64,
}

impl Meta {
    pub fn new(cfg: &Config) -> Self {
        Meta {
            version: env!("CARGO_PKG_VERSION").to_string(),
            field: cfg.field.tag().to_string(),
            max_degree: cfg.max_degree,
            seed: cfg.seed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub i: usize,
    pub j: u32,
    /// Row counts followed by column counts.
    pub multidegree: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub left: ClassRecord,
    pub right: ClassRecord,
    pub product: ClassRecord,
    pub target_chain_dim: usize,
    pub target_cycle_dim: usize,
    pub target_boundary_rank: usize,
}

impl WitnessRecord {
    pub fn without_chains(&self) -> Self {
        let strip = |c: &ClassRecord| ClassRecord { chain: None, ..c.clone() };
        WitnessRecord { left: strip(&self.left), right: strip(&self.right), product: strip(&self.product), ..self.clone() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapRecord {
    pub i: u32,
    pub j: u32,
    pub size: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GolodRecord {
    /// `not-golod` or `consistent-up-to`.
    pub verdict: String,
    #[serde(rename = "D")]
    pub max_degree: u32,
    pub first_gap: Option<GapRecord>,
    /// `(i, size)` of the first gap after setting `t = 1`.
    pub collapsed_gap: Option<(usize, i64)>,
    pub fast_path: String,
    pub seed: Option<u64>,
    pub removed_variables: (usize, usize),
}

impl GolodRecord {
    pub fn new(r: &GolodReport) -> Self {
        let (verdict, gap) = match r.verdict {
            GolodVerdict::NotGolod { gap } => ("not-golod", gap.map(|g| GapRecord { i: g.i, j: g.j, size: g.size })),
            GolodVerdict::ConsistentUpTo(_) => ("consistent-up-to", None),
        };
        let fast_path = match r.fast_path {
            FastPath::None => "none",
            FastPath::DisjointSplit => "disjoint-split",
            FastPath::ProductWitness => "product-witness",
        };
        GolodRecord {
            verdict: verdict.to_string(),
            max_degree: r.max_degree,
            first_gap: gap,
            collapsed_gap: r.collapsed_gap(),
            fast_path: fast_path.to_string(),
            seed: r.seed,
            removed_variables: r.removed,
        }
    }

    pub fn is_not_golod(&self) -> bool {
        self.verdict == "not-golod"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRecord {
    /// `actual[i][j]`, complete for `j <= computed_upto`.
    pub actual: Vec<Vec<u64>>,
    pub bound: Vec<Vec<u64>>,
    pub computed_upto: u32,
}

fn table(s: &BigradedSeries, upto: u32) -> Vec<Vec<u64>> {
    s.truncate(upto).table().to_vec()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conditions {
    /// Shape verdict, absent when `t != 2`.
    pub shape: Option<String>,
    pub linear: Option<bool>,
    /// `trivial` or `nontrivial`.
    pub product: String,
    pub golod: GolodRecord,
}

pub fn betti_entries(bt: &BettiTable) -> Vec<[u64; 3]> {
    bt.entries().map(|(i, j, v)| [i as u64, j as u64, v]).collect()
}

pub fn minor_labels(sel: &MinorSelection) -> Vec<String> {
    sel.minors().iter().map(|m| sel.label(m).unwrap_or_default()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub meta: Meta,
    pub input: IdealFile,
    pub labels: Vec<String>,
    pub conditions: Conditions,
    pub betti: Vec<[u64; 3]>,
    pub betti_table: String,
    pub split_groups: usize,
    pub witness: Option<WitnessRecord>,
    pub series: Option<SeriesRecord>,
    pub notices: Vec<String>,
}

impl AnalyzeReport {
    pub fn new(a: &Analysis, cfg: &Config) -> Self {
        let series = a.golod.actual.as_ref().map(|actual| SeriesRecord {
            actual: table(actual, a.golod.computed_upto),
            bound: table(&a.golod.bound, a.golod.max_degree),
            computed_upto: a.golod.computed_upto,
        });
        AnalyzeReport {
            meta: Meta::new(cfg),
            input: IdealFile::from_selection(&a.selection, Some(cfg.field)),
            labels: minor_labels(&a.selection),
            conditions: a.conditions(),
            betti: betti_entries(&a.betti),
            betti_table: a.betti.render(),
            split_groups: a.split_groups,
            witness: a.witness.as_ref().map(|w| if cfg.witness { w.clone() } else { w.without_chains() }),
            series,
            notices: a.notices.clone(),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
