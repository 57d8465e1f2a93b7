//! The per-selection pipeline: Betti table, shape, Koszul product and the
//! Golod comparison.

use golodcheck_core::golod::{golod_check, GolodHints, GolodOptions, GolodReport, Reduction};
use golodcheck_core::koszul::{ClassData, ProductVerdict, ProductWitness};
use golodcheck_core::subdet::{disjoint_split, shape_classify};
use golodcheck_core::{
    hilbert_certificate, linear_resolution_check, minimal_resolution, trivial_product_check, BettiTable, Error, Field,
    GradingMode, MinorSelection, MonomialOrder, ShapeVerdict,
};

use crate::report::{ClassRecord, Conditions, GolodRecord, WitnessRecord};
use crate::{with_field, FieldChoice};

/// Every knob that can change a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub field: FieldChoice,
    pub max_degree: u32,
    pub seed: u64,
    pub jobs: usize,
    pub cap: usize,
    /// Serialize full witness chains.
    pub witness: bool,
    /// Let split and product facts decide the Golod verdict.
    pub fast_paths: bool,
    /// Compute the whole series window instead of stopping at the first gap.
    pub full_series: bool,
    pub retries: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            field: FieldChoice::Fp32003,
            max_degree: 8,
            seed: 0,
            jobs: 1,
            cap: 12,
            witness: false,
            fast_paths: true,
            full_series: false,
            retries: 16,
        }
    }
}

impl Config {
    pub fn golod_options(&self) -> GolodOptions {
        GolodOptions {
            max_degree: self.max_degree,
            fast_paths: self.fast_paths,
            stop_at_first_gap: !self.full_series,
            reduction: Reduction::Artinian { seed: self.seed, retries: self.retries },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub selection: MinorSelection,
    pub shape: Option<ShapeVerdict>,
    pub betti: BettiTable,
    pub linear: Option<bool>,
    pub product_trivial: bool,
    pub witness: Option<WitnessRecord>,
    pub golod: GolodReport,
    pub split_groups: usize,
    pub notices: Vec<String>,
}

impl Analysis {
    pub fn conditions(&self) -> Conditions {
        Conditions {
            shape: self.shape.as_ref().map(|s| s.to_string()),
            linear: self.linear,
            product: if self.product_trivial { "trivial" } else { "nontrivial" }.to_string(),
            golod: GolodRecord::new(&self.golod),
        }
    }

    pub fn is_block(&self) -> Option<bool> {
        self.shape.as_ref().map(|s| s.is_block())
    }

    /// All four conditions positive (shape counts as positive when skipped).
    pub fn all_positive(&self) -> bool {
        self.is_block().unwrap_or(true)
            && self.linear == Some(true)
            && self.product_trivial
            && !self.golod.verdict.is_not_golod()
    }
}

fn class_record<F: Field>(c: &ClassData<F>) -> ClassRecord {
    ClassRecord { i: c.i, j: c.j, multidegree: c.alpha.clone(), chain: Some(c.text.clone()) }
}

pub fn witness_record<F: Field>(w: &ProductWitness<F>) -> WitnessRecord {
    WitnessRecord {
        left: class_record(&w.left),
        right: class_record(&w.right),
        product: class_record(&w.product),
        target_chain_dim: w.target_chain_dim,
        target_cycle_dim: w.target_cycle_dim,
        target_boundary_rank: w.target_boundary_rank,
    }
}

/// Runs the pipeline over the field chosen in `cfg`.
pub fn analyze(sel: &MinorSelection, cfg: &Config) -> Result<Analysis, Error> {
    with_field!(cfg.field, F => analyze_with::<F>(sel, cfg))
}

pub fn analyze_with<F: Field>(sel: &MinorSelection, cfg: &Config) -> Result<Analysis, Error> {
    let mut notices = Vec::new();
    let ideal = sel.ideal::<F>(GradingMode::RowColumn);
    let betti = minimal_resolution(ideal.gens())?;
    let gb = ideal.groebner(MonomialOrder::DegLex);
    if !hilbert_certificate(&betti, &gb, cfg.max_degree.max(betti.max_internal_degree())) {
        return Err(Error::Internal(format!("Hilbert series certificate failed for {sel}")));
    }
    let linear = match linear_resolution_check(&betti, sel.t as u32) {
        Ok(b) => Some(b),
        Err(Error::MixedGeneratorDegrees(_)) => {
            notices.push("generators of mixed degree; linearity undefined".to_string());
            None
        }
        Err(e) => return Err(e),
    };
    let shape = if sel.t == 2 {
        Some(shape_classify::<F>(sel)?)
    } else {
        notices.push(format!("shape check skipped (t = {})", sel.t));
        None
    };
    let split_groups = disjoint_split(sel).len();
    let (product_trivial, witness) = match trivial_product_check(&ideal, &betti)? {
        ProductVerdict::Trivial => (true, None),
        ProductVerdict::Nontrivial(w) => (false, Some(witness_record(&w))),
    };
    let hints = GolodHints { split_groups, nontrivial_product: !product_trivial };
    let golod = golod_check(&ideal, &betti, &cfg.golod_options(), &hints)?;
    Ok(Analysis { selection: sel.clone(), shape, betti, linear, product_trivial, witness, golod, split_groups, notices })
}
