//! Verification reports for a single prime, and their text, markdown and
//! JSON renderings.

mod render;
mod run;
mod selector;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::module_structure::CompositionReport;
use crate::tensor_pipeline::WeightTable;

pub use render::{render, render_batch, Format};
pub use run::{run_series, run_selftest, run_verify, validate_prime, RunOptions, MAX_CLI_PRIME};
pub use selector::ModuleSelector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            status: Status::from_bool(ok),
            detail: detail.into(),
        }
    }

    pub fn skipped(name: &str, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            status: Status::Skipped,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainRow {
    pub degree: i64,
    pub generator: String,
    pub dim: usize,
    pub factor: String,
    pub factor_lowest: String,
    pub simple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainTable {
    pub module: String,
    pub dim: usize,
    pub kernel_dims: Vec<(i64, usize)>,
    pub rows: Vec<ChainRow>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tables {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight_table: Option<WeightTable>,
    pub chains: Vec<ChainTable>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesEntry {
    pub module: String,
    pub chain: Vec<usize>,
    pub factors: Vec<String>,
    pub factors_lowest: Vec<String>,
    pub grothendieck: Vec<usize>,
}

impl SeriesEntry {
    pub fn new(module: &str, r: &CompositionReport) -> Self {
        Self {
            module: module.to_string(),
            chain: r.chain.clone(),
            factors: r.factors.iter().map(|f| f.highest()).collect(),
            factors_lowest: r.factors.iter().map(|f| f.lowest()).collect(),
            grothendieck: r.grothendieck.clone(),
        }
    }

    pub fn chain_string(&self) -> String {
        self.chain
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ⊃ ")
    }
}

/// Everything one command produced for one prime.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub prime: u64,
    pub command: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub tables: Tables,
    pub series: Vec<SeriesEntry>,
    /// Wall time per phase in milliseconds; only filled on request, so that
    /// reports are otherwise reproducible byte for byte.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<BTreeMap<String, f64>>,
}

impl VerificationReport {
    pub fn new(prime: u64, command: &str) -> Self {
        Self {
            prime,
            command: command.to_string(),
            status: Status::Pass,
            checks: Vec::new(),
            tables: Tables::default(),
            series: Vec::new(),
            timing: None,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
        self.refresh_status();
    }

    /// Overall status is `fail` iff some check failed; skipped checks do
    /// not count either way.
    pub fn refresh_status(&mut self) {
        self.status = Status::from_bool(self.checks.iter().all(|c| c.status != Status::Fail));
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}
