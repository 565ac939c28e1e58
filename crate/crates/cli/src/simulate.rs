//! Demo simulations over the built-in models.

use std::collections::BTreeMap;

use anyhow::{bail, Result};
use mcaudit_core::engine::{
    confidence_interval, replay, run_registered, BudgetPolicy, ModelRegistry, ReproducibilityManifest,
    SimulationConfig, MIN_CI_SAMPLE,
};
use mcaudit_core::{Probability64, SimulationOutcome64, SummaryStats64};
use serde::Serialize;

pub const MODELS: [&str; 2] = ["pi", "uniform-mean"];
pub const CI_LEVEL: f64 = 0.95;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Interval {
    pub level: f64,
    pub lower: f64,
    pub upper: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationReport {
    pub model: String,
    pub stats: SummaryStats64,
    /// Absent below the minimum sample size for a normal interval.
    pub confidence_interval: Option<Interval>,
    pub budget: mcaudit_core::engine::BudgetReport,
    pub warnings: Vec<String>,
    pub manifest: ReproducibilityManifest,
    pub manifest_path: Option<String>,
    /// Set when replaying a manifest.
    pub digest_matches: Option<bool>,
}

impl SimulationReport {
    fn new(outcome: SimulationOutcome64, digest_matches: Option<bool>) -> Result<Self> {
        let confidence_interval = if outcome.stats.n >= MIN_CI_SAMPLE {
            let (lower, upper) = confidence_interval(&outcome.stats, Probability64::new(CI_LEVEL)?)?;
            Some(Interval {
                level: CI_LEVEL,
                lower,
                upper,
            })
        } else {
            None
        };
        Ok(Self {
            model: outcome.manifest.model.id.clone(),
            stats: outcome.stats,
            confidence_interval,
            budget: outcome.budget,
            warnings: outcome.warnings,
            manifest: outcome.manifest,
            manifest_path: None,
            digest_matches,
        })
    }
}

pub fn cmd_simulate(config: &SimulationConfig) -> Result<SimulationReport> {
    if !MODELS.contains(&config.model.as_str()) {
        bail!("unknown model `{}` (expected one of: {})", config.model, MODELS.join(", "));
    }
    if config.replications == 0 {
        bail!("replications must be at least 1");
    }
    let outcome = run_registered(config, &ModelRegistry::builtin(), &BTreeMap::new())?;
    SimulationReport::new(outcome, None)
}

pub fn cmd_replay(manifest: &ReproducibilityManifest) -> Result<SimulationReport> {
    let r = replay(manifest, &ModelRegistry::builtin())?;
    SimulationReport::new(r.outcome, Some(r.digest_matches))
}

pub fn budget_policy(allow_overrun: bool) -> BudgetPolicy {
    if allow_overrun {
        BudgetPolicy::Warn
    } else {
        BudgetPolicy::Enforce
    }
}
