use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::budget::{budget_check, BudgetReport};
use super::manifest::{digest_outputs, format_digest, ModelSpec, ReproducibilityManifest, MANIFEST_VERSION};
use super::models::{Model, ModelRegistry};
use super::seeds::{derive_seed, SeedMixing};
use super::summary::{summarize, SummaryStats};
use crate::error::{Error, Result};
use crate::rng::{GeneratorKind, GeneratorState, RealConversion};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BudgetPolicy {
    /// Refuse to run when any budget rule fails.
    #[default]
    Enforce,
    /// Run anyway and report the failed rules.
    Warn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    #[default]
    Parallel,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationConfig {
    pub kind: GeneratorKind,
    pub base_seed: u32,
    pub replications: u32,
    pub draws_per_replication: u64,
    pub model: String,
    pub budget_policy: BudgetPolicy,
    pub conversion: RealConversion,
    pub execution: Execution,
}

impl SimulationConfig {
    /// Enforcing budgets, parallel, with the generator's default conversion.
    pub fn new(
        kind: GeneratorKind,
        base_seed: u32,
        replications: u32,
        draws_per_replication: u64,
        model: impl Into<String>,
    ) -> Self {
        Self {
            kind,
            base_seed,
            replications,
            draws_per_replication,
            model: model.into(),
            budget_policy: BudgetPolicy::Enforce,
            conversion: kind.default_conversion(),
            execution: Execution::Parallel,
        }
    }

    /// Total words requested across all replications.
    pub fn requested_draws(&self) -> u64 {
        (self.replications as u64).saturating_mul(self.draws_per_replication)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationOutcome<T> {
    pub stats: SummaryStats<T>,
    /// Replication outputs in index order.
    pub outputs: Vec<T>,
    pub manifest: ReproducibilityManifest,
    pub budget: BudgetReport,
    pub warnings: Vec<String>,
}

/// Runs `config.replications` independent replications of `model`.
///
/// Replication `i` gets its own generator seeded by
/// [`derive_seed`](super::seeds::derive_seed); outputs are gathered by
/// index, so serial and parallel execution give identical results.
pub fn run_simulation<T: Real>(
    config: &SimulationConfig,
    model: &dyn Model<T>,
) -> Result<SimulationOutcome<T>> {
    if config.replications == 0 {
        return Err(Error::InvalidParameter("replications must be at least 1".into()));
    }
    if model.id() != config.model {
        return Err(Error::InvalidParameter(format!(
            "config names model `{}` but `{}` was supplied",
            config.model,
            model.id()
        )));
    }
    if config.draws_per_replication < model.min_draws() {
        return Err(Error::InvalidParameter(format!(
            "model `{}` needs at least {} draws per replication",
            model.id(),
            model.min_draws()
        )));
    }

    let budget = budget_check(&config.kind.period(), config.requested_draws());
    let mut warnings = Vec::new();
    if !budget.all_pass() {
        let rules = budget
            .failed_rules()
            .iter()
            .map(|r| r.name())
            .collect::<Vec<_>>()
            .join(", ");
        match config.budget_policy {
            BudgetPolicy::Enforce => {
                return Err(Error::BudgetExceeded {
                    requested: config.requested_draws(),
                    rules,
                })
            }
            BudgetPolicy::Warn => warnings.push(format!(
                "{} draws exceed the {} period budget: {rules}",
                config.requested_draws(),
                config.kind
            )),
        }
    }

    let run_one = |index: u32| -> Result<(u32, u64, T)> {
        let seed = derive_seed(config.kind, config.base_seed, index);
        let mut rng = GeneratorState::new(config.kind, seed)?;
        let out = model.replicate(&mut rng, config.draws_per_replication, config.conversion);
        Ok((seed, rng.draws(), out))
    };
    let results: Vec<(u32, u64, T)> = match config.execution {
        Execution::Serial => (0..config.replications).map(run_one).collect::<Result<_>>()?,
        Execution::Parallel => (0..config.replications)
            .into_par_iter()
            .map(run_one)
            .collect::<Result<_>>()?,
    };

    let outputs: Vec<T> = results.iter().map(|r| r.2).collect();
    let stats = summarize(&outputs)?;
    let manifest = ReproducibilityManifest {
        version: MANIFEST_VERSION,
        tool_version: crate::VERSION.to_string(),
        generator: config.kind,
        base_seed: config.base_seed,
        conversion: config.conversion,
        replications: config.replications,
        derived_seeds: results.iter().map(|r| r.0).collect(),
        draws_consumed: results.iter().map(|r| r.1).collect(),
        digest: format_digest(digest_outputs(&outputs)),
        seed_mixing: SeedMixing::current(),
        model: ModelSpec {
            id: model.id().to_string(),
            draws_per_replication: config.draws_per_replication,
            params: model.params(),
        },
    };
    Ok(SimulationOutcome {
        stats,
        outputs,
        manifest,
        budget,
        warnings,
    })
}

/// Looks the configured model up in `registry` and runs it.
pub fn run_registered(
    config: &SimulationConfig,
    registry: &ModelRegistry,
    params: &std::collections::BTreeMap<String, f64>,
) -> Result<SimulationOutcome<f64>> {
    let model = registry.build(&config.model, params)?;
    run_simulation(config, model.as_ref())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Replay {
    pub outcome: SimulationOutcome<f64>,
    pub digest_matches: bool,
}

/// Re-executes the run a manifest describes and compares digests.
pub fn replay(manifest: &ReproducibilityManifest, registry: &ModelRegistry) -> Result<Replay> {
    if manifest.seed_mixing != SeedMixing::current() {
        return Err(Error::Manifest("manifest uses a different seed derivation".into()));
    }
    let config = SimulationConfig {
        kind: manifest.generator,
        base_seed: manifest.base_seed,
        replications: manifest.replications,
        draws_per_replication: manifest.model.draws_per_replication,
        model: manifest.model.id.clone(),
        budget_policy: BudgetPolicy::Warn,
        conversion: manifest.conversion,
        execution: Execution::Parallel,
    };
    let outcome = run_registered(&config, registry, &manifest.model.params)?;
    let digest_matches = outcome.manifest.digest == manifest.digest
        && outcome.manifest.derived_seeds == manifest.derived_seeds;
    Ok(Replay {
        outcome,
        digest_matches,
    })
}
