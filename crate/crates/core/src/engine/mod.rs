//! Monte Carlo machinery: samplers, summary statistics, period budgets,
//! replication runs and reproducibility manifests.

mod budget;
mod distribution;
mod manifest;
mod models;
pub mod seeds;
mod simulation;
mod summary;

pub use budget::{budget_check, BudgetReport, BudgetRule, MaxDraws, RuleCheck};
pub use distribution::{sample, Distribution, Law};
pub use manifest::{digest_outputs, format_digest, ModelSpec, ReproducibilityManifest, MANIFEST_VERSION};
pub use models::{Constant, FnModel, Model, ModelRegistry, PiEstimator, UniformMean};
pub use seeds::{derive_seed, SeedMixing};
pub use simulation::{
    replay, run_registered, run_simulation, BudgetPolicy, Execution, Replay, SimulationConfig,
    SimulationOutcome,
};
pub use summary::{confidence_interval, pearson, summarize, SummaryStats, MIN_CI_SAMPLE};
