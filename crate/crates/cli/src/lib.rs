//! Command-line front end for PRNG suitability audits, throughput benchmarks,
//! demo simulations and visual-test exports.

pub mod audit;
pub mod bench;
pub mod cli;
pub mod export;
pub mod render;
pub mod simulate;

pub use audit::{cmd_audit, AuditParams, AuditReport, SuitabilityVerdict};
pub use bench::{cmd_bench, BenchResult};
pub use cli::{main_with, run, Cli};
