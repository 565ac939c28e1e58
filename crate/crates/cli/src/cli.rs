//! Argument parsing and command dispatch.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mcaudit_core::engine::{Execution, ReproducibilityManifest, SimulationConfig};
use mcaudit_core::rng::{GeneratorKind, RealConversion, DEFAULT_SEED};

use crate::audit::{cmd_audit, AuditParams, SuitabilityVerdict};
use crate::bench::cmd_bench;
use crate::export::{cmd_export, ExportKind};
use crate::render;
use crate::simulate::{budget_policy, cmd_replay, cmd_simulate};

/// Exit status when `--strict` is set and the verdict is do-not-use.
pub const EXIT_DO_NOT_USE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "mcaudit", version, about = "Audit, benchmark and drive seedable pseudo-random generators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the uniformity, serial, lag-correlation and budget battery.
    Audit(AuditArgs),
    /// Time generation, and generation plus a buffered file write.
    Bench(BenchArgs),
    /// Run a built-in model over independent replications.
    Simulate(SimulateArgs),
    /// Write scatter or histogram data as CSV.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    /// Pretty-printed JSON.
    Machine,
}

#[derive(Debug, Clone, Args)]
pub struct StreamArgs {
    #[arg(long, default_value = "mt19937")]
    pub generator: GeneratorKind,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u32,
    /// Words discarded before sampling.
    #[arg(long, default_value_t = 1_000_000)]
    pub skip: u64,
    /// Number of reals drawn.
    #[arg(long, default_value_t = 10_000)]
    pub n: usize,
    #[arg(long, default_value_t = 10)]
    pub bins: usize,
    /// Word-to-real conversion; defaults to the generator's own.
    #[arg(long)]
    pub conversion: Option<RealConversion>,
}

impl StreamArgs {
    fn params(&self, alpha: f64, workload: u64) -> AuditParams {
        AuditParams {
            generator: self.generator,
            seed: self.seed,
            skip: self.skip,
            n: self.n,
            bins: self.bins,
            alpha,
            conversion: self.conversion.unwrap_or(self.generator.default_conversion()),
            workload,
        }
    }
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[command(flatten)]
    pub stream: StreamArgs,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    /// Draws the intended simulation will consume, for the budget rules.
    #[arg(long, default_value_t = 10_000)]
    pub workload: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Exit with status 2 when the verdict is do-not-use.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// One generator or a comma-separated list.
    #[arg(long, value_delimiter = ',', default_value = "mt19937")]
    pub generator: Vec<GeneratorKind>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u32,
    #[arg(long, default_value_t = 1_000_000)]
    pub n: u64,
    #[arg(long, default_value_t = 5)]
    pub repeats: u32,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Pi,
    UniformMean,
}

impl ModelArg {
    fn id(self) -> &'static str {
        match self {
            Self::Pi => "pi",
            Self::UniformMean => "uniform-mean",
        }
    }
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, value_enum, default_value = "pi")]
    pub model: ModelArg,
    #[arg(long, default_value = "mt19937")]
    pub generator: GeneratorKind,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u32,
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..))]
    pub replications: u32,
    /// Words drawn per replication.
    #[arg(long, default_value_t = 1_000_000)]
    pub n: u64,
    #[arg(long)]
    pub conversion: Option<RealConversion>,
    /// Run even when the workload breaks a period budget rule.
    #[arg(long)]
    pub allow_budget_overrun: bool,
    /// Replay the run a manifest describes; other run flags are ignored.
    #[arg(long)]
    pub from_manifest: Option<PathBuf>,
    /// Write the manifest here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportTable {
    Scatter,
    Histogram,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    pub table: ExportTable,
    #[command(flatten)]
    pub stream: StreamArgs,
    /// Tuple dimension for scatter exports.
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Write a header row.
    #[arg(long)]
    pub header: bool,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit status. Usage errors exit 1; 2 is reserved for do-not-use
/// verdicts under `--strict`.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                return 1;
            }
            let _ = stdout.write_all(text.as_bytes());
            return 0;
        }
    };
    match run(&cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            1
        }
    }
}

/// Runs a parsed command and returns the process exit status.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<u8> {
    match &cli.command {
        Command::Audit(a) => {
            let report = cmd_audit(&a.stream.params(a.alpha, a.workload))?;
            let text = match a.format {
                Format::Text => render::audit(&report),
                Format::Machine => json(&report)?,
            };
            emit(&text, a.out.as_deref(), stdout)?;
            Ok(if a.strict && report.verdict == SuitabilityVerdict::DoNotUse {
                EXIT_DO_NOT_USE
            } else {
                0
            })
        }
        Command::Bench(b) => {
            let results = b
                .generator
                .iter()
                .map(|&kind| cmd_bench(kind, b.seed, b.n, b.repeats))
                .collect::<Result<Vec<_>>>()?;
            let text = match b.format {
                Format::Text => render::bench(&results),
                Format::Machine => json(&results)?,
            };
            emit(&text, b.out.as_deref(), stdout)?;
            Ok(0)
        }
        Command::Simulate(s) => {
            let mut report = match &s.from_manifest {
                Some(path) => {
                    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
                    let manifest = ReproducibilityManifest::from_toml(&text)
                        .with_context(|| format!("invalid manifest {}", path.display()))?;
                    cmd_replay(&manifest)?
                }
                None => {
                    let config = SimulationConfig {
                        budget_policy: budget_policy(s.allow_budget_overrun),
                        conversion: s.conversion.unwrap_or(s.generator.default_conversion()),
                        execution: Execution::Parallel,
                        ..SimulationConfig::new(s.generator, s.seed, s.replications, s.n, s.model.id())
                    };
                    cmd_simulate(&config)?
                }
            };
            if let Some(path) = &s.out {
                fs::write(path, report.manifest.to_toml()?)
                    .with_context(|| format!("cannot write {}", path.display()))?;
                report.manifest_path = Some(path.display().to_string());
            }
            let text = match s.format {
                Format::Text => render::simulation(&report),
                Format::Machine => json(&report)?,
            };
            emit(&text, None, stdout)?;
            if report.digest_matches == Some(false) {
                anyhow::bail!("replayed digest differs from the manifest");
            }
            Ok(0)
        }
        Command::Export(e) => {
            let kind = match e.table {
                ExportTable::Scatter => ExportKind::Scatter { dim: e.dim },
                ExportTable::Histogram => ExportKind::Histogram,
            };
            cmd_export(kind, &e.stream.params(0.05, 0), e.header, e.out.as_deref(), stdout)?;
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn defaults_match_reference_experiment() {
        let cli = Cli::try_parse_from(["mcaudit", "audit"]).unwrap();
        let Command::Audit(a) = cli.command else { panic!() };
        assert_eq!(a.stream.params(a.alpha, a.workload), AuditParams::default());
    }

    #[test]
    fn generator_lists() {
        let cli = Cli::try_parse_from(["mcaudit", "bench", "--generator", "mt19937,minstd"]).unwrap();
        let Command::Bench(b) = cli.command else { panic!() };
        assert_eq!(b.generator, [GeneratorKind::Mt19937, GeneratorKind::Minstd]);
        assert!(Cli::try_parse_from(["mcaudit", "simulate", "--replications", "0"]).is_err());
    }

    #[test]
    fn exit_codes() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(main_with(["mcaudit", "audit", "--nope"], &mut out, &mut err), 1);
        assert!(!err.is_empty());
        assert_eq!(main_with(["mcaudit", "--version"], &mut out, &mut err), 0);
        assert!(String::from_utf8(out).unwrap().starts_with("mcaudit "));
    }
}
