//! The audit battery and the suitability verdict built from it.

use std::collections::BTreeMap;
use std::time::Instant;

use mcaudit_core::battery::{
    chi_square_uniformity, histogram, lag_correlation, serial_test, Verdict, MIN_EXPECTED_COUNT,
};
use mcaudit_core::engine::{
    budget_check, digest_outputs, format_digest, BudgetReport, ModelSpec, ReproducibilityManifest,
    SeedMixing, MANIFEST_VERSION,
};
use mcaudit_core::rng::{GeneratorKind, GeneratorState, RealConversion, DEFAULT_SEED};
use mcaudit_core::{ChiSquareReport64, CorrelationReport64, Error, Probability64};
use serde::Serialize;

pub const REPORT_VERSION: u32 = 1;
pub const AUDIT_MODEL_ID: &str = "audit-battery";
pub const SERIAL_DIM: usize = 3;
pub const LAG: usize = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditParams {
    pub generator: GeneratorKind,
    pub seed: u32,
    pub skip: u64,
    pub n: usize,
    pub bins: usize,
    pub alpha: f64,
    pub conversion: RealConversion,
    pub workload: u64,
}

impl Default for AuditParams {
    fn default() -> Self {
        Self::for_generator(GeneratorKind::Mt19937)
    }
}

impl AuditParams {
    /// Seed 5489, skip 10^6, 10^4 draws, 10 bins, α = 0.05, workload 10^4.
    pub fn for_generator(generator: GeneratorKind) -> Self {
        Self {
            generator,
            seed: DEFAULT_SEED,
            skip: 1_000_000,
            n: 10_000,
            bins: 10,
            alpha: 0.05,
            conversion: generator.default_conversion(),
            workload: 10_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuitabilityVerdict {
    UseWithConfidence,
    TestBeforeUse,
    DoNotUse,
}

impl SuitabilityVerdict {
    pub fn symbol(self) -> &'static str {
        match self {
            Self::UseWithConfidence => "+",
            Self::TestBeforeUse => "~",
            Self::DoNotUse => "--",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::UseWithConfidence => "use with confidence",
            Self::TestBeforeUse => "test before use",
            Self::DoNotUse => "do not use",
        }
    }
}

/// A battery test that either ran or was skipped with a reason.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome<R> {
    Ran(R),
    Skipped { reason: String },
}

impl<R> Outcome<R> {
    pub fn report(&self) -> Option<&R> {
        match self {
            Self::Ran(r) => Some(r),
            Self::Skipped { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SerialResult {
    pub dim: usize,
    pub bins_per_dim: usize,
    #[serde(flatten)]
    pub report: ChiSquareReport64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LagResult {
    #[serde(flatten)]
    pub report: CorrelationReport64,
    pub bound: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Battery {
    pub uniformity: Outcome<ChiSquareReport64>,
    pub serial: Outcome<SerialResult>,
    pub lag_correlation: Outcome<LagResult>,
    pub budget: BudgetReport,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Finding {
    Pass,
    Fail,
    Skipped,
}

impl Battery {
    /// Per-test findings in report order.
    pub fn findings(&self) -> [(&'static str, Finding); 4] {
        fn chi(o: Option<Verdict>) -> Finding {
            match o {
                Some(Verdict::Accept) => Finding::Pass,
                Some(Verdict::Reject) => Finding::Fail,
                None => Finding::Skipped,
            }
        }
        let lag = match &self.lag_correlation {
            Outcome::Ran(l) if l.pass => Finding::Pass,
            Outcome::Ran(_) => Finding::Fail,
            Outcome::Skipped { .. } => Finding::Skipped,
        };
        let budget = if self.budget.all_pass() {
            Finding::Pass
        } else {
            Finding::Fail
        };
        [
            ("uniformity", chi(self.uniformity.report().map(|r| r.verdict))),
            ("serial", chi(self.serial.report().map(|r| r.report.verdict))),
            ("lag_correlation", lag),
            ("budget", budget),
        ]
    }

    pub fn verdict(&self) -> SuitabilityVerdict {
        let findings = self.findings();
        verdict_from(findings.iter().map(|(_, f)| *f))
    }
}

/// Any failure means do-not-use; any skipped test means test-before-use.
pub fn verdict_from(findings: impl IntoIterator<Item = Finding>) -> SuitabilityVerdict {
    let mut verdict = SuitabilityVerdict::UseWithConfidence;
    for f in findings {
        match f {
            Finding::Fail => return SuitabilityVerdict::DoNotUse,
            Finding::Skipped => verdict = SuitabilityVerdict::TestBeforeUse,
            Finding::Pass => {}
        }
    }
    verdict
}

/// Uniformity result under one conversion of the same word stream.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConversionAttempt {
    pub conversion: RealConversion,
    pub outcome: Outcome<ChiSquareReport64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorSourceNote {
    pub category: &'static str,
    pub coverage: &'static str,
    pub note: &'static str,
}

pub const ERROR_SOURCE_NOTES: [ErrorSourceNote; 6] = [
    ErrorSourceNote {
        category: "simulation project conception",
        coverage: "not covered",
        note: "objectives, scope and required accuracy are the modeller's responsibility",
    },
    ErrorSourceNote {
        category: "input data analysis",
        coverage: "not covered",
        note: "input data quality, sample size and fitted distributions are not examined",
    },
    ErrorSourceNote {
        category: "conceptual modelling",
        coverage: "not covered",
        note: "simplifications, ignored correlations and parametric uncertainty are not examined",
    },
    ErrorSourceNote {
        category: "converting conceptual to computer model",
        coverage: "partial",
        note: "the generator and conversion under audit are exercised; the model code is not",
    },
    ErrorSourceNote {
        category: "experimentation",
        coverage: "partial",
        note: "period budget rules are checked against the requested workload; replication counts, \
               initial transients and solution-space search are not",
    },
    ErrorSourceNote {
        category: "PRNG quality",
        coverage: "covered",
        note: "uniformity, serial (3-D) and lag-1 correlation tests plus period budget rules",
    },
];

/// Measured once per run; excluded from report determinism.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunInfo {
    pub timestamp: String,
    pub draws: usize,
    pub elapsed_seconds: f64,
    pub draws_per_second: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub version: u32,
    pub inputs: AuditParams,
    pub battery: Battery,
    pub findings: BTreeMap<&'static str, Finding>,
    pub verdict: SuitabilityVerdict,
    pub conversion_sweep: Vec<ConversionAttempt>,
    pub error_sources: Vec<ErrorSourceNote>,
    pub manifest: ReproducibilityManifest,
    /// Timestamp and throughput; the only fields that differ between runs.
    pub run_info: RunInfo,
}

fn skipped<R>(e: Error) -> mcaudit_core::Result<Outcome<R>> {
    match e {
        Error::InsufficientSample(reason) => Ok(Outcome::Skipped { reason }),
        other => Err(other),
    }
}

fn uniformity(samples: &[f64], bins: usize, alpha: Probability64) -> mcaudit_core::Result<Outcome<ChiSquareReport64>> {
    chi_square_uniformity(samples, bins, alpha).map(Outcome::Ran).or_else(skipped)
}

/// Largest bins-per-dimension not above `bins` that keeps the expected cell
/// count of the serial test at or above the floor.
pub fn serial_bins(n: usize, bins: usize) -> usize {
    let tuples = (n / SERIAL_DIM) as f64;
    let fit = (tuples / MIN_EXPECTED_COUNT).cbrt().floor() as usize;
    // Guard the floor against cbrt rounding.
    let fit = (fit.saturating_sub(1)..=fit + 1)
        .filter(|b| (b.pow(SERIAL_DIM as u32) as f64) * MIN_EXPECTED_COUNT <= tuples)
        .max()
        .unwrap_or(0);
    bins.min(fit)
}

fn draw(params: &AuditParams, conversion: RealConversion) -> mcaudit_core::Result<Vec<f64>> {
    let mut g = GeneratorState::new(params.generator, params.seed)?;
    g.skip(params.skip);
    Ok((0..params.n).map(|_| g.next_real(conversion)).collect())
}

pub fn validate(params: &AuditParams) -> mcaudit_core::Result<Probability64> {
    params.generator.validate_seed(params.seed)?;
    if params.bins < 2 {
        return Err(Error::InvalidParameter(format!("bins must be at least 2, got {}", params.bins)));
    }
    if params.n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let alpha = Probability64::new(params.alpha)?;
    if !alpha.is_interior() {
        return Err(Error::InvalidParameter(format!("alpha must lie in (0, 1), got {}", params.alpha)));
    }
    Ok(alpha)
}

pub fn run_battery(samples: &[f64], params: &AuditParams, alpha: Probability64) -> mcaudit_core::Result<Battery> {
    let uniformity = uniformity(samples, params.bins, alpha)?;
    let bins_per_dim = serial_bins(samples.len(), params.bins);
    let serial = if bins_per_dim < 2 {
        Outcome::Skipped {
            reason: format!(
                "{} tuples are too few for a {SERIAL_DIM}-dimensional serial test with 2 bins per dimension",
                samples.len() / SERIAL_DIM
            ),
        }
    } else {
        serial_test(samples, SERIAL_DIM, bins_per_dim, alpha)
            .map(|report| {
                Outcome::Ran(SerialResult {
                    dim: SERIAL_DIM,
                    bins_per_dim,
                    report,
                })
            })
            .or_else(skipped)?
    };
    let lag_correlation = match lag_correlation(samples, LAG) {
        Ok(report) => {
            let bound = report.three_sigma_bound();
            Outcome::Ran(LagResult {
                report,
                bound,
                pass: report.r.abs() <= bound,
            })
        }
        Err(Error::InsufficientSample(reason)) => Outcome::Skipped { reason },
        Err(Error::ZeroVariance(which)) => Outcome::Skipped {
            reason: format!("sample `{which}` has zero variance"),
        },
        Err(e) => return Err(e),
    };
    let budget = budget_check(&params.generator.period(), params.workload);
    Ok(Battery {
        uniformity,
        serial,
        lag_correlation,
        budget,
    })
}

pub fn manifest(params: &AuditParams, samples: &[f64]) -> ReproducibilityManifest {
    let mut model_params = BTreeMap::new();
    model_params.insert("skip".to_string(), params.skip as f64);
    model_params.insert("n".to_string(), params.n as f64);
    model_params.insert("bins".to_string(), params.bins as f64);
    model_params.insert("alpha".to_string(), params.alpha);
    model_params.insert("workload".to_string(), params.workload as f64);
    ReproducibilityManifest {
        version: MANIFEST_VERSION,
        tool_version: mcaudit_core::VERSION.to_string(),
        generator: params.generator,
        base_seed: params.seed,
        conversion: params.conversion,
        replications: 1,
        // The audit stream is seeded directly, not through seed derivation.
        derived_seeds: vec![params.seed],
        draws_consumed: vec![params.skip + params.n as u64],
        digest: format_digest(digest_outputs(samples)),
        seed_mixing: SeedMixing::current(),
        model: ModelSpec {
            id: AUDIT_MODEL_ID.to_string(),
            draws_per_replication: params.skip + params.n as u64,
            params: model_params,
        },
    }
}

pub fn cmd_audit(params: &AuditParams) -> mcaudit_core::Result<AuditReport> {
    let alpha = validate(params)?;
    let mut g = GeneratorState::new(params.generator, params.seed)?;
    g.skip(params.skip);
    let start = Instant::now();
    let samples: Vec<f64> = (0..params.n).map(|_| g.next_real(params.conversion)).collect();
    let elapsed = start.elapsed().as_secs_f64().max(f64::MIN_POSITIVE);

    let battery = run_battery(&samples, params, alpha)?;
    let findings = battery.findings().into_iter().collect();
    let verdict = battery.verdict();

    let conversion_sweep = RealConversion::ALL
        .into_iter()
        .map(|conversion| {
            let xs = if conversion == params.conversion {
                samples.clone()
            } else {
                draw(params, conversion)?
            };
            Ok(ConversionAttempt {
                conversion,
                outcome: uniformity(&xs, params.bins, alpha)?,
            })
        })
        .collect::<mcaudit_core::Result<_>>()?;

    Ok(AuditReport {
        version: REPORT_VERSION,
        inputs: params.clone(),
        battery,
        findings,
        verdict,
        conversion_sweep,
        error_sources: ERROR_SOURCE_NOTES.to_vec(),
        manifest: manifest(params, &samples),
        run_info: RunInfo {
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            draws: params.n,
            elapsed_seconds: elapsed,
            draws_per_second: params.n as f64 / elapsed,
        },
    })
}

/// Histogram counts of the audit stream, as exported for plotting.
pub fn stream_histogram(params: &AuditParams) -> mcaudit_core::Result<mcaudit_core::Histogram64> {
    validate(params)?;
    histogram(&draw(params, params.conversion)?, params.bins)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_rule() {
        use Finding::*;
        assert_eq!(verdict_from([Pass, Pass]), SuitabilityVerdict::UseWithConfidence);
        assert_eq!(verdict_from([Pass, Skipped]), SuitabilityVerdict::TestBeforeUse);
        assert_eq!(verdict_from([Skipped, Fail]), SuitabilityVerdict::DoNotUse);
        assert_eq!(verdict_from([]), SuitabilityVerdict::UseWithConfidence);
    }

    #[test]
    fn serial_bins_respect_floor() {
        assert_eq!(serial_bins(10_000, 10), 8);
        assert_eq!(serial_bins(90_000, 10), 10);
        assert_eq!(serial_bins(15_000, 10), 10);
        assert_eq!(serial_bins(14_999, 10), 9);
        assert_eq!(serial_bins(120, 10), 2);
        assert_eq!(serial_bins(119, 10), 1);
    }

    #[test]
    fn default_audit_accepts_twister() {
        let report = cmd_audit(&AuditParams::default()).unwrap();
        let u = report.battery.uniformity.report().unwrap();
        assert_eq!(u.observed, [982, 1030, 1030, 959, 948, 1025, 983, 1002, 1036, 1005]);
        assert_eq!(report.verdict, SuitabilityVerdict::UseWithConfidence);
        assert_eq!(report.conversion_sweep.len(), 4);
    }

    #[test]
    fn small_samples_are_skipped_not_failed() {
        let params = AuditParams {
            n: 40,
            ..AuditParams::default()
        };
        let report = cmd_audit(&params).unwrap();
        assert!(matches!(report.battery.uniformity, Outcome::Skipped { .. }));
        assert!(matches!(report.battery.serial, Outcome::Skipped { .. }));
        assert_eq!(report.verdict, SuitabilityVerdict::TestBeforeUse);
    }
}
