//! Human-readable renderings of reports.

use std::fmt::Write;

use mcaudit_core::engine::BudgetReport;
use mcaudit_core::rng::PeriodDescriptor;
use mcaudit_core::ChiSquareReport64;

use crate::audit::{AuditReport, Outcome};
use crate::bench::BenchResult;
use crate::simulate::SimulationReport;

fn verdict_word(v: mcaudit_core::battery::Verdict) -> &'static str {
    match v {
        mcaudit_core::battery::Verdict::Accept => "accept",
        mcaudit_core::battery::Verdict::Reject => "reject",
    }
}

fn chi_line(out: &mut String, r: &ChiSquareReport64) {
    let _ = writeln!(
        out,
        "  statistic {:.4}  df {}  critical value {:.4}  p-value {:.6}  alpha {}  {}",
        r.statistic,
        r.df,
        r.critical_value,
        r.p_value.value(),
        r.alpha.value(),
        verdict_word(r.verdict)
    );
}

fn period(p: &PeriodDescriptor) -> String {
    match p.exact() {
        Some(exact) => format!("{exact} (2^{:.3})", p.log2_period()),
        None => format!("2^{:.0}", p.log2_period()),
    }
}

fn budget(out: &mut String, b: &BudgetReport) {
    let _ = writeln!(out, "period budget: period {}, workload {}", period(&b.period), b.requested_draws);
    for check in b.rules() {
        let _ = writeln!(
            out,
            "  {:<12} max {:<24} {}",
            check.rule.name(),
            check.max_draws.to_string(),
            if check.pass { "pass" } else { "fail" }
        );
    }
}

pub fn audit(r: &AuditReport) -> String {
    let p = &r.inputs;
    let mut out = String::new();
    let _ = writeln!(out, "PRNG audit report (version {})", r.version);
    let _ = writeln!(
        out,
        "generator {}  seed {}  conversion {}",
        p.generator, p.seed, p.conversion
    );
    let _ = writeln!(
        out,
        "skip {}  n {}  bins {}  alpha {}  workload {}",
        p.skip, p.n, p.bins, p.alpha, p.workload
    );
    out.push('\n');

    let _ = writeln!(out, "uniformity ({} bins)", p.bins);
    match &r.battery.uniformity {
        Outcome::Ran(u) => {
            let _ = writeln!(out, "  {:>4} {:>10} {:>12}", "bin", "observed", "expected");
            for (i, (o, e)) in u.observed.iter().zip(&u.expected).enumerate() {
                let _ = writeln!(out, "  {:>4} {:>10} {:>12.2}", i + 1, o, e);
            }
            chi_line(&mut out, u);
        }
        Outcome::Skipped { reason } => {
            let _ = writeln!(out, "  skipped: {reason}");
        }
    }
    match &r.battery.serial {
        Outcome::Ran(s) => {
            let _ = writeln!(out, "serial ({}-D, {} bins per dimension)", s.dim, s.bins_per_dim);
            chi_line(&mut out, &s.report);
        }
        Outcome::Skipped { reason } => {
            let _ = writeln!(out, "serial\n  skipped: {reason}");
        }
    }
    match &r.battery.lag_correlation {
        Outcome::Ran(l) => {
            let _ = writeln!(out, "lag-{} correlation", l.report.lag);
            let _ = writeln!(
                out,
                "  r {:.6}  bound ±{:.6}  {}",
                l.report.r,
                l.bound,
                if l.pass { "pass" } else { "fail" }
            );
        }
        Outcome::Skipped { reason } => {
            let _ = writeln!(out, "lag correlation\n  skipped: {reason}");
        }
    }
    budget(&mut out, &r.battery.budget);
    out.push('\n');

    let _ = writeln!(out, "conversion sweep (uniformity of the same stream)");
    for a in &r.conversion_sweep {
        match &a.outcome {
            Outcome::Ran(u) => {
                let _ = writeln!(
                    out,
                    "  {:<14} statistic {:>10.4}  p-value {:.6}  {}",
                    a.conversion.to_string(),
                    u.statistic,
                    u.p_value.value(),
                    verdict_word(u.verdict)
                );
            }
            Outcome::Skipped { reason } => {
                let _ = writeln!(out, "  {:<14} skipped: {reason}", a.conversion.to_string());
            }
        }
    }
    out.push('\n');

    let _ = writeln!(out, "verdict: {} {}", r.verdict.symbol(), r.verdict.label());
    for (name, finding) in &r.findings {
        let _ = writeln!(out, "  {name:<16} {finding:?}");
    }
    out.push('\n');

    let _ = writeln!(out, "error sources");
    for note in &r.error_sources {
        let _ = writeln!(out, "  {} [{}]: {}", note.category, note.coverage, note.note);
    }
    out.push('\n');

    let _ = writeln!(out, "manifest");
    let _ = writeln!(out, "  digest {}", r.manifest.digest);
    let _ = writeln!(out, "  draws consumed {}", r.manifest.draws_consumed[0]);
    out.push('\n');

    let _ = writeln!(out, "run info (varies between runs)");
    let _ = writeln!(out, "  timestamp {}", r.run_info.timestamp);
    let _ = writeln!(
        out,
        "  throughput {:.0} draws/s ({} draws in {:.6} s)",
        r.run_info.draws_per_second, r.run_info.draws, r.run_info.elapsed_seconds
    );
    out
}

pub fn bench(results: &[BenchResult]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<10} {:>10} {:>8} {:>14} {:>16} {:>16} {:>18}",
        "generator", "draws", "repeats", "gen median s", "gen draws/s", "gen+write s", "gen+write draws/s"
    );
    for r in results {
        let _ = writeln!(
            out,
            "{:<10} {:>10} {:>8} {:>14.6} {:>16.0} {:>16.6} {:>18.0}",
            r.generator.to_string(),
            r.draws,
            r.repeats,
            r.generation.median_seconds,
            r.generation.median_draws_per_second,
            r.generation_and_write.median_seconds,
            r.generation_and_write.median_draws_per_second
        );
    }
    out
}

pub fn simulation(r: &SimulationReport) -> String {
    let s = &r.stats;
    let m = &r.manifest;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "model {}  generator {}  seed {}  replications {}  draws per replication {}",
        r.model, m.generator, m.base_seed, m.replications, m.model.draws_per_replication
    );
    let _ = writeln!(out, "  n       {}", s.n);
    let _ = writeln!(out, "  mean    {}", s.mean);
    let _ = writeln!(out, "  stdev   {}", s.stdev);
    let _ = writeln!(out, "  min     {}", s.min);
    let _ = writeln!(out, "  median  {}", s.median);
    let _ = writeln!(out, "  max     {}", s.max);
    match s.mode {
        Some(mode) => {
            let _ = writeln!(out, "  mode    {mode}");
        }
        None => {
            let _ = writeln!(out, "  mode    none (all values distinct)");
        }
    }
    match &r.confidence_interval {
        Some(ci) => {
            let _ = writeln!(out, "  {:.0}% CI [{}, {}]", ci.level * 100.0, ci.lower, ci.upper);
        }
        None => {
            let _ = writeln!(out, "  CI not reported: fewer than {} replications", mcaudit_core::engine::MIN_CI_SAMPLE);
        }
    }
    budget(&mut out, &r.budget);
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    let _ = writeln!(out, "digest {}", m.digest);
    if let Some(matches) = r.digest_matches {
        let _ = writeln!(out, "replay digest {}", if matches { "matches" } else { "DIFFERS" });
    }
    if let Some(path) = &r.manifest_path {
        let _ = writeln!(out, "manifest {path}");
    }
    out
}
