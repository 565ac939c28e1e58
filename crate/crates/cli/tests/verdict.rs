use mcaudit_cli::audit::{verdict_from, Battery, Finding, LagResult, Outcome, SerialResult};
use mcaudit_cli::SuitabilityVerdict;
use mcaudit_core::battery::{chi_square_from_counts, CorrelationReport, Verdict};
use mcaudit_core::engine::budget_check;
use mcaudit_core::rng::GeneratorKind;
use mcaudit_core::{ChiSquareReport64, Probability64};
use proptest::prelude::*;

fn chi(counts: &[u64]) -> ChiSquareReport64 {
    chi_square_from_counts(counts, Probability64::new(0.05).unwrap()).unwrap()
}

fn arb_chi() -> impl Strategy<Value = Option<ChiSquareReport64>> {
    prop_oneof![
        1 => Just(None),
        4 => prop::collection::vec(50u64..150, 4..12).prop_map(|c| Some(chi(&c))),
    ]
}

fn arb_lag() -> impl Strategy<Value = Option<LagResult>> {
    prop_oneof![
        1 => Just(None),
        4 => (-0.2f64..0.2, 100usize..10_000).prop_map(|(r, n)| {
            let report = CorrelationReport { lag: 1, r, n };
            let bound = report.three_sigma_bound();
            Some(LagResult { report, bound, pass: r.abs() <= bound })
        }),
    ]
}

fn outcome<R>(o: Option<R>) -> Outcome<R> {
    o.map_or(Outcome::Skipped { reason: "synthetic".into() }, Outcome::Ran)
}

proptest! {
    #[test]
    fn verdict_follows_rule(
        uniformity in arb_chi(),
        serial in arb_chi(),
        lag in arb_lag(),
        kind in prop::sample::select(GeneratorKind::ALL.to_vec()),
        workload in 0u64..20_000,
    ) {
        let hard_failure = uniformity.as_ref().is_some_and(|r| r.verdict == Verdict::Reject)
            || serial.as_ref().is_some_and(|r| r.verdict == Verdict::Reject)
            || lag.as_ref().is_some_and(|l| l.report.r.abs() > l.bound);
        let any_skipped = uniformity.is_none() || serial.is_none() || lag.is_none();
        let budget = budget_check(&kind.period(), workload);
        let budget_fail = !budget.all_pass();

        let battery = Battery {
            uniformity: outcome(uniformity),
            serial: outcome(serial.map(|report| SerialResult { dim: 3, bins_per_dim: 2, report })),
            lag_correlation: outcome(lag),
            budget,
        };
        let expected = if hard_failure || budget_fail {
            SuitabilityVerdict::DoNotUse
        } else if any_skipped {
            SuitabilityVerdict::TestBeforeUse
        } else {
            SuitabilityVerdict::UseWithConfidence
        };
        prop_assert_eq!(battery.verdict(), expected);
        prop_assert_eq!(battery.verdict(), battery.verdict());
    }

    #[test]
    fn use_with_confidence_requires_all_passes(findings in prop::collection::vec(
        prop::sample::select(vec![Finding::Pass, Finding::Fail, Finding::Skipped]), 0..8)
    ) {
        let v = verdict_from(findings.iter().copied());
        prop_assert_eq!(v == SuitabilityVerdict::UseWithConfidence, findings.iter().all(|f| *f == Finding::Pass));
        prop_assert_eq!(v == SuitabilityVerdict::DoNotUse, findings.contains(&Finding::Fail));
    }
}
