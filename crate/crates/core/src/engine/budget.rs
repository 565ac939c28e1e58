//! How many draws a generator's period can safely supply.
//!
//! Three rules of thumb are checked: use at most a tenth of the period,
//! at most `sqrt(P / 200)` draws, and at most `P^(1/3)` draws (the bound
//! for two-dimensional uniformity).

use std::fmt;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::rng::{log2_big, PeriodDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BudgetRule {
    TenPercent,
    Sqrt200,
    CubeRoot,
}

impl BudgetRule {
    pub const ALL: [BudgetRule; 3] = [Self::TenPercent, Self::Sqrt200, Self::CubeRoot];

    pub fn name(self) -> &'static str {
        match self {
            Self::TenPercent => "ten-percent",
            Self::Sqrt200 => "sqrt-200",
            Self::CubeRoot => "cube-root",
        }
    }

    fn exact_max(self, period: &BigUint) -> BigUint {
        match self {
            Self::TenPercent => period / 10u32,
            Self::Sqrt200 => (period / 200u32).sqrt(),
            Self::CubeRoot => period.cbrt(),
        }
    }

    fn log2_max(self, log2_period: f64) -> f64 {
        match self {
            Self::TenPercent => log2_period - 10f64.log2(),
            Self::Sqrt200 => (log2_period - 200f64.log2()) / 2.0,
            Self::CubeRoot => log2_period / 3.0,
        }
    }
}

impl fmt::Display for BudgetRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Largest admissible draw count under one rule.
#[derive(Debug, Clone, PartialEq)]
pub enum MaxDraws {
    Exact(BigUint),
    /// Known only as `2^x`.
    Log2(f64),
}

impl Serialize for MaxDraws {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(1))?;
        match self {
            Self::Exact(v) => map.serialize_entry("exact", &v.to_string())?,
            Self::Log2(v) => map.serialize_entry("log2", v)?,
        }
        map.end()
    }
}

impl fmt::Display for MaxDraws {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exact(v) => write!(f, "{v}"),
            Self::Log2(v) => write!(f, "2^{v:.3}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RuleCheck {
    pub rule: BudgetRule,
    pub max_draws: MaxDraws,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BudgetReport {
    pub period: PeriodDescriptor,
    pub requested_draws: u64,
    pub ten_percent: RuleCheck,
    pub sqrt_200: RuleCheck,
    pub cube_root: RuleCheck,
}

impl BudgetReport {
    pub fn rules(&self) -> [&RuleCheck; 3] {
        [&self.ten_percent, &self.sqrt_200, &self.cube_root]
    }

    pub fn all_pass(&self) -> bool {
        self.rules().iter().all(|r| r.pass)
    }

    pub fn failed_rules(&self) -> Vec<BudgetRule> {
        self.rules().iter().filter(|r| !r.pass).map(|r| r.rule).collect()
    }
}

pub fn budget_check(period: &PeriodDescriptor, requested: u64) -> BudgetReport {
    let check = |rule: BudgetRule| match period.exact() {
        Some(p) => {
            let max = rule.exact_max(p);
            let pass = BigUint::from(requested) <= max;
            RuleCheck {
                rule,
                max_draws: MaxDraws::Exact(max),
                pass,
            }
        }
        None => {
            let max_log2 = rule.log2_max(period.log2_period());
            let pass = requested == 0 || (requested as f64).log2() <= max_log2;
            RuleCheck {
                rule,
                max_draws: MaxDraws::Log2(max_log2),
                pass,
            }
        }
    };
    BudgetReport {
        period: period.clone(),
        requested_draws: requested,
        ten_percent: check(BudgetRule::TenPercent),
        sqrt_200: check(BudgetRule::Sqrt200),
        cube_root: check(BudgetRule::CubeRoot),
    }
}

impl MaxDraws {
    /// The admissible count on the log2 scale.
    pub fn log2(&self) -> f64 {
        match self {
            Self::Exact(v) if *v == BigUint::default() => f64::NEG_INFINITY,
            Self::Exact(v) => log2_big(v),
            Self::Log2(v) => *v,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{period_of, GeneratorKind};

    #[test]
    fn randu_ten_thousand() {
        let r = budget_check(&period_of(GeneratorKind::Randu), 10_000);
        assert_eq!(r.ten_percent.max_draws, MaxDraws::Exact(53_687_091u64.into()));
        assert_eq!(r.sqrt_200.max_draws, MaxDraws::Exact(1_638u64.into()));
        assert_eq!(r.cube_root.max_draws, MaxDraws::Exact(812u64.into()));
        assert_eq!(
            [r.ten_percent.pass, r.sqrt_200.pass, r.cube_root.pass],
            [true, false, false]
        );
        assert_eq!(r.failed_rules(), vec![BudgetRule::Sqrt200, BudgetRule::CubeRoot]);
    }

    #[test]
    fn twister_is_never_the_limit() {
        let r = budget_check(&period_of(GeneratorKind::Mt19937), 1_000_000_000_000);
        assert!(r.all_pass());
        let r = budget_check(&period_of(GeneratorKind::Mt19937), u64::MAX);
        assert!(r.all_pass());
    }

    #[test]
    fn zero_requested_always_passes() {
        for kind in GeneratorKind::ALL {
            assert!(budget_check(&period_of(kind), 0).all_pass());
        }
    }

    #[test]
    fn boundary_is_inclusive() {
        let r = budget_check(&period_of(GeneratorKind::Randu), 812);
        assert!(r.cube_root.pass);
        let r = budget_check(&period_of(GeneratorKind::Randu), 813);
        assert!(!r.cube_root.pass);
    }
}
