//! Throughput benchmark: generation alone, and generation plus a buffered
//! write of every value to a temporary file.

use std::io::{BufWriter, Write};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use mcaudit_core::format_real;
use mcaudit_core::rng::{GeneratorKind, GeneratorState, RealConversion};
use serde::Serialize;

pub const MIN_REPEATS: u32 = 3;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timing {
    pub per_repeat_seconds: Vec<f64>,
    pub elapsed_seconds: f64,
    pub median_seconds: f64,
    pub median_draws_per_second: f64,
}

impl Timing {
    fn from_runs(draws: u64, per_repeat_seconds: Vec<f64>) -> Self {
        let mut sorted = per_repeat_seconds.clone();
        sorted.sort_by(f64::total_cmp);
        let mid = sorted.len() / 2;
        let median_seconds = if sorted.len() % 2 == 1 {
            sorted[mid]
        } else {
            (sorted[mid - 1] + sorted[mid]) / 2.0
        };
        Self {
            elapsed_seconds: per_repeat_seconds.iter().sum(),
            per_repeat_seconds,
            median_seconds,
            median_draws_per_second: draws as f64 / median_seconds,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchResult {
    pub generator: GeneratorKind,
    pub conversion: RealConversion,
    pub draws: u64,
    pub repeats: u32,
    pub generation: Timing,
    pub generation_and_write: Timing,
}

fn seconds_since(start: Instant) -> f64 {
    start.elapsed().as_secs_f64().max(1e-9)
}

fn generate(g: &mut GeneratorState, n: u64, conv: RealConversion) -> f64 {
    let mut acc = 0.0f64;
    for _ in 0..n {
        acc += g.next_real::<f64>(conv);
    }
    acc
}

fn generate_and_write(g: &mut GeneratorState, n: u64, conv: RealConversion) -> Result<()> {
    let file = tempfile::tempfile().context("creating benchmark temporary file")?;
    let mut out = BufWriter::new(file);
    for _ in 0..n {
        writeln!(out, "{}", format_real(g.next_real(conv)))?;
    }
    out.flush().context("writing benchmark temporary file")?;
    Ok(())
}

pub fn cmd_bench(kind: GeneratorKind, seed: u32, n: u64, repeats: u32) -> Result<BenchResult> {
    if n == 0 {
        bail!("n must be at least 1");
    }
    if repeats < MIN_REPEATS {
        bail!("repeats must be at least {MIN_REPEATS}, got {repeats}");
    }
    let conversion = kind.default_conversion();
    let mut generation = Vec::with_capacity(repeats as usize);
    let mut with_write = Vec::with_capacity(repeats as usize);
    for _ in 0..repeats {
        let mut g = GeneratorState::new(kind, seed)?;
        let start = Instant::now();
        std::hint::black_box(generate(&mut g, n, conversion));
        generation.push(seconds_since(start));

        let mut g = GeneratorState::new(kind, seed)?;
        let start = Instant::now();
        generate_and_write(&mut g, n, conversion)?;
        with_write.push(seconds_since(start));
    }
    Ok(BenchResult {
        generator: kind,
        conversion,
        draws: n,
        repeats,
        generation: Timing::from_runs(n, generation),
        generation_and_write: Timing::from_runs(n, with_write),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_runs() {
        let t = Timing::from_runs(100, vec![3.0, 1.0, 2.0]);
        assert_eq!(t.median_seconds, 2.0);
        assert_eq!(t.median_draws_per_second, 50.0);
        assert_eq!(t.elapsed_seconds, 6.0);
        assert_eq!(Timing::from_runs(10, vec![1.0, 4.0, 2.0, 3.0]).median_seconds, 2.5);
    }

    #[test]
    fn repeats_below_three_rejected() {
        assert!(cmd_bench(GeneratorKind::Mt19937, 5489, 10, 1).is_err());
        let r = cmd_bench(GeneratorKind::Minstd, 1, 1000, 3).unwrap();
        assert!(r.generation.median_draws_per_second > 0.0);
        assert_eq!(r.generation.per_repeat_seconds.len(), 3);
    }
}
