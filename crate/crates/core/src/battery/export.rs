use std::io::{self, Write};

use super::Histogram;
use crate::format_real;
use crate::rng::{GeneratorState, RealConversion};
use crate::scalar::Real;

/// Draws `n` consecutive non-overlapping `dim`-tuples for scatter plots.
pub fn export_scatter<T: Real>(
    state: &mut GeneratorState,
    n: usize,
    dim: usize,
    conv: RealConversion,
) -> Vec<Vec<T>> {
    (0..n)
        .map(|_| (0..dim).map(|_| state.next_real(conv)).collect())
        .collect()
}

/// Writes one tuple per row, comma separated, 17 significant digits.
pub fn write_scatter_csv<T: Real, W: Write>(
    rows: &[Vec<T>],
    mut out: W,
    header: bool,
) -> io::Result<()> {
    if header {
        let dim = rows.first().map_or(0, Vec::len);
        let names: Vec<String> = (1..=dim).map(|i| format!("x{i}")).collect();
        writeln!(out, "{}", names.join(","))?;
    }
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .map(|v| format_real(v.to_f64().unwrap_or(f64::NAN)))
            .collect();
        writeln!(out, "{}", cells.join(","))?;
    }
    out.flush()
}

/// Writes `bin_upper,count` rows.
pub fn write_histogram_csv<T: Real, W: Write>(
    hist: &Histogram<T>,
    mut out: W,
    header: bool,
) -> io::Result<()> {
    if header {
        writeln!(out, "bin_upper,count")?;
    }
    for (edge, count) in hist.upper_edges().into_iter().zip(&hist.counts) {
        writeln!(out, "{},{}", format_real(edge.to_f64().unwrap_or(f64::NAN)), count)?;
    }
    out.flush()
}
