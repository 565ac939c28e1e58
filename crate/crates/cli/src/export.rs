//! CSV exports for visual tests.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use mcaudit_core::battery::{export_scatter, write_histogram_csv, write_scatter_csv};

use crate::audit::{stream_histogram, AuditParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportKind {
    Scatter { dim: usize },
    Histogram,
}

fn sink<'a>(out: Option<&Path>, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(stdout)),
    })
}

/// Writes the export for the stream `params` describes (seed, skip,
/// conversion); `params.n` is the row count for scatter and the sample size
/// for histograms.
pub fn cmd_export(
    kind: ExportKind,
    params: &AuditParams,
    header: bool,
    out: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<()> {
    let describe = || out.map_or("standard output".to_string(), |p| p.display().to_string());
    match kind {
        ExportKind::Scatter { dim } => {
            anyhow::ensure!((2..=3).contains(&dim), "scatter dimension must be 2 or 3, got {dim}");
            crate::audit::validate(params)?;
            let mut g = mcaudit_core::rng::GeneratorState::new(params.generator, params.seed)?;
            g.skip(params.skip);
            let rows = export_scatter::<f64>(&mut g, params.n, dim, params.conversion);
            let w = sink(out, stdout)?;
            write_scatter_csv(&rows, w, header).with_context(|| format!("writing {}", describe()))
        }
        ExportKind::Histogram => {
            let h = stream_histogram(params)?;
            let w = sink(out, stdout)?;
            write_histogram_csv(&h, w, header).with_context(|| format!("writing {}", describe()))
        }
    }
}
