//! Sweeps every cycle type of `S_n` and tabulates solution counts.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::certifier::{certify_a1_type, certify_a2_type, Verdict};
use crate::cycle_analysis::CycleType;
use crate::enumerator::{enumerate_pruned, Guards};
use crate::error::{Error, Result};
use crate::perm::format_cycles;

/// Partitions of `n` as non-increasing length lists, in reverse
/// lexicographic order: `[n]` first, `[1, …, 1]` last.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SurveyRow {
    pub n: usize,
    pub partition: Vec<usize>,
    pub cert_a1: Verdict,
    pub cert_a2: Verdict,
    pub solution_count: usize,
    /// Smallest non-trivial solution in canonical order.
    pub example_solution: Option<String>,
}

pub fn survey_row(ty: &CycleType, guards: &Guards) -> Result<SurveyRow> {
    let alpha = ty.representative();
    let set = enumerate_pruned(&alpha, guards)?;
    Ok(SurveyRow {
        n: ty.degree(),
        partition: ty.partition(),
        cert_a1: certify_a1_type(ty).verdict,
        cert_a2: certify_a2_type(ty).verdict,
        solution_count: set.len(),
        example_solution: set.iter().find(|y| !y.is_identity()).map(format_cycles),
    })
}

/// One row per partition of `n`, in [`partitions`] order, computed on a pool
/// of `workers` threads (0 picks the rayon default).
pub fn survey(n: usize, workers: usize, guards: &Guards) -> Result<Vec<SurveyRow>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    guards.check_pruned(n)?;
    let types = partitions(n)
        .iter()
        .map(|parts| CycleType::from_partition(n, parts))
        .collect::<Result<Vec<_>>>()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))?;
    pool.install(|| types.par_iter().map(|ty| survey_row(ty, guards)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurveyFormat {
    Json,
    Csv,
}

/// CSV columns, in order.
pub const CSV_HEADER: [&str; 6] = [
    "n",
    "partition",
    "certA1",
    "certA2",
    "solutionCount",
    "exampleSolution",
];

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::OnlyTrivial => "OnlyTrivial",
        Verdict::Inconclusive => "Inconclusive",
    }
}

/// Pretty JSON array, or CSV with [`CSV_HEADER`]; partitions in CSV are
/// space-separated lengths and a missing example is an empty field.
pub fn write_survey<W: Write>(rows: &[SurveyRow], format: SurveyFormat, mut out: W) -> Result<()> {
    let io = |e: std::io::Error| Error::InvalidArgument(format!("write failed: {e}"));
    match format {
        SurveyFormat::Json => {
            serde_json::to_writer_pretty(&mut out, rows)
                .map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))?;
            out.write_all(b"\n").map_err(io)?;
        }
        SurveyFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            let csv_err = |e: csv::Error| Error::InvalidArgument(format!("write failed: {e}"));
            w.write_record(CSV_HEADER).map_err(csv_err)?;
            for row in rows {
                let partition = row
                    .partition
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                w.write_record([
                    row.n.to_string(),
                    partition,
                    verdict_name(row.cert_a1).to_string(),
                    verdict_name(row.cert_a2).to_string(),
                    row.solution_count.to_string(),
                    row.example_solution.clone().unwrap_or_default(),
                ])
                .map_err(csv_err)?;
            }
            w.flush().map_err(io)?;
        }
    }
    Ok(())
}
