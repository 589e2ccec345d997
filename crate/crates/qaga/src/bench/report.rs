//! Report files.
//!
//! A report directory holds three artifacts: `config.json` (the full
//! effective configuration, defaults resolved), `problems.csv` (one row per
//! problem), and `summary.csv` (one row per cell, matching the win/tie/loss
//! column semantics of the comparison plots). Writing is deterministic —
//! re-running the same configuration reproduces every file byte for byte —
//! and `read_*` reconstructs the in-memory report exactly.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{
    BenchError, CellA, CellB, Dist, ExperimentAConfig, ExperimentAReport, ExperimentBConfig,
    ExperimentBReport, Outcome, ProblemRow, StageRow, MQC_VARIANT_NOTE,
};

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> BenchError + '_ {
    move |source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn csv_err(path: &Path) -> impl FnOnce(csv::Error) -> BenchError + '_ {
    move |source| BenchError::Csv {
        path: path.to_path_buf(),
        source,
    }
}

fn write_csv<R: Serialize>(path: &Path, rows: &[R]) -> Result<(), BenchError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row).map_err(csv_err(path))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| BenchError::Parse(format!("csv buffer: {e}")))?;
    fs::write(path, bytes).map_err(io_err(path))
}

/// csv only emits a header when at least one record is written, so
/// header-only files for empty reports are spelled out explicitly.
fn write_csv_or_header<R: Serialize>(
    path: &Path,
    rows: &[R],
    header: &str,
) -> Result<(), BenchError> {
    if rows.is_empty() {
        return fs::write(path, format!("{header}\n")).map_err(io_err(path));
    }
    write_csv(path, rows)
}

fn read_csv<R: for<'de> Deserialize<'de>>(path: &Path) -> Result<Vec<R>, BenchError> {
    let mut reader = csv::Reader::from_path(path).map_err(csv_err(path))?;
    reader
        .deserialize()
        .collect::<Result<Vec<R>, csv::Error>>()
        .map_err(csv_err(path))
}

fn write_json<C: Serialize>(path: &Path, config: &C) -> Result<(), BenchError> {
    let mut text = serde_json::to_string_pretty(config).map_err(|source| BenchError::Json {
        path: path.to_path_buf(),
        source,
    })?;
    text.push('\n');
    fs::write(path, text).map_err(io_err(path))
}

fn read_json<C: for<'de> Deserialize<'de>>(path: &Path) -> Result<C, BenchError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    serde_json::from_str(&text).map_err(|source| BenchError::Json {
        path: path.to_path_buf(),
        source,
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct ARowCsv {
    dist: Dist,
    sparsity: f64,
    problem: usize,
    problem_seed: u64,
    sampler_seed: u64,
    energy_a: f64,
    energy_b: f64,
    reads_a: u64,
    reads_b: u64,
    outcome: Outcome,
}

#[derive(Debug, Serialize, Deserialize)]
struct ASummaryCsv {
    dist: Dist,
    sparsity: f64,
    completed: usize,
    wins_a: usize,
    ties: usize,
    wins_b: usize,
    aborted: Option<String>,
}

const A_ROW_HEADER: &str =
    "dist,sparsity,problem,problem_seed,sampler_seed,energy_a,energy_b,reads_a,reads_b,outcome";
const A_SUMMARY_HEADER: &str = "dist,sparsity,completed,wins_a,ties,wins_b,aborted";

/// Write an experiment-A report into `dir` (created if missing):
/// `config.json`, `problems.csv`, `summary.csv`.
pub fn write_experiment_a(
    report: &ExperimentAReport,
    dir: impl AsRef<Path>,
) -> Result<(), BenchError> {
    let dir = dir.as_ref();
    fs::create_dir_all(dir).map_err(io_err(dir))?;

    #[derive(Serialize)]
    struct ConfigEcho<'a> {
        #[serde(flatten)]
        config: &'a ExperimentAConfig,
        notes: &'a [String],
    }
    write_json(
        &dir.join("config.json"),
        &ConfigEcho {
            config: &report.config,
            notes: &report.notes,
        },
    )?;

    let rows: Vec<ARowCsv> = report
        .cells
        .iter()
        .flat_map(|cell| {
            cell.rows.iter().map(move |r| ARowCsv {
                dist: cell.dist,
                sparsity: cell.sparsity,
                problem: r.problem,
                problem_seed: r.problem_seed,
                sampler_seed: r.sampler_seed,
                energy_a: r.energy_a,
                energy_b: r.energy_b,
                reads_a: r.reads_a,
                reads_b: r.reads_b,
                outcome: r.outcome,
            })
        })
        .collect();
    write_csv_or_header(&dir.join("problems.csv"), &rows, A_ROW_HEADER)?;

    let summaries: Vec<ASummaryCsv> = report
        .cells
        .iter()
        .map(|cell| ASummaryCsv {
            dist: cell.dist,
            sparsity: cell.sparsity,
            completed: cell.rows.len(),
            wins_a: cell.wins_a,
            ties: cell.ties,
            wins_b: cell.wins_b,
            aborted: cell.aborted.clone(),
        })
        .collect();
    write_csv_or_header(&dir.join("summary.csv"), &summaries, A_SUMMARY_HEADER)
}

/// Read back a report written by [`write_experiment_a`].
pub fn read_experiment_a(dir: impl AsRef<Path>) -> Result<ExperimentAReport, BenchError> {
    let dir = dir.as_ref();

    #[derive(Deserialize)]
    struct ConfigEcho {
        #[serde(flatten)]
        config: ExperimentAConfig,
        #[serde(default)]
        notes: Vec<String>,
    }
    let echo: ConfigEcho = read_json(&dir.join("config.json"))?;
    let rows: Vec<ARowCsv> = read_csv(&dir.join("problems.csv"))?;
    let summaries: Vec<ASummaryCsv> = read_csv(&dir.join("summary.csv"))?;

    let mut row_iter = rows.into_iter().peekable();
    let mut cells = Vec::with_capacity(summaries.len());
    for s in summaries {
        let mut cell_rows = Vec::with_capacity(s.completed);
        while let Some(r) = row_iter.peek() {
            if r.dist == s.dist && r.sparsity == s.sparsity && cell_rows.len() < s.completed {
                let r = row_iter.next().expect("peeked");
                cell_rows.push(ProblemRow {
                    problem: r.problem,
                    problem_seed: r.problem_seed,
                    sampler_seed: r.sampler_seed,
                    energy_a: r.energy_a,
                    energy_b: r.energy_b,
                    reads_a: r.reads_a,
                    reads_b: r.reads_b,
                    outcome: r.outcome,
                });
            } else {
                break;
            }
        }
        if cell_rows.len() != s.completed {
            return Err(BenchError::Parse(format!(
                "cell ({}, {}) lists {} completed problems but {} rows were found",
                s.dist,
                s.sparsity,
                s.completed,
                cell_rows.len()
            )));
        }
        cells.push(CellA {
            dist: s.dist,
            sparsity: s.sparsity,
            rows: cell_rows,
            wins_a: s.wins_a,
            ties: s.ties,
            wins_b: s.wins_b,
            aborted: s.aborted,
        });
    }
    if row_iter.next().is_some() {
        return Err(BenchError::Parse(
            "problems.csv has rows not covered by summary.csv".into(),
        ));
    }
    Ok(ExperimentAReport {
        config: echo.config,
        notes: echo.notes,
        cells,
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct BRowCsv {
    theta: f64,
    sparsity: f64,
    problem: usize,
    problem_seed: u64,
    sampler_seed: u64,
    stages: usize,
    fallback_used: bool,
    final_energy: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct BSummaryCsv {
    theta: f64,
    sparsity: f64,
    completed: usize,
    avg_stages: f64,
    aborted: Option<String>,
}

const B_ROW_HEADER: &str =
    "theta,sparsity,problem,problem_seed,sampler_seed,stages,fallback_used,final_energy";
const B_SUMMARY_HEADER: &str = "theta,sparsity,completed,avg_stages,aborted";

/// Write an experiment-B report into `dir`; same layout as experiment A.
pub fn write_experiment_b(
    report: &ExperimentBReport,
    dir: impl AsRef<Path>,
) -> Result<(), BenchError> {
    let dir = dir.as_ref();
    fs::create_dir_all(dir).map_err(io_err(dir))?;

    #[derive(Serialize)]
    struct ConfigEcho<'a> {
        #[serde(flatten)]
        config: &'a ExperimentBConfig,
        notes: [&'a str; 1],
    }
    write_json(
        &dir.join("config.json"),
        &ConfigEcho {
            config: &report.config,
            notes: [MQC_VARIANT_NOTE],
        },
    )?;

    let rows: Vec<BRowCsv> = report
        .cells
        .iter()
        .flat_map(|cell| {
            cell.rows.iter().map(move |r| BRowCsv {
                theta: cell.theta,
                sparsity: cell.sparsity,
                problem: r.problem,
                problem_seed: r.problem_seed,
                sampler_seed: r.sampler_seed,
                stages: r.stages,
                fallback_used: r.fallback_used,
                final_energy: r.final_energy,
            })
        })
        .collect();
    write_csv_or_header(&dir.join("problems.csv"), &rows, B_ROW_HEADER)?;

    let summaries: Vec<BSummaryCsv> = report
        .cells
        .iter()
        .map(|cell| BSummaryCsv {
            theta: cell.theta,
            sparsity: cell.sparsity,
            completed: cell.rows.len(),
            avg_stages: cell.avg_stages,
            aborted: cell.aborted.clone(),
        })
        .collect();
    write_csv_or_header(&dir.join("summary.csv"), &summaries, B_SUMMARY_HEADER)
}

/// Read back a report written by [`write_experiment_b`].
pub fn read_experiment_b(dir: impl AsRef<Path>) -> Result<ExperimentBReport, BenchError> {
    let dir = dir.as_ref();

    #[derive(Deserialize)]
    struct ConfigEcho {
        #[serde(flatten)]
        config: ExperimentBConfig,
    }
    let echo: ConfigEcho = read_json(&dir.join("config.json"))?;
    let rows: Vec<BRowCsv> = read_csv(&dir.join("problems.csv"))?;
    let summaries: Vec<BSummaryCsv> = read_csv(&dir.join("summary.csv"))?;

    let mut row_iter = rows.into_iter().peekable();
    let mut cells = Vec::with_capacity(summaries.len());
    for s in summaries {
        let mut cell_rows = Vec::with_capacity(s.completed);
        while let Some(r) = row_iter.peek() {
            if r.theta == s.theta && r.sparsity == s.sparsity && cell_rows.len() < s.completed {
                let r = row_iter.next().expect("peeked");
                cell_rows.push(StageRow {
                    problem: r.problem,
                    problem_seed: r.problem_seed,
                    sampler_seed: r.sampler_seed,
                    stages: r.stages,
                    fallback_used: r.fallback_used,
                    final_energy: r.final_energy,
                });
            } else {
                break;
            }
        }
        if cell_rows.len() != s.completed {
            return Err(BenchError::Parse(format!(
                "cell (theta {}, sparsity {}) lists {} completed problems but {} rows were found",
                s.theta,
                s.sparsity,
                s.completed,
                cell_rows.len()
            )));
        }
        cells.push(CellB {
            theta: s.theta,
            sparsity: s.sparsity,
            rows: cell_rows,
            avg_stages: s.avg_stages,
            aborted: s.aborted,
        });
    }
    if row_iter.next().is_some() {
        return Err(BenchError::Parse(
            "problems.csv has rows not covered by summary.csv".into(),
        ));
    }
    Ok(ExperimentBReport {
        config: echo.config,
        cells,
    })
}
