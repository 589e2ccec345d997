//! Random benchmark generation and experiment harnesses.
//!
//! Benchmarks are Erdős–Rényi-style instances: every edge of the complete
//! graph on `n_vars` nodes carries a coupler with probability `sparsity`,
//! and coefficients come from one of three distributions (±1 binary,
//! uniform on [−1,1], standard normal). Experiment A scores two methods
//! head-to-head per problem (win/tie/loss per cell); experiment B sweeps
//! the uncertainty threshold and records how many stages the greedy solver
//! takes to converge.

mod report;

pub use report::{
    read_experiment_a, read_experiment_b, write_experiment_a, write_experiment_b,
};

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ising::IsingHamiltonian;
use crate::sampler::{derived_seed, Backend, SamplerConfig};
use crate::solver::{qaga_run, solve_compare, CompareConfig, Method, QagaConfig, QagaError};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid problem spec: {0}")]
    InvalidSpec(String),
    #[error("invalid experiment config: {0}")]
    InvalidConfig(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Csv { path: PathBuf, source: csv::Error },
    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("report parse: {0}")]
    Parse(String),
    #[error(transparent)]
    Qaga(#[from] QagaError),
}

/// Coefficient distribution for generated benchmarks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dist {
    /// Uniform on {−1, +1}.
    Binary,
    /// Uniform on [−1, +1].
    Uniform,
    /// Standard normal.
    Normal,
}

impl Dist {
    fn draw(&self, rng: &mut ChaCha8Rng) -> f64 {
        match self {
            Dist::Binary => {
                if rng.random::<bool>() {
                    1.0
                } else {
                    -1.0
                }
            }
            Dist::Uniform => rng.random_range(-1.0..=1.0),
            Dist::Normal => rng.sample(StandardNormal),
        }
    }
}

impl FromStr for Dist {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "binary" => Ok(Dist::Binary),
            "uniform" => Ok(Dist::Uniform),
            "normal" => Ok(Dist::Normal),
            other => Err(format!(
                "unknown distribution '{other}' (expected 'binary', 'uniform', or 'normal')"
            )),
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Binary => write!(f, "binary"),
            Dist::Uniform => write!(f, "uniform"),
            Dist::Normal => write!(f, "normal"),
        }
    }
}

/// Recipe for one random instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub n_vars: usize,
    /// Probability that each complete-graph edge carries a coupler.
    pub sparsity: f64,
    pub dist: Dist,
    pub seed: u64,
    /// Skip local fields entirely (sensitivity mode); default off.
    #[serde(default)]
    pub zero_fields: bool,
}

impl ProblemSpec {
    pub fn validate(&self) -> Result<(), BenchError> {
        if self.n_vars < 1 {
            return Err(BenchError::InvalidSpec("n_vars must be >= 1".into()));
        }
        if !(0.0..=1.0).contains(&self.sparsity) {
            return Err(BenchError::InvalidSpec(format!(
                "sparsity must lie in [0,1], got {}",
                self.sparsity
            )));
        }
        Ok(())
    }
}

/// Generate a random instance, deterministically in `spec.seed`.
///
/// Draw order is fixed: one field per node in ascending index order (unless
/// `zero_fields`), then one inclusion draw per edge in ascending `(i,j)`
/// order, with the coupler coefficient drawn immediately after each
/// accepted edge.
pub fn gen_random(spec: &ProblemSpec) -> Result<IsingHamiltonian, BenchError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n_vars;
    let mut h = IsingHamiltonian::new(0..n);
    if !spec.zero_fields {
        for i in 0..n {
            let v = spec.dist.draw(&mut rng);
            h.set_field(i, v).expect("index in range");
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random::<f64>() < spec.sparsity {
                let v = spec.dist.draw(&mut rng);
                h.add_coupler(i, j, v).expect("fresh pair");
            }
        }
    }
    Ok(h)
}

/// Head-to-head outcome for one problem (ties within the tolerance).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    WinA,
    Tie,
    WinB,
}

fn score(energy_a: f64, energy_b: f64, tie_tolerance: f64) -> Outcome {
    if (energy_a - energy_b).abs() <= tie_tolerance {
        Outcome::Tie
    } else if energy_a < energy_b {
        Outcome::WinA
    } else {
        Outcome::WinB
    }
}

/// One problem's result inside a comparison cell. `reads_a`/`reads_b`
/// record the total reads each method consumed (the greedy solver spends
/// its per-stage budget once per stage).
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemRow {
    pub problem: usize,
    pub problem_seed: u64,
    pub sampler_seed: u64,
    pub energy_a: f64,
    pub energy_b: f64,
    pub reads_a: u64,
    pub reads_b: u64,
    pub outcome: Outcome,
}

/// One `(dist, sparsity)` cell of experiment A.
#[derive(Debug, Clone, PartialEq)]
pub struct CellA {
    pub dist: Dist,
    pub sparsity: f64,
    pub rows: Vec<ProblemRow>,
    pub wins_a: usize,
    pub ties: usize,
    pub wins_b: usize,
    /// Partial-results marker: a method failed on the next problem and the
    /// cell stopped early; `rows` holds everything completed before it.
    pub aborted: Option<String>,
}

/// Experiment A configuration: two methods, a grid of cells, matched
/// budgets and per-problem seeds. Fields omitted from a config file take
/// the defaults below.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ExperimentAConfig {
    pub method_a: Method,
    pub method_b: Method,
    pub dists: Vec<Dist>,
    pub sparsities: Vec<f64>,
    pub n_vars: usize,
    pub batch: usize,
    pub base_seed: u64,
    pub compare: CompareConfig,
    /// Energy-equality tolerance for ties (binary coefficients give integer
    /// energies; real-valued distributions need slack).
    pub tie_tolerance: f64,
    #[serde(default)]
    pub zero_fields: bool,
}

impl Default for ExperimentAConfig {
    fn default() -> Self {
        Self {
            method_a: Method::Qaga,
            method_b: Method::Qa,
            dists: vec![Dist::Binary, Dist::Uniform, Dist::Normal],
            sparsities: vec![0.05, 0.25, 0.5, 0.75, 1.0],
            n_vars: 50,
            batch: 100,
            base_seed: 0,
            compare: CompareConfig::default(),
            tie_tolerance: 1e-9,
            zero_fields: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentAReport {
    pub config: ExperimentAConfig,
    /// Caveats that belong next to the numbers (e.g. which mqc variant ran).
    pub notes: Vec<String>,
    pub cells: Vec<CellA>,
}

/// Interpretation caveat attached to every report that scores `mqc`.
pub(crate) const MQC_VARIANT_NOTE: &str = "mqc = disagreement-component tournament with a final \
     sqc pass; an interpretation, not a reimplementation of the originally published procedure";

/// Run experiment A: for every `(dist, sparsity)` cell, solve `batch`
/// problems with both methods and score win/tie/loss on best energies.
///
/// Both methods see the same instance and the same sampler master seed per
/// problem. Problems within a cell run concurrently; rows are assembled in
/// problem order, so the report is identical for any worker count.
pub fn run_experiment_a(cfg: &ExperimentAConfig) -> Result<ExperimentAReport, BenchError> {
    cfg.compare.qaga_config().validate()?;
    if cfg.tie_tolerance < 0.0 {
        return Err(BenchError::InvalidConfig(
            "tie_tolerance must be >= 0".into(),
        ));
    }
    let methods = [cfg.method_a, cfg.method_b];
    let mut cells = Vec::new();
    let mut cell_index: u64 = 0;
    for &dist in &cfg.dists {
        for &sparsity in &cfg.sparsities {
            let cell_seed = derived_seed(cfg.base_seed, cell_index);
            cell_index += 1;
            let results: Vec<Result<ProblemRow, String>> = (0..cfg.batch)
                .into_par_iter()
                .map(|p| {
                    let problem_seed = derived_seed(cell_seed, p as u64);
                    let sampler_seed = derived_seed(cell_seed, (1 << 32) | p as u64);
                    let spec = ProblemSpec {
                        n_vars: cfg.n_vars,
                        sparsity,
                        dist,
                        seed: problem_seed,
                        zero_fields: cfg.zero_fields,
                    };
                    let h = gen_random(&spec).map_err(|e| e.to_string())?;
                    let compare = CompareConfig {
                        sampler: SamplerConfig {
                            seed: sampler_seed,
                            ..cfg.compare.sampler.clone()
                        },
                        ..cfg.compare.clone()
                    };
                    let res = solve_compare(&h, &methods, &compare).map_err(|e| e.to_string())?;
                    Ok(ProblemRow {
                        problem: p,
                        problem_seed,
                        sampler_seed,
                        energy_a: res[0].energy,
                        energy_b: res[1].energy,
                        reads_a: res[0].total_reads,
                        reads_b: res[1].total_reads,
                        outcome: score(res[0].energy, res[1].energy, cfg.tie_tolerance),
                    })
                })
                .collect();

            let mut rows = Vec::with_capacity(cfg.batch);
            let mut aborted = None;
            for (p, r) in results.into_iter().enumerate() {
                match r {
                    Ok(row) => rows.push(row),
                    Err(msg) => {
                        aborted = Some(format!("problem {p}: {msg}"));
                        break;
                    }
                }
            }
            let wins_a = rows.iter().filter(|r| r.outcome == Outcome::WinA).count();
            let ties = rows.iter().filter(|r| r.outcome == Outcome::Tie).count();
            let wins_b = rows.iter().filter(|r| r.outcome == Outcome::WinB).count();
            cells.push(CellA {
                dist,
                sparsity,
                rows,
                wins_a,
                ties,
                wins_b,
                aborted,
            });
        }
    }
    let mut notes = Vec::new();
    if methods.contains(&Method::Mqc) {
        notes.push(MQC_VARIANT_NOTE.to_string());
    }
    Ok(ExperimentAReport {
        config: cfg.clone(),
        notes,
        cells,
    })
}

/// One problem's result inside a threshold-sweep cell.
#[derive(Debug, Clone, PartialEq)]
pub struct StageRow {
    pub problem: usize,
    pub problem_seed: u64,
    pub sampler_seed: u64,
    pub stages: usize,
    pub fallback_used: bool,
    pub final_energy: f64,
}

/// One `(theta, sparsity)` cell of experiment B.
#[derive(Debug, Clone, PartialEq)]
pub struct CellB {
    pub theta: f64,
    pub sparsity: f64,
    pub rows: Vec<StageRow>,
    /// Mean stage count over the completed rows.
    pub avg_stages: f64,
    pub aborted: Option<String>,
}

/// Experiment B configuration: a threshold sweep of the greedy solver.
/// Fields omitted from a config file take the defaults below.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ExperimentBConfig {
    pub thetas: Vec<f64>,
    pub sparsities: Vec<f64>,
    pub n_vars: usize,
    pub batch: usize,
    pub dist: Dist,
    pub base_seed: u64,
    pub backend: Backend,
    pub sampler: SamplerConfig,
    pub max_stages: Option<usize>,
    #[serde(default)]
    pub zero_fields: bool,
}

impl Default for ExperimentBConfig {
    fn default() -> Self {
        Self {
            thetas: vec![0.25, 0.15, 0.05, 0.0],
            sparsities: vec![0.05, 0.25, 0.5, 0.75, 1.0],
            n_vars: 50,
            batch: 100,
            dist: Dist::Normal,
            base_seed: 0,
            backend: Backend::Sa,
            sampler: SamplerConfig::default(),
            max_stages: None,
            zero_fields: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentBReport {
    pub config: ExperimentBConfig,
    pub cells: Vec<CellB>,
}

/// Run experiment B: for every `(theta, sparsity)` cell, run the greedy
/// solver on `batch` problems and average the stage counts.
///
/// Problem and sampler seeds depend on the sparsity column and problem
/// index only, so every theta row sees the same instances and the same
/// sampling randomness.
pub fn run_experiment_b(cfg: &ExperimentBConfig) -> Result<ExperimentBReport, BenchError> {
    let mut cells = Vec::new();
    for &theta in &cfg.thetas {
        let solver_cfg = QagaConfig {
            theta,
            backend: cfg.backend,
            sampler: cfg.sampler.clone(),
            max_stages: cfg.max_stages,
        };
        solver_cfg.validate()?;
        for (col, &sparsity) in cfg.sparsities.iter().enumerate() {
            let col_seed = derived_seed(cfg.base_seed, col as u64);
            let results: Vec<Result<StageRow, String>> = (0..cfg.batch)
                .into_par_iter()
                .map(|p| {
                    let problem_seed = derived_seed(col_seed, p as u64);
                    let sampler_seed = derived_seed(col_seed, (1 << 32) | p as u64);
                    let spec = ProblemSpec {
                        n_vars: cfg.n_vars,
                        sparsity,
                        dist: cfg.dist,
                        seed: problem_seed,
                        zero_fields: cfg.zero_fields,
                    };
                    let h = gen_random(&spec).map_err(|e| e.to_string())?;
                    let run_cfg = QagaConfig {
                        sampler: SamplerConfig {
                            seed: sampler_seed,
                            ..solver_cfg.sampler.clone()
                        },
                        ..solver_cfg.clone()
                    };
                    let (_, trace) = qaga_run(&h, &run_cfg).map_err(|e| e.to_string())?;
                    Ok(StageRow {
                        problem: p,
                        problem_seed,
                        sampler_seed,
                        stages: trace.total_stages(),
                        fallback_used: trace.fallback_used,
                        final_energy: trace.final_energy,
                    })
                })
                .collect();

            let mut rows = Vec::with_capacity(cfg.batch);
            let mut aborted = None;
            for (p, r) in results.into_iter().enumerate() {
                match r {
                    Ok(row) => rows.push(row),
                    Err(msg) => {
                        aborted = Some(format!("problem {p}: {msg}"));
                        break;
                    }
                }
            }
            let avg_stages = if rows.is_empty() {
                f64::NAN
            } else {
                rows.iter().map(|r| r.stages as f64).sum::<f64>() / rows.len() as f64
            };
            cells.push(CellB {
                theta,
                sparsity,
                rows,
                avg_stages,
                aborted,
            });
        }
    }
    Ok(ExperimentBReport {
        config: cfg.clone(),
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampler::exact_ground_state;

    fn spec(n: usize, s: f64, dist: Dist, seed: u64) -> ProblemSpec {
        ProblemSpec {
            n_vars: n,
            sparsity: s,
            dist,
            seed,
            zero_fields: false,
        }
    }

    #[test]
    fn complete_and_empty_graphs() {
        let full = gen_random(&spec(5, 1.0, Dist::Normal, 1)).unwrap();
        assert_eq!(full.num_couplers(), 10);
        let empty = gen_random(&spec(5, 0.0, Dist::Normal, 1)).unwrap();
        assert_eq!(empty.num_couplers(), 0);
        assert_eq!(empty.fields().count(), 5);
    }

    #[test]
    fn binary_coefficients_are_signs() {
        let h = gen_random(&spec(10, 0.5, Dist::Binary, 3)).unwrap();
        for (_, v) in h.fields() {
            assert!(v == 1.0 || v == -1.0);
        }
        for (_, v) in h.couplers() {
            assert!(v == 1.0 || v == -1.0);
        }
    }

    #[test]
    fn uniform_and_normal_ranges() {
        let h = gen_random(&spec(10, 1.0, Dist::Uniform, 4)).unwrap();
        for (_, v) in h.fields().chain(h.couplers().map(|(k, v)| (k.0, v))) {
            assert!((-1.0..=1.0).contains(&v));
        }
        // Standard normal occasionally exceeds [-1,1]; check it does here
        // so the distributions are distinguishable.
        let h = gen_random(&spec(30, 1.0, Dist::Normal, 4)).unwrap();
        assert!(h.couplers().any(|(_, v)| v.abs() > 1.0));
    }

    #[test]
    fn generation_is_deterministic_in_the_seed() {
        let a = gen_random(&spec(12, 0.4, Dist::Normal, 77)).unwrap();
        let b = gen_random(&spec(12, 0.4, Dist::Normal, 77)).unwrap();
        assert_eq!(a, b);
        let c = gen_random(&spec(12, 0.4, Dist::Normal, 78)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn zero_fields_mode() {
        let h = gen_random(&ProblemSpec {
            zero_fields: true,
            ..spec(8, 0.5, Dist::Normal, 5)
        })
        .unwrap();
        assert_eq!(h.fields().count(), 0);
        assert!(h.num_couplers() > 0);
    }

    #[test]
    fn spec_validation() {
        assert!(gen_random(&spec(0, 0.5, Dist::Normal, 1)).is_err());
        assert!(gen_random(&spec(5, 1.5, Dist::Normal, 1)).is_err());
        assert!(gen_random(&spec(5, -0.1, Dist::Normal, 1)).is_err());
    }

    #[test]
    fn coupler_count_matches_binomial_expectation() {
        // Mean coupler count over 200 instances vs s·C(n,2), within 4 sigma
        // of the binomial mean.
        let n = 20usize;
        let s = 0.3;
        let pairs = (n * (n - 1) / 2) as f64;
        let total: usize = (0..200)
            .map(|seed| {
                gen_random(&spec(n, s, Dist::Normal, seed))
                    .unwrap()
                    .num_couplers()
            })
            .sum();
        let mean = total as f64 / 200.0;
        let expect = s * pairs;
        let sigma_mean = (pairs * s * (1.0 - s) / 200.0).sqrt();
        assert!(
            (mean - expect).abs() < 4.0 * sigma_mean,
            "mean {mean} vs expectation {expect} (sigma {sigma_mean})"
        );
    }

    fn tiny_a_config(method_a: Method, method_b: Method, backend: Backend) -> ExperimentAConfig {
        ExperimentAConfig {
            method_a,
            method_b,
            dists: vec![Dist::Normal],
            sparsities: vec![0.5],
            n_vars: 8,
            batch: 10,
            base_seed: 9,
            compare: CompareConfig {
                backend,
                sampler: SamplerConfig {
                    reads: 20,
                    num_gauges: 4,
                    ..SamplerConfig::default()
                },
                theta: 0.0,
                max_stages: None,
            },
            tie_tolerance: 1e-9,
            zero_fields: false,
        }
    }

    #[test]
    fn experiment_a_counts_partition_the_batch() {
        let cfg = tiny_a_config(Method::Qaga, Method::Qa, Backend::Sa);
        let report = run_experiment_a(&cfg).unwrap();
        assert_eq!(report.cells.len(), 1);
        let cell = &report.cells[0];
        assert!(cell.aborted.is_none());
        assert_eq!(cell.rows.len(), 10);
        assert_eq!(cell.wins_a + cell.ties + cell.wins_b, 10);
    }

    #[test]
    fn experiment_a_all_ties_with_exact_backend() {
        // Both methods recover the exact ground state on every instance.
        let cfg = tiny_a_config(Method::Mqc, Method::Qaga, Backend::Exact);
        let report = run_experiment_a(&cfg).unwrap();
        let cell = &report.cells[0];
        assert_eq!(cell.ties, 10);
        assert_eq!(cell.wins_a, 0);
        assert_eq!(cell.wins_b, 0);
        assert!(report.notes.iter().any(|n| n.contains("tournament")));
    }

    #[test]
    fn experiment_a_mqc_never_loses_to_qa() {
        let cfg = tiny_a_config(Method::Mqc, Method::Qa, Backend::Sa);
        let report = run_experiment_a(&cfg).unwrap();
        assert_eq!(report.cells[0].wins_b, 0);
    }

    #[test]
    fn experiment_a_is_deterministic() {
        let cfg = tiny_a_config(Method::Qaga, Method::Qa, Backend::Sa);
        let a = run_experiment_a(&cfg).unwrap();
        let b = run_experiment_a(&cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn method_failure_aborts_the_cell_with_a_marker() {
        // The exact backend refuses 30-variable problems, so every problem
        // fails; the cell keeps zero rows and records why.
        let cfg = ExperimentAConfig {
            n_vars: 30,
            ..tiny_a_config(Method::Qaga, Method::Qa, Backend::Exact)
        };
        let report = run_experiment_a(&cfg).unwrap();
        let cell = &report.cells[0];
        assert!(cell.rows.is_empty());
        let marker = cell.aborted.as_deref().unwrap();
        assert!(marker.contains("problem 0"), "marker: {marker}");
        assert!(marker.contains("enumeration"), "marker: {marker}");
    }

    #[test]
    fn experiment_b_stage_counts() {
        let cfg = ExperimentBConfig {
            thetas: vec![0.0, 0.25],
            sparsities: vec![0.5, 1.0],
            n_vars: 8,
            batch: 5,
            dist: Dist::Normal,
            base_seed: 4,
            backend: Backend::Exact,
            sampler: SamplerConfig {
                reads: 10,
                ..SamplerConfig::default()
            },
            max_stages: None,
            zero_fields: false,
        };
        let report = run_experiment_b(&cfg).unwrap();
        assert_eq!(report.cells.len(), 4);
        for cell in &report.cells {
            assert!(cell.aborted.is_none());
            assert_eq!(cell.rows.len(), 5);
            // The exact backend returns unanimous batches, so every run
            // fixes everything on its first (and only) sampling stage.
            assert_eq!(cell.avg_stages, 1.0);
            assert!(cell.avg_stages >= 1.0);
            for row in &cell.rows {
                assert!(row.stages <= cfg.n_vars);
                assert!(!row.fallback_used);
            }
        }
    }

    #[test]
    fn experiment_b_reuses_instances_across_theta_rows() {
        let cfg = ExperimentBConfig {
            thetas: vec![0.0, 0.2],
            sparsities: vec![0.5],
            n_vars: 6,
            batch: 3,
            dist: Dist::Normal,
            base_seed: 10,
            backend: Backend::Sa,
            sampler: SamplerConfig {
                reads: 10,
                ..SamplerConfig::default()
            },
            max_stages: None,
            zero_fields: false,
        };
        let report = run_experiment_b(&cfg).unwrap();
        let seeds_row0: Vec<u64> = report.cells[0].rows.iter().map(|r| r.problem_seed).collect();
        let seeds_row1: Vec<u64> = report.cells[1].rows.iter().map(|r| r.problem_seed).collect();
        assert_eq!(seeds_row0, seeds_row1);
    }

    #[test]
    fn experiment_b_final_energies_are_sane() {
        let cfg = ExperimentBConfig {
            thetas: vec![0.0],
            sparsities: vec![1.0],
            n_vars: 8,
            batch: 5,
            dist: Dist::Normal,
            base_seed: 6,
            backend: Backend::Sa,
            sampler: SamplerConfig {
                reads: 50,
                ..SamplerConfig::default()
            },
            max_stages: None,
            zero_fields: false,
        };
        let report = run_experiment_b(&cfg).unwrap();
        for row in &report.cells[0].rows {
            let h = gen_random(&spec(8, 1.0, Dist::Normal, row.problem_seed)).unwrap();
            let (_, ground) = exact_ground_state(&h).unwrap();
            assert!(row.final_energy >= ground - 1e-9);
        }
    }
}
