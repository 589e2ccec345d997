//! The quantum-assisted greedy loop.
//!
//! Each stage draws a batch of samples from the current Hamiltonian, treats
//! every spin as a Bernoulli variable over the batch, and estimates its
//! uncertainty
//!
//! ```text
//!   u(z_i) = 1 − |Σ_j z_i^j| / n
//! ```
//!
//! Variables with `u(z_i) ≤ θ` are fixed to their majority sign and
//! contracted out, and the next stage samples the smaller, sparser problem.
//! The loop stops when a stage fixes nothing, when everything is fixed, or
//! at the safety cap; variables still free at that point are assigned by
//! multi-qubit correction over the last stage's samples.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ising::{IsingError, IsingHamiltonian, PartialAssignment, SpinAssignment};
use crate::postprocess::{mqc, PostprocessError};
use crate::sampler::{sample, Backend, Sampler, SamplerConfig, SamplerError, SampleSet};

#[derive(Debug, Error)]
pub enum QagaError {
    #[error("theta must lie in [0, 0.5), got {0}")]
    InvalidTheta(f64),
    #[error("max_stages must be >= 1 when set")]
    InvalidStageCap,
    #[error("cannot solve an empty problem")]
    EmptyProblem,
    #[error("sample set is empty")]
    EmptySampleSet,
    #[error("variable {index} not present in the sample set")]
    UnknownVariable { index: usize },
    #[error("majority sign undefined: spins at {index} sum to zero")]
    ZeroMagnetization { index: usize },
    #[error("sampler failed at stage {stage}: {source}")]
    Sampler {
        stage: usize,
        source: SamplerError,
    },
    #[error(transparent)]
    Postprocess(#[from] PostprocessError),
    #[error(transparent)]
    Ising(#[from] IsingError),
}

/// Uncertainty of variable `index` over a sample set: 0 when every sample
/// agrees, 1 on an exact half split.
pub fn uncertainty(set: &SampleSet, index: usize) -> Result<f64, QagaError> {
    if set.is_empty() {
        return Err(QagaError::EmptySampleSet);
    }
    let sum = set
        .spin_sum(index)
        .map_err(|_| QagaError::UnknownVariable { index })?;
    Ok(1.0 - sum.unsigned_abs() as f64 / set.len() as f64)
}

/// Majority spin of variable `index` over a sample set. A zero sum has no
/// majority; callers gate on `uncertainty ≤ θ < 0.5`, which rules it out.
pub fn majority_sign(set: &SampleSet, index: usize) -> Result<i8, QagaError> {
    if set.is_empty() {
        return Err(QagaError::EmptySampleSet);
    }
    let sum = set
        .spin_sum(index)
        .map_err(|_| QagaError::UnknownVariable { index })?;
    match sum.signum() {
        1 => Ok(1),
        -1 => Ok(-1),
        _ => Err(QagaError::ZeroMagnetization { index }),
    }
}

/// Solver configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QagaConfig {
    /// Uncertainty threshold θ ∈ [0, 0.5). At 0, a variable is fixed only
    /// when every sample in the stage agrees on it.
    pub theta: f64,
    /// Sampling backend for every stage.
    pub backend: Backend,
    /// Per-stage sampler settings; `reads` is the per-stage budget. A
    /// nonzero `num_gauges` routes stage sampling through the
    /// spin-reversal-transform pipeline.
    pub sampler: SamplerConfig,
    /// Stage safety cap; `None` means the root variable count.
    pub max_stages: Option<usize>,
}

impl Default for QagaConfig {
    fn default() -> Self {
        Self {
            theta: 0.0,
            backend: Backend::Sa,
            sampler: SamplerConfig::default(),
            max_stages: None,
        }
    }
}

impl QagaConfig {
    pub fn validate(&self) -> Result<(), QagaError> {
        if !(self.theta >= 0.0 && self.theta < 0.5) {
            return Err(QagaError::InvalidTheta(self.theta));
        }
        if self.max_stages == Some(0) {
            return Err(QagaError::InvalidStageCap);
        }
        Ok(())
    }
}

/// What one stage did: how many variables it sampled, which it fixed, the
/// best sampled energy (root frame — contraction offsets make stage
/// energies directly comparable to the root problem), and how many
/// variables remain afterwards.
#[derive(Debug, Clone, PartialEq)]
pub struct StageRecord {
    pub stage: usize,
    pub sampled_vars: usize,
    pub fixed: Vec<(usize, i8)>,
    pub best_energy: f64,
    pub remaining: usize,
}

/// Full run record. One stage = one sampler invocation; a run that fixes
/// everything on its first batch has `total_stages() == 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct QagaTrace {
    pub stages: Vec<StageRecord>,
    pub fallback_used: bool,
    pub final_energy: f64,
    pub total_reads: u64,
}

impl QagaTrace {
    pub fn total_stages(&self) -> usize {
        self.stages.len()
    }

    /// Tabular export: one row per stage, a blank line, then a summary row.
    pub fn to_table_string(&self) -> String {
        let mut out = String::from("stage,vars_fixed,remaining,best_energy\n");
        for s in &self.stages {
            out.push_str(&format!(
                "{},{},{},{}\n",
                s.stage,
                s.fixed.len(),
                s.remaining,
                s.best_energy
            ));
        }
        out.push_str("\ntotal_stages,fallback_used,final_energy\n");
        out.push_str(&format!(
            "{},{},{}\n",
            self.total_stages(),
            self.fallback_used,
            self.final_energy
        ));
        out
    }

    pub fn write_table(&self, path: impl AsRef<Path>) -> Result<(), std::io::Error> {
        std::fs::write(path, self.to_table_string())
    }
}

/// Run the greedy solve against an explicit sampler implementation.
///
/// Within a stage, uncertainties come from that stage's single sample set
/// for all qualifying variables at once; the fixes then contract in
/// ascending index order (the result is order-independent). Stages repeat
/// until one fixes nothing, everything is fixed, or `max_stages` is hit;
/// leftovers are assigned by `mqc` on the last sample set restricted to
/// the remaining subproblem.
pub fn qaga_run_with(
    h: &IsingHamiltonian,
    cfg: &QagaConfig,
    backend: &dyn Sampler,
) -> Result<(SpinAssignment, QagaTrace), QagaError> {
    cfg.validate()?;
    if h.is_empty() {
        return Err(QagaError::EmptyProblem);
    }
    let max_stages = cfg.max_stages.unwrap_or(h.num_vars());

    let mut current = h.clone();
    let mut fixes = PartialAssignment::new();
    let mut stages: Vec<StageRecord> = Vec::new();
    let mut total_reads: u64 = 0;

    let last_set = loop {
        let stage = stages.len() + 1;
        let set = sample(&current, &cfg.sampler, backend)
            .map_err(|source| QagaError::Sampler { stage, source })?;
        total_reads += cfg.sampler.reads as u64;
        let sampled_vars = current.num_vars();
        let best_energy = set.best().expect("reads >= 1").1;

        let mut newly = PartialAssignment::new();
        for i in current.vars() {
            if uncertainty(&set, i)? <= cfg.theta {
                newly.fix(i, majority_sign(&set, i)?)?;
            }
        }
        for (i, v) in newly.iter() {
            fixes.fix(i, v)?;
        }
        current = current.contract_many(&newly)?;
        stages.push(StageRecord {
            stage,
            sampled_vars,
            fixed: newly.iter().collect(),
            best_energy,
            remaining: current.num_vars(),
        });
        let fixed_any = !newly.is_empty();

        if current.is_empty() || !fixed_any || stages.len() >= max_stages {
            break set;
        }
    };

    let mut fallback_used = false;
    if !current.is_empty() {
        fallback_used = true;
        let restricted = last_set
            .restrict(&current)
            .map_err(|source| QagaError::Sampler {
                stage: stages.len(),
                source,
            })?;
        let rescue = mqc(&current, &restricted)?;
        for (i, v) in rescue.iter() {
            fixes.fix(i, v)?;
        }
    }

    let assignment = fixes.to_assignment();
    let final_energy = h.energy(&assignment)?;
    Ok((
        assignment,
        QagaTrace {
            stages,
            fallback_used,
            final_energy,
            total_reads,
        },
    ))
}

/// Run the greedy solve with the configured backend; see [`qaga_run_with`].
pub fn qaga_run(
    h: &IsingHamiltonian,
    cfg: &QagaConfig,
) -> Result<(SpinAssignment, QagaTrace), QagaError> {
    let backend = cfg.backend;
    qaga_run_with(h, cfg, &backend)
}

/// Solve methods the comparison harness knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Annealer baseline: best of one spin-reversal-transform batch.
    Qa,
    /// Multi-qubit correction applied to the same batch as [`Method::Qa`].
    Mqc,
    /// The staged greedy solver.
    Qaga,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "qa" => Ok(Method::Qa),
            "mqc" => Ok(Method::Mqc),
            "qaga" => Ok(Method::Qaga),
            other => Err(format!(
                "unknown method '{other}' (expected 'qa', 'mqc', or 'qaga')"
            )),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Qa => write!(f, "qa"),
            Method::Mqc => write!(f, "mqc"),
            Method::Qaga => write!(f, "qaga"),
        }
    }
}

/// Shared settings for head-to-head comparisons: every method sees the same
/// problem and the same per-invocation read budget.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareConfig {
    pub backend: Backend,
    /// Sampler settings for the baseline batch; also the per-stage settings
    /// for the greedy solver (which samples plainly, without gauges).
    pub sampler: SamplerConfig,
    pub theta: f64,
    pub max_stages: Option<usize>,
}

impl Default for CompareConfig {
    fn default() -> Self {
        Self {
            backend: Backend::Sa,
            sampler: SamplerConfig {
                num_gauges: 10,
                ..SamplerConfig::default()
            },
            theta: 0.0,
            max_stages: None,
        }
    }
}

impl CompareConfig {
    /// The greedy solver's config: identical budget and schedule, but plain
    /// per-stage sampling (no gauge wrapper).
    pub fn qaga_config(&self) -> QagaConfig {
        QagaConfig {
            theta: self.theta,
            backend: self.backend,
            sampler: SamplerConfig {
                num_gauges: 0,
                ..self.sampler.clone()
            },
            max_stages: self.max_stages,
        }
    }
}

/// One method's outcome on one problem.
#[derive(Debug, Clone, PartialEq)]
pub struct MethodResult {
    pub method: Method,
    pub energy: f64,
    pub assignment: SpinAssignment,
    /// Reads consumed by the pipeline that produced this result. `qa` and
    /// `mqc` share one batch; the greedy solver spends its budget per stage.
    pub total_reads: u64,
}

/// Run each requested method on the same problem with matched read budgets.
///
/// `qa` and `mqc` are evaluated over one shared sample batch, so `mqc`
/// can never lose to `qa` here.
pub fn solve_compare(
    h: &IsingHamiltonian,
    methods: &[Method],
    cfg: &CompareConfig,
) -> Result<Vec<MethodResult>, QagaError> {
    cfg.qaga_config().validate()?;
    let shared = if methods.iter().any(|m| matches!(m, Method::Qa | Method::Mqc)) {
        Some(
            sample(h, &cfg.sampler, &cfg.backend)
                .map_err(|source| QagaError::Sampler { stage: 1, source })?,
        )
    } else {
        None
    };

    let mut out = Vec::with_capacity(methods.len());
    for &method in methods {
        let result = match method {
            Method::Qa => {
                let set = shared.as_ref().expect("shared batch prepared");
                let (best, energy) = set.best().expect("reads >= 1");
                MethodResult {
                    method,
                    energy,
                    assignment: best.clone(),
                    total_reads: cfg.sampler.reads as u64,
                }
            }
            Method::Mqc => {
                let set = shared.as_ref().expect("shared batch prepared");
                let assignment = mqc(h, set)?;
                MethodResult {
                    method,
                    energy: h.energy(&assignment)?,
                    assignment,
                    total_reads: cfg.sampler.reads as u64,
                }
            }
            Method::Qaga => {
                let (assignment, trace) = qaga_run(h, &cfg.qaga_config())?;
                MethodResult {
                    method,
                    energy: trace.final_energy,
                    assignment,
                    total_reads: trace.total_reads,
                }
            }
        };
        out.push(result);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ising::IsingHamiltonian;
    use crate::sampler::exact_ground_state;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use std::collections::VecDeque;
    use std::sync::Mutex;

    fn random_h(rng: &mut ChaCha8Rng, n: usize, edge_prob: f64) -> IsingHamiltonian {
        let mut h = IsingHamiltonian::new(0..n);
        for i in 0..n {
            h.set_field(i, rng.random_range(-2.0..2.0)).unwrap();
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.random::<f64>() < edge_prob {
                    h.add_coupler(i, j, rng.random_range(-2.0..2.0)).unwrap();
                }
            }
        }
        h
    }

    fn set_from(h: &IsingHamiltonian, rows: &[&[i8]]) -> SampleSet {
        let vars: Vec<usize> = h.vars().collect();
        let samples = rows
            .iter()
            .map(|row| {
                SpinAssignment::from_pairs(vars.iter().copied().zip(row.iter().copied())).unwrap()
            })
            .collect();
        SampleSet::new(h, samples).unwrap()
    }

    /// Replays pre-scripted batches, restricted to whatever variables are
    /// still active when it is asked to sample.
    struct ScriptedSampler {
        batches: Mutex<VecDeque<Vec<SpinAssignment>>>,
    }

    impl ScriptedSampler {
        fn new(batches: Vec<Vec<SpinAssignment>>) -> Self {
            Self {
                batches: Mutex::new(batches.into()),
            }
        }
    }

    impl Sampler for ScriptedSampler {
        fn sample(
            &self,
            h: &IsingHamiltonian,
            _cfg: &SamplerConfig,
        ) -> Result<SampleSet, SamplerError> {
            let batch = self
                .batches
                .lock()
                .unwrap()
                .pop_front()
                .expect("script exhausted");
            let restricted: Vec<SpinAssignment> =
                batch.iter().map(|z| z.restrict(h.vars())).collect();
            SampleSet::new(h, restricted)
        }
    }

    #[test]
    fn uncertainty_formula() {
        let h = IsingHamiltonian::new(0..1);
        let unanimous = set_from(&h, &[&[1], &[1], &[1], &[1]]);
        assert_eq!(uncertainty(&unanimous, 0).unwrap(), 0.0);

        let split = set_from(&h, &[&[1], &[1], &[-1], &[-1]]);
        assert_eq!(uncertainty(&split, 0).unwrap(), 1.0);

        let three_one = set_from(&h, &[&[1], &[1], &[1], &[-1]]);
        assert_eq!(uncertainty(&three_one, 0).unwrap(), 0.5);

        assert!(matches!(
            uncertainty(&unanimous, 9),
            Err(QagaError::UnknownVariable { index: 9 })
        ));
    }

    #[test]
    fn majority_sign_cases() {
        let h = IsingHamiltonian::new(0..1);
        let three_one = set_from(&h, &[&[1], &[1], &[1], &[-1]]);
        assert_eq!(majority_sign(&three_one, 0).unwrap(), 1);

        let all_down = set_from(&h, &[&[-1], &[-1]]);
        assert_eq!(majority_sign(&all_down, 0).unwrap(), -1);

        let single = set_from(&h, &[&[1]]);
        assert_eq!(majority_sign(&single, 0).unwrap(), 1);

        let balanced = set_from(&h, &[&[1], &[-1]]);
        assert!(matches!(
            majority_sign(&balanced, 0),
            Err(QagaError::ZeroMagnetization { index: 0 })
        ));
    }

    #[test]
    fn theta_is_validated() {
        let h = IsingHamiltonian::from_coefficients(1, [(0, -2.0)], []).unwrap();
        for bad in [-0.1, 0.5, 0.7, f64::NAN] {
            let cfg = QagaConfig {
                theta: bad,
                ..QagaConfig::default()
            };
            assert!(matches!(qaga_run(&h, &cfg), Err(QagaError::InvalidTheta(_))));
        }
    }

    #[test]
    fn empty_problem_is_rejected() {
        let cfg = QagaConfig::default();
        assert!(matches!(
            qaga_run(&IsingHamiltonian::empty(), &cfg),
            Err(QagaError::EmptyProblem)
        ));
    }

    #[test]
    fn exact_backend_fixes_everything_in_one_stage() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0913);
        let mut checked = 0;
        for _ in 0..40 {
            let n = rng.random_range(2..=10);
            let h = random_h(&mut rng, n, 0.6);
            let (_, ground) = exact_ground_state(&h).unwrap();
            let cfg = QagaConfig {
                backend: Backend::Exact,
                sampler: SamplerConfig {
                    reads: 50,
                    ..SamplerConfig::default()
                },
                ..QagaConfig::default()
            };
            let (z, trace) = qaga_run(&h, &cfg).unwrap();
            // Unanimous samples make every uncertainty zero, so one batch
            // fixes the whole problem.
            assert_eq!(trace.total_stages(), 1);
            assert!(!trace.fallback_used);
            assert_eq!(trace.stages[0].fixed.len(), n);
            assert_eq!(z.len(), n);
            assert_eq!(trace.final_energy, ground);
            checked += 1;
        }
        assert_eq!(checked, 40);
    }

    #[test]
    fn single_variable_problem_with_sa() {
        let h = IsingHamiltonian::from_coefficients(1, [(0, -2.0)], []).unwrap();
        let cfg = QagaConfig {
            sampler: SamplerConfig {
                reads: 50,
                seed: 3,
                ..SamplerConfig::default()
            },
            ..QagaConfig::default()
        };
        let (z, trace) = qaga_run(&h, &cfg).unwrap();
        assert_eq!(z.get(0), Some(1));
        assert_eq!(trace.final_energy, -2.0);
    }

    #[test]
    fn flat_landscape_falls_back_to_mqc() {
        // All-zero coefficients: with 200 reads no variable is unanimous, the
        // first stage fixes nothing, and mqc completes the assignment.
        let h = IsingHamiltonian::new(0..6);
        let cfg = QagaConfig {
            sampler: SamplerConfig {
                reads: 200,
                seed: 11,
                ..SamplerConfig::default()
            },
            ..QagaConfig::default()
        };
        let (z, trace) = qaga_run(&h, &cfg).unwrap();
        assert_eq!(trace.total_stages(), 1);
        assert!(trace.fallback_used);
        assert!(trace.stages[0].fixed.is_empty());
        assert_eq!(z.len(), 6);
        assert_eq!(trace.final_energy, 0.0);
    }

    #[test]
    fn scripted_stage_fixes_follow_the_majority() {
        // Couple all three variables so nothing is trivially isolated.
        let h = IsingHamiltonian::from_coefficients(
            3,
            [],
            [(0, 1, 0.1), (1, 2, 0.1), (0, 2, 0.1)],
        )
        .unwrap();
        // Stage 1, 10 reads: var0 is 8:2 up (u = 0.4), var1 splits 5:5
        // (u = 1), var2 is unanimously down (u = 0).
        let mut stage1 = Vec::new();
        for k in 0..10 {
            let v0 = if k < 8 { 1 } else { -1 };
            let v1 = if k % 2 == 0 { 1 } else { -1 };
            stage1.push(SpinAssignment::from_pairs([(0, v0), (1, v1), (2, -1)]).unwrap());
        }
        // Stage 2 over the remaining var1: unanimous down.
        let stage2: Vec<SpinAssignment> = (0..10)
            .map(|_| SpinAssignment::from_pairs([(0, 1), (1, -1), (2, -1)]).unwrap())
            .collect();
        let scripted = ScriptedSampler::new(vec![stage1, stage2]);
        let cfg = QagaConfig {
            theta: 0.4,
            sampler: SamplerConfig {
                reads: 10,
                ..SamplerConfig::default()
            },
            ..QagaConfig::default()
        };
        let (z, trace) = qaga_run_with(&h, &cfg, &scripted).unwrap();
        assert_eq!(trace.total_stages(), 2);
        assert_eq!(trace.stages[0].fixed, vec![(0, 1), (2, -1)]);
        assert_eq!(trace.stages[0].sampled_vars, 3);
        assert_eq!(trace.stages[0].remaining, 1);
        assert_eq!(trace.stages[1].fixed, vec![(1, -1)]);
        assert!(!trace.fallback_used);
        assert_eq!(z.get(0), Some(1));
        assert_eq!(z.get(1), Some(-1));
        assert_eq!(z.get(2), Some(-1));
    }

    #[test]
    fn stage_cap_triggers_fallback() {
        let h = IsingHamiltonian::from_coefficients(
            3,
            [(0, -1.0), (1, -1.0), (2, -1.0)],
            [(0, 1, 0.5), (1, 2, 0.5)],
        )
        .unwrap();
        // Every stage pins exactly var "stage index" by unanimity while the
        // others stay split; the cap stops after one stage.
        let mut stage1 = Vec::new();
        for k in 0..10 {
            let split = if k % 2 == 0 { 1 } else { -1 };
            stage1.push(SpinAssignment::from_pairs([(0, 1), (1, split), (2, -split)]).unwrap());
        }
        let scripted = ScriptedSampler::new(vec![stage1]);
        let cfg = QagaConfig {
            theta: 0.0,
            max_stages: Some(1),
            sampler: SamplerConfig {
                reads: 10,
                ..SamplerConfig::default()
            },
            ..QagaConfig::default()
        };
        let (z, trace) = qaga_run_with(&h, &cfg, &scripted).unwrap();
        assert_eq!(trace.total_stages(), 1);
        assert!(trace.fallback_used);
        assert_eq!(trace.stages[0].fixed, vec![(0, 1)]);
        // Complete assignment over the root variables.
        assert_eq!(z.len(), 3);
        // Trace bookkeeping: stage fixes plus fallback cover every variable.
        let fixed_in_stages: usize = trace.stages.iter().map(|s| s.fixed.len()).sum();
        assert_eq!(fixed_in_stages + 2, 3);
    }

    #[test]
    fn trace_export_format() {
        let trace = QagaTrace {
            stages: vec![StageRecord {
                stage: 1,
                sampled_vars: 2,
                fixed: vec![(0, 1), (1, -1)],
                best_energy: -2.5,
                remaining: 0,
            }],
            fallback_used: false,
            final_energy: -2.5,
            total_reads: 100,
        };
        let table = trace.to_table_string();
        assert_eq!(
            table,
            "stage,vars_fixed,remaining,best_energy\n1,2,0,-2.5\n\ntotal_stages,fallback_used,final_energy\n1,false,-2.5\n"
        );
    }

    #[test]
    fn compare_mqc_never_loses_to_qa() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xCAFE);
        for seed in 0..15u64 {
            let h = random_h(&mut rng, 10, 0.5);
            let cfg = CompareConfig {
                sampler: SamplerConfig {
                    reads: 40,
                    seed,
                    num_gauges: 4,
                    ..SamplerConfig::default()
                },
                ..CompareConfig::default()
            };
            let results = solve_compare(&h, &[Method::Qa, Method::Mqc], &cfg).unwrap();
            assert_eq!(results.len(), 2);
            let qa = &results[0];
            let mqc_r = &results[1];
            assert_eq!(qa.method, Method::Qa);
            assert!(mqc_r.energy <= qa.energy);
        }
    }

    #[test]
    fn compare_single_method_and_sanity_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xB0B);
        let h = random_h(&mut rng, 12, 0.6);
        let (_, ground) = exact_ground_state(&h).unwrap();
        let cfg = CompareConfig {
            sampler: SamplerConfig {
                reads: 60,
                seed: 5,
                num_gauges: 10,
                ..SamplerConfig::default()
            },
            ..CompareConfig::default()
        };

        let single = solve_compare(&h, &[Method::Qaga], &cfg).unwrap();
        assert_eq!(single.len(), 1);

        let all = solve_compare(&h, &[Method::Qa, Method::Mqc, Method::Qaga], &cfg).unwrap();
        for r in &all {
            assert!(
                r.energy >= ground - 1e-9,
                "{} reported {} below ground {}",
                r.method,
                r.energy,
                ground
            );
            assert_eq!(h.energy(&r.assignment).unwrap(), r.energy);
        }
    }

    #[test]
    fn method_parsing() {
        assert_eq!("qa".parse::<Method>().unwrap(), Method::Qa);
        assert_eq!("mqc".parse::<Method>().unwrap(), Method::Mqc);
        assert_eq!("qaga".parse::<Method>().unwrap(), Method::Qaga);
        assert!("annealer".parse::<Method>().is_err());
    }
}
