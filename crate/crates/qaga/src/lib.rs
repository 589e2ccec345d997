//! Quantum-annealing-style greedy search for Ising ground states.
//!
//! The solver treats a sampler as an oracle: draw a batch of low-energy
//! spin configurations, measure how certain each spin is across the batch,
//! permanently fix the certain ones, fold them out of the Hamiltonian, and
//! repeat on the smaller problem. Spins the loop never becomes certain
//! about are assigned by multi-qubit correction over the last batch. Since
//! the algorithm only consumes sample sets, the annealer slot is pluggable:
//! this crate ships a Metropolis simulated-annealing backend and an exact
//! enumeration backend (useful as a test oracle), plus the classical
//! baselines (best-of-batch with spin-reversal transforms, single-qubit
//! correction, multi-qubit correction) and benchmark harnesses.
//!
//! ## Modules
//!
//! - [`ising`] — sparse Hamiltonians, energy evaluation, validation,
//!   variable contraction, and the problem file format.
//! - [`sampler`] — the sampler contract, sample sets, simulated annealing,
//!   exact enumeration, and spin-reversal transforms.
//! - [`postprocess`] — single-qubit correction (greedy 1-flip descent) and
//!   multi-qubit correction (disagreement-component tournament).
//! - [`solver`] — the staged greedy loop, per-spin uncertainty, and the
//!   method comparison runner.
//! - [`bench`] — random instance generation, the win/tie/loss comparison
//!   experiment, the threshold-sweep experiment, and report files.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p qaga --example energy_basics          # energies + contraction
//! cargo run -p qaga --example exact_ground_state     # exhaustive enumeration
//! cargo run -p qaga --example problem_files          # file formats, round trips
//! cargo run -p qaga --example simulated_annealing    # the SA backend
//! cargo run -p qaga --example gauge_transforms       # spin-reversal transforms
//! cargo run -p qaga --example sample_postprocessing  # sqc and mqc
//! cargo run -p qaga --example qaga_walkthrough       # the greedy loop, traced
//! cargo run -p qaga --example method_comparison      # qa vs mqc vs qaga
//! cargo run -p qaga --example experiment_a           # win/tie/loss harness
//! cargo run -p qaga --example experiment_b           # threshold sweep harness
//! ```
//!
//! There is also a thin `qaga` binary wrapping generation, solving, exact
//! enumeration, and both experiments behind subcommands.
//!
//! ## Determinism
//!
//! Everything downstream of a seed is reproducible: per-read and per-gauge
//! randomness comes from counter-based ChaCha substreams, and parallel
//! batches are assembled in index order, so results are bit-identical for
//! any worker count (`RAYON_NUM_THREADS` only changes wall time).
//!
//! ```
//! use qaga::bench::{gen_random, Dist, ProblemSpec};
//! use qaga::sampler::{Backend, SamplerConfig};
//! use qaga::solver::{qaga_run, QagaConfig};
//!
//! let h = gen_random(&ProblemSpec {
//!     n_vars: 12,
//!     sparsity: 1.0,
//!     dist: Dist::Normal,
//!     seed: 1,
//!     zero_fields: false,
//! })
//! .unwrap();
//! let cfg = QagaConfig {
//!     theta: 0.0,
//!     backend: Backend::Sa,
//!     sampler: SamplerConfig { reads: 100, seed: 2, ..SamplerConfig::default() },
//!     max_stages: None,
//! };
//! let (assignment, trace) = qaga_run(&h, &cfg).unwrap();
//! assert_eq!(assignment.len(), 12);
//! assert_eq!(h.energy(&assignment).unwrap(), trace.final_energy);
//! ```

pub mod bench;
pub mod ising;
pub mod postprocess;
pub mod sampler;
pub mod solver;

pub use ising::{IsingError, IsingHamiltonian, PartialAssignment, SpinAssignment};
pub use postprocess::PostprocessError;
pub use sampler::{Backend, Sampler, SamplerConfig, SamplerError, SampleSet};
pub use solver::{Method, QagaConfig, QagaError, QagaTrace};
