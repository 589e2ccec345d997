//! A scaled-down run of the comparison experiment: per (distribution,
//! sparsity) cell, solve a batch of random instances with two methods and
//! count wins, ties, and losses on best energies. Writes the report files
//! to `target/example-reports/experiment-a`.
//!
//! ```bash
//! cargo run -p qaga --example experiment_a
//! ```

use qaga::bench::{
    run_experiment_a, write_experiment_a, Dist, ExperimentAConfig,
};
use qaga::sampler::SamplerConfig;
use qaga::solver::{CompareConfig, Method};

fn main() {
    let cfg = ExperimentAConfig {
        method_a: Method::Qaga,
        method_b: Method::Qa,
        dists: vec![Dist::Binary, Dist::Normal],
        sparsities: vec![0.25, 1.0],
        n_vars: 20,
        batch: 10,
        base_seed: 1,
        compare: CompareConfig {
            sampler: SamplerConfig {
                reads: 200,
                num_gauges: 10,
                ..SamplerConfig::default()
            },
            ..CompareConfig::default()
        },
        tie_tolerance: 1e-9,
        zero_fields: false,
    };

    let report = run_experiment_a(&cfg).unwrap();
    println!("cell                    | qaga wins | ties | qa wins");
    for cell in &report.cells {
        println!(
            "dist={:7} s={:4}      | {:9} | {:4} | {:7}",
            cell.dist.to_string(),
            cell.sparsity,
            cell.wins_a,
            cell.ties,
            cell.wins_b
        );
    }

    let dir = std::path::Path::new("target/example-reports/experiment-a");
    write_experiment_a(&report, dir).unwrap();
    println!("\nreport files (config.json, problems.csv, summary.csv) in {}", dir.display());
}
