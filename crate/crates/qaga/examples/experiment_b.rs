//! A scaled-down threshold sweep: how many stages does the greedy solver
//! take to converge as the uncertainty threshold and sparsity vary?
//! Writes the report files to `target/example-reports/experiment-b`.
//!
//! ```bash
//! cargo run -p qaga --example experiment_b
//! ```

use qaga::bench::{run_experiment_b, write_experiment_b, Dist, ExperimentBConfig};
use qaga::sampler::{Backend, SamplerConfig};

fn main() {
    let cfg = ExperimentBConfig {
        thetas: vec![0.25, 0.15, 0.05, 0.0],
        sparsities: vec![0.05, 0.5, 1.0],
        n_vars: 20,
        batch: 10,
        dist: Dist::Normal,
        base_seed: 2,
        backend: Backend::Sa,
        sampler: SamplerConfig {
            reads: 200,
            ..SamplerConfig::default()
        },
        max_stages: None,
        zero_fields: false,
    };

    let report = run_experiment_b(&cfg).unwrap();

    // Arrange cells as a theta x sparsity table of average stage counts.
    println!("avg stages      sparsity ->");
    print!("theta      ");
    for s in &cfg.sparsities {
        print!("{s:>8}");
    }
    println!();
    for (row, &theta) in cfg.thetas.iter().enumerate() {
        print!("{theta:<10} ");
        for col in 0..cfg.sparsities.len() {
            let cell = &report.cells[row * cfg.sparsities.len() + col];
            print!("{:>8.2}", cell.avg_stages);
        }
        println!();
    }

    let dir = std::path::Path::new("target/example-reports/experiment-b");
    write_experiment_b(&report, dir).unwrap();
    println!("\nreport files in {}", dir.display());
}
