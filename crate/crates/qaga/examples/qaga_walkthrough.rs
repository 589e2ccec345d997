//! One full run of the quantum-assisted greedy algorithm with a stage-by-
//! stage trace: sample, estimate per-spin uncertainty, fix the certain
//! spins, contract, repeat.
//!
//! ```bash
//! cargo run -p qaga --example qaga_walkthrough
//! ```

use qaga::bench::{gen_random, Dist, ProblemSpec};
use qaga::sampler::{exact_ground_state, Backend, SamplerConfig};
use qaga::solver::{qaga_run, QagaConfig};

fn main() {
    let spec = ProblemSpec {
        n_vars: 20,
        sparsity: 0.15,
        dist: Dist::Normal,
        seed: 8,
        zero_fields: false,
    };
    let h = gen_random(&spec).unwrap();
    let (_, ground) = exact_ground_state(&h).unwrap();
    println!(
        "instance: n={} couplers={}  (enumerated ground: {ground:.6})\n",
        h.num_vars(),
        h.num_couplers()
    );

    let cfg = QagaConfig {
        theta: 0.05,
        backend: Backend::Sa,
        sampler: SamplerConfig {
            reads: 200,
            seed: 4,
            ..SamplerConfig::default()
        },
        max_stages: None,
    };
    let (assignment, trace) = qaga_run(&h, &cfg).unwrap();

    println!("stage | sampled | fixed | remaining | best sampled energy");
    for s in &trace.stages {
        println!(
            "{:5} | {:7} | {:5} | {:9} | {:.6}",
            s.stage,
            s.sampled_vars,
            s.fixed.len(),
            s.remaining,
            s.best_energy
        );
    }
    println!(
        "\nstages: {}   mqc fallback: {}   total reads: {}",
        trace.total_stages(),
        trace.fallback_used,
        trace.total_reads
    );
    println!("final energy: {:.6}  (gap to ground: {:.2e})",
        trace.final_energy,
        trace.final_energy - ground
    );
    let spins: String = assignment
        .iter()
        .map(|(_, v)| if v > 0 { '+' } else { '-' })
        .collect();
    println!("assignment: {spins}");

    println!("\ntrace table:\n{}", trace.to_table_string());
}
