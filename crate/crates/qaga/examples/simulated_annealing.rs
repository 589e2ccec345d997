//! Draw simulated-annealing samples from a random instance and compare the
//! sample energy distribution with the enumerated ground state.
//!
//! ```bash
//! cargo run -p qaga --example simulated_annealing
//! ```

use qaga::bench::{gen_random, Dist, ProblemSpec};
use qaga::sampler::{exact_ground_state, sa_sample, SamplerConfig};

fn main() {
    let spec = ProblemSpec {
        n_vars: 16,
        sparsity: 0.6,
        dist: Dist::Normal,
        seed: 3,
        zero_fields: false,
    };
    let h = gen_random(&spec).unwrap();
    let (_, ground) = exact_ground_state(&h).unwrap();
    println!("instance: n={} couplers={}", h.num_vars(), h.num_couplers());
    println!("enumerated ground energy: {ground:.6}\n");

    for reads in [10, 100, 1000] {
        let cfg = SamplerConfig {
            reads,
            seed: 7,
            ..SamplerConfig::default()
        };
        let set = sa_sample(&h, &cfg).unwrap();
        let best = set.best().unwrap().1;
        let hits = set
            .energies()
            .iter()
            .filter(|&&e| (e - ground).abs() <= 1e-9)
            .count();
        let mean = set.energies().iter().sum::<f64>() / set.len() as f64;
        println!(
            "reads={reads:5}: best {best:9.6}  mean {mean:9.6}  ground hits {hits}/{}",
            set.len()
        );
    }

    println!("\n(sweeps default to 10x the problem size; tune via SamplerConfig.sweeps)");
}
