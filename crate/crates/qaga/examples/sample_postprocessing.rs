//! Improve raw samples classically: single-flip descent (sqc) and the
//! multi-qubit correction tournament (mqc).
//!
//! ```bash
//! cargo run -p qaga --example sample_postprocessing
//! ```

use qaga::bench::{gen_random, Dist, ProblemSpec};
use qaga::ising::SpinAssignment;
use qaga::postprocess::{disagreement_components, mqc, sqc};
use qaga::sampler::{exact_ground_state, sa_sample, SamplerConfig};

fn main() {
    let spec = ProblemSpec {
        n_vars: 18,
        sparsity: 0.6,
        dist: Dist::Normal,
        seed: 21,
        zero_fields: false,
    };
    let h = gen_random(&spec).unwrap();
    let (_, ground) = exact_ground_state(&h).unwrap();

    // A deliberately weak batch: few reads, hardly any sweeps.
    let cfg = SamplerConfig {
        reads: 30,
        seed: 2,
        sweeps: Some(6),
        ..SamplerConfig::default()
    };
    let set = sa_sample(&h, &cfg).unwrap();
    println!("ground energy           : {ground:.6}");

    // sqc: greedy single-flip descent from an arbitrary starting point.
    let start = SpinAssignment::from_pairs(h.vars().map(|i| (i, if i % 2 == 0 { 1 } else { -1 })))
        .unwrap();
    let polished = sqc(&h, &start).unwrap();
    println!(
        "sqc descent             : {:.6} -> {:.6}",
        h.energy(&start).unwrap(),
        h.energy(&polished).unwrap()
    );

    println!("best raw sample         : {:.6}", set.best().unwrap().1);

    // mqc: fold the whole batch, resolving disagreement regions toward the
    // cheaper parent, then a final sqc pass. Never worse than the best sample.
    let combined = mqc(&h, &set).unwrap();
    println!("mqc over the batch      : {:.6}", h.energy(&combined).unwrap());

    // Peek at the disagreement structure between the two best distinct samples.
    let mut order: Vec<usize> = (0..set.len()).collect();
    order.sort_by(|&a, &b| set.energies()[a].total_cmp(&set.energies()[b]));
    let za = &set.samples()[order[0]];
    let zb = order
        .iter()
        .map(|&j| &set.samples()[j])
        .find(|z| *z != za)
        .expect("batch has distinct samples");
    let comps = disagreement_components(&h, za, zb).unwrap();
    println!(
        "\ntwo best samples disagree on {} variables in {} connected components:",
        comps.iter().map(|c| c.len()).sum::<usize>(),
        comps.len()
    );
    for c in &comps {
        println!("  component {:?}", c.vars());
    }
}
