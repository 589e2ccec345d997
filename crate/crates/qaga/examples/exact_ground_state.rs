//! Enumerate the exact ground state of a random instance and print the
//! low end of the spectrum.
//!
//! ```bash
//! cargo run -p qaga --example exact_ground_state
//! ```

use qaga::bench::{gen_random, Dist, ProblemSpec};
use qaga::ising::SpinAssignment;
use qaga::sampler::exact_ground_state;

fn main() {
    let spec = ProblemSpec {
        n_vars: 10,
        sparsity: 0.5,
        dist: Dist::Normal,
        seed: 42,
        zero_fields: false,
    };
    let h = gen_random(&spec).unwrap();
    println!(
        "instance: n={} couplers={} (seed {})",
        h.num_vars(),
        h.num_couplers(),
        spec.seed
    );

    let (ground, energy) = exact_ground_state(&h).unwrap();
    let spins: String = ground.iter().map(|(_, v)| if v > 0 { '+' } else { '-' }).collect();
    println!("ground state: {spins}  energy {energy:.6}");

    // Rank all 2^10 states to show the spectrum floor.
    let n = h.num_vars();
    let mut energies: Vec<f64> = (0u32..1 << n)
        .map(|mask| {
            let z = SpinAssignment::from_pairs(
                (0..n).map(|i| (i, if mask >> i & 1 == 1 { 1 } else { -1 })),
            )
            .unwrap();
            h.energy(&z).unwrap()
        })
        .collect();
    energies.sort_by(f64::total_cmp);
    println!("five lowest energies:");
    for e in &energies[..5] {
        println!("  {e:.6}");
    }
    assert_eq!(energies[0], energy);
}
