//! The on-disk problem format and the sample/trace table exports.
//!
//! ```bash
//! cargo run -p qaga --example problem_files
//! ```

use qaga::bench::{gen_random, Dist, ProblemSpec};
use qaga::ising::{from_problem_string, to_problem_string};
use qaga::sampler::{sa_sample, SamplerConfig};

fn main() {
    let spec = ProblemSpec {
        n_vars: 4,
        sparsity: 0.8,
        dist: Dist::Binary,
        seed: 13,
        zero_fields: false,
    };
    let h = gen_random(&spec).unwrap();

    let text = to_problem_string(&h).unwrap();
    println!("problem document:\n{text}");

    let parsed = from_problem_string(&text).unwrap();
    assert_eq!(parsed, h);
    assert_eq!(to_problem_string(&parsed).unwrap(), text);
    println!("round trip: parse(serialize(h)) == h, byte-stable\n");

    let set = sa_sample(
        &h,
        &SamplerConfig {
            reads: 5,
            seed: 1,
            ..SamplerConfig::default()
        },
    )
    .unwrap();
    println!("sample table (one row per read):\n{}", set.to_table_string());
}
