//! Build a small Ising Hamiltonian, evaluate energies, and contract a
//! variable — showing that contraction preserves energies through the
//! accumulated offset.
//!
//! ```bash
//! cargo run -p qaga --example energy_basics
//! ```

use qaga::ising::{IsingHamiltonian, SpinAssignment};

fn main() {
    // E(z) = 1·z0 − 1·z1 + 2·z0·z1
    let h = IsingHamiltonian::from_coefficients(2, [(0, 1.0), (1, -1.0)], [(0, 1, 2.0)]).unwrap();
    println!("hamiltonian: {} variables, {} couplers", h.num_vars(), h.num_couplers());

    for (s0, s1) in [(1i8, 1i8), (1, -1), (-1, 1), (-1, -1)] {
        let z = SpinAssignment::from_pairs([(0, s0), (1, s1)]).unwrap();
        println!("  E({s0:+}, {s1:+}) = {:+.1}", h.energy(&z).unwrap());
    }

    // Fix z0 = −1: h1 and the offset absorb the fixed terms.
    let contracted = h.contract(0, -1).unwrap();
    println!(
        "\nafter fixing z0 = -1: h1 = {}, offset = {}",
        contracted.field(1),
        contracted.offset()
    );

    // Energies line up exactly with the full evaluation.
    for s1 in [1i8, -1] {
        let z_rest = SpinAssignment::from_pairs([(1, s1)]).unwrap();
        let z_full = SpinAssignment::from_pairs([(0, -1), (1, s1)]).unwrap();
        println!(
            "  E_contracted({s1:+}) = {:+.1}   E_full(-1, {s1:+}) = {:+.1}",
            contracted.energy(&z_rest).unwrap(),
            h.energy(&z_full).unwrap()
        );
    }
}
