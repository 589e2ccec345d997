//! Exhaustive ground-state enumeration and the idealized sampler built on it.

use crate::ising::{IsingHamiltonian, SpinAssignment};

use super::{check_sample_pre, Sampler, SamplerConfig, SamplerError, SampleSet};

/// Enumeration guard: `exact_ground_state` refuses larger problems.
pub const MAX_EXACT_VARS: usize = 24;

/// Global minimum of the Ising energy by exhaustive enumeration.
///
/// Ties are broken toward the lexicographically smallest assignment under
/// `−1 < +1`, scanning variables in ascending index order. The reported
/// minimum is re-evaluated through [`IsingHamiltonian::energy`] so it is
/// bit-identical to the energy any caller would compute for the returned
/// assignment.
pub fn exact_ground_state(
    h: &IsingHamiltonian,
) -> Result<(SpinAssignment, f64), SamplerError> {
    let n = h.num_vars();
    if n > MAX_EXACT_VARS {
        return Err(SamplerError::CapacityExceeded {
            vars: n,
            max: MAX_EXACT_VARS,
        });
    }
    if n == 0 {
        return Ok((SpinAssignment::empty(), h.offset()));
    }

    let adj = h.adjacency();
    // Per position, the couplers to earlier positions only; the DFS then
    // accounts for every pair exactly once.
    let back_edges: Vec<Vec<(usize, f64)>> = (0..n)
        .map(|p| {
            adj.neighbors_of(p)
                .iter()
                .copied()
                .filter(|&(q, _)| q < p)
                .collect()
        })
        .collect();

    let mut spins = vec![0i8; n];
    let mut best_energy = f64::INFINITY;
    let mut best_spins = vec![0i8; n];

    // Depth-first in lexicographic order (−1 explored before +1, position 0
    // most significant); with strict improvement the first minimum kept is
    // the lexicographically smallest one.
    fn descend(
        adj: &crate::ising::Adjacency,
        back_edges: &[Vec<(usize, f64)>],
        spins: &mut [i8],
        pos: usize,
        partial: f64,
        best_energy: &mut f64,
        best_spins: &mut [i8],
    ) {
        if pos == spins.len() {
            if partial < *best_energy {
                *best_energy = partial;
                best_spins.copy_from_slice(spins);
            }
            return;
        }
        for s in [-1i8, 1] {
            spins[pos] = s;
            let mut local = adj.field_at(pos);
            for &(q, j) in &back_edges[pos] {
                local += j * f64::from(spins[q]);
            }
            descend(
                adj,
                back_edges,
                spins,
                pos + 1,
                partial + f64::from(s) * local,
                best_energy,
                best_spins,
            );
        }
    }

    descend(
        &adj,
        &back_edges,
        &mut spins,
        0,
        adj.offset(),
        &mut best_energy,
        &mut best_spins,
    );

    let assignment = adj.assignment_of(&best_spins);
    let energy = h.energy(&assignment)?;
    Ok((assignment, energy))
}

/// Idealized annealer: every read returns the enumerated ground state.
///
/// Subject to the [`MAX_EXACT_VARS`] guard; useful as an oracle for the
/// greedy solver (unanimous samples make every uncertainty zero).
pub struct ExactSampler;

impl Sampler for ExactSampler {
    fn sample(&self, h: &IsingHamiltonian, cfg: &SamplerConfig) -> Result<SampleSet, SamplerError> {
        check_sample_pre(h, cfg)?;
        let (ground, _) = exact_ground_state(h)?;
        let samples = vec![ground; cfg.reads];
        SampleSet::new(h, samples)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ising::IsingHamiltonian;

    #[test]
    fn single_field_prefers_opposing_spin() {
        let h = IsingHamiltonian::from_coefficients(1, [(0, 3.0)], []).unwrap();
        let (z, e) = exact_ground_state(&h).unwrap();
        assert_eq!(z.get(0), Some(-1));
        assert_eq!(e, -3.0);
    }

    #[test]
    fn ferromagnetic_pair_tie_breaks_lexicographically() {
        // Both aligned states reach −1; the all-down one is lex-smaller.
        let h = IsingHamiltonian::from_coefficients(2, [], [(0, 1, -1.0)]).unwrap();
        let (z, e) = exact_ground_state(&h).unwrap();
        assert_eq!(z.get(0), Some(-1));
        assert_eq!(z.get(1), Some(-1));
        assert_eq!(e, -1.0);
    }

    #[test]
    fn empty_hamiltonian_reports_offset() {
        let mut h = IsingHamiltonian::empty();
        h.set_offset(4.0);
        let (z, e) = exact_ground_state(&h).unwrap();
        assert!(z.is_empty());
        assert_eq!(e, 4.0);
    }

    #[test]
    fn capacity_guard_refuses_large_problems() {
        let h = IsingHamiltonian::new(0..25);
        assert!(matches!(
            exact_ground_state(&h),
            Err(SamplerError::CapacityExceeded { vars: 25, max: 24 })
        ));
    }

    #[test]
    fn matches_brute_force_over_assignment_list() {
        // Independent check: enumerate via bitmasks and plain energy().
        use crate::ising::SpinAssignment;
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;

        let mut rng = ChaCha8Rng::seed_from_u64(0xE);
        for _ in 0..40 {
            let n = rng.random_range(1..=6);
            let mut h = IsingHamiltonian::new(0..n);
            for i in 0..n {
                h.set_field(i, rng.random_range(-2.0..2.0)).unwrap();
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.random::<bool>() {
                        h.add_coupler(i, j, rng.random_range(-2.0..2.0)).unwrap();
                    }
                }
            }
            let mut best = f64::INFINITY;
            for mask in 0u32..(1 << n) {
                let z = SpinAssignment::from_pairs(
                    (0..n).map(|i| (i, if mask >> i & 1 == 1 { 1 } else { -1 })),
                )
                .unwrap();
                best = best.min(h.energy(&z).unwrap());
            }
            let (_, e) = exact_ground_state(&h).unwrap();
            assert!((e - best).abs() < 1e-12);
        }
    }

    #[test]
    fn exact_sampler_replicates_ground_state() {
        let h = IsingHamiltonian::from_coefficients(1, [(0, -2.0)], []).unwrap();
        let cfg = SamplerConfig {
            reads: 3,
            ..SamplerConfig::default()
        };
        let set = ExactSampler.sample(&h, &cfg).unwrap();
        assert_eq!(set.len(), 3);
        let (ground, e) = exact_ground_state(&h).unwrap();
        for (z, &se) in set.samples().iter().zip(set.energies()) {
            assert_eq!(z, &ground);
            assert_eq!(se, e);
            assert_eq!(z.get(0), Some(1));
        }
    }
}
