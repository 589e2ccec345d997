//! Classical sample-improvement passes.
//!
//! `sqc` (single-qubit correction) is deterministic single-flip descent to a
//! 1-flip local minimum. `mqc` (multi-qubit correction) combines a batch of
//! samples pairwise: where two samples disagree, the disagreeing variables
//! split into connected components of the coupler graph, and each component
//! adopts whichever parent's spins contribute less energy. Both never
//! worsen the best sample they are given; `mqc` is used both as a baseline
//! in its own right and as the greedy solver's fallback for variables it
//! could not fix.

use thiserror::Error;

use crate::ising::{Adjacency, IsingError, IsingHamiltonian, SpinAssignment};
use crate::sampler::SampleSet;

#[derive(Debug, Error)]
pub enum PostprocessError {
    #[error("mqc requires at least one sample")]
    EmptySampleSet,
    #[error(transparent)]
    Ising(#[from] IsingError),
}

fn positions_checked(
    adj: &Adjacency,
    h: &IsingHamiltonian,
    z: &SpinAssignment,
) -> Result<Vec<i8>, IsingError> {
    if z.len() != adj.n() {
        let missing: Vec<usize> = h.vars().filter(|&i| !z.contains(i)).collect();
        let extra: Vec<usize> = z.vars().filter(|&i| !h.is_active(i)).collect();
        return Err(IsingError::DomainMismatch { missing, extra });
    }
    adj.positions_of(z)
}

/// Greedy single-flip descent: sweep variables in ascending index order,
/// flipping any spin whose flip strictly lowers the energy, until a full
/// sweep makes no flip. Ties never flip, so the descent terminates; the
/// result is a 1-flip local minimum and the map is idempotent.
pub fn sqc(h: &IsingHamiltonian, z: &SpinAssignment) -> Result<SpinAssignment, PostprocessError> {
    let adj = h.adjacency();
    let mut spins = positions_checked(&adj, h, z)?;
    let n = adj.n();
    // local[p] = h_p + Σ_q J_pq z_q, kept in sync under flips.
    let mut local: Vec<f64> = (0..n)
        .map(|p| {
            let mut f = adj.field_at(p);
            for &(q, j) in adj.neighbors_of(p) {
                f += j * f64::from(spins[q]);
            }
            f
        })
        .collect();

    loop {
        let mut flipped_any = false;
        for p in 0..n {
            let de = -2.0 * f64::from(spins[p]) * local[p];
            if de < 0.0 {
                spins[p] = -spins[p];
                flipped_any = true;
                let s = f64::from(spins[p]);
                for &(q, j) in adj.neighbors_of(p) {
                    local[q] += 2.0 * j * s;
                }
            }
        }
        if !flipped_any {
            break;
        }
    }
    Ok(adj.assignment_of(&spins))
}

/// One connected component of the disagreement subgraph between two samples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisagreementComponent {
    vars: Vec<usize>,
}

impl DisagreementComponent {
    /// Member variables in ascending index order.
    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }
}

/// Partition `{i : za_i ≠ zb_i}` into connected components under `h`'s
/// coupler graph. Components are listed by ascending smallest member.
pub fn disagreement_components(
    h: &IsingHamiltonian,
    za: &SpinAssignment,
    zb: &SpinAssignment,
) -> Result<Vec<DisagreementComponent>, PostprocessError> {
    let adj = h.adjacency();
    let a = positions_checked(&adj, h, za)?;
    let b = positions_checked(&adj, h, zb)?;
    let n = adj.n();
    let disagree: Vec<bool> = (0..n).map(|p| a[p] != b[p]).collect();

    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if !disagree[start] || seen[start] {
            continue;
        }
        let mut stack = vec![start];
        seen[start] = true;
        let mut members = Vec::new();
        while let Some(p) = stack.pop() {
            members.push(adj.var_at(p));
            for &(q, _) in adj.neighbors_of(p) {
                if disagree[q] && !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        members.sort_unstable();
        components.push(DisagreementComponent { vars: members });
    }
    Ok(components)
}

/// Energy carried by a component under candidate spins `cand`: the
/// component's fields, its internal couplers, and its couplers to the
/// agreed boundary (`base` holds the boundary spins).
fn component_contribution(
    adj: &Adjacency,
    in_comp: &[bool],
    positions: &[usize],
    cand: &[i8],
    base: &[i8],
) -> f64 {
    let mut e = 0.0;
    for &p in positions {
        let zp = f64::from(cand[p]);
        e += adj.field_at(p) * zp;
        for &(q, j) in adj.neighbors_of(p) {
            if in_comp[q] {
                // Internal pair; count once.
                if q > p {
                    e += j * zp * f64::from(cand[q]);
                }
            } else {
                e += j * zp * f64::from(base[q]);
            }
        }
    }
    e
}

/// Combine two samples: agreement variables pass through; each disagreement
/// component adopts whichever parent contributes less energy over the
/// component (ties keep `za`). The output energy never exceeds either
/// parent's.
pub fn mqc_pair(
    h: &IsingHamiltonian,
    za: &SpinAssignment,
    zb: &SpinAssignment,
) -> Result<SpinAssignment, PostprocessError> {
    let adj = h.adjacency();
    let a = positions_checked(&adj, h, za)?;
    let b = positions_checked(&adj, h, zb)?;
    let components = disagreement_components(h, za, zb)?;

    let mut out = a.clone();
    let mut in_comp = vec![false; adj.n()];
    for comp in &components {
        let positions: Vec<usize> = comp
            .vars()
            .iter()
            .map(|&i| adj.position(i).expect("component var active"))
            .collect();
        for &p in &positions {
            in_comp[p] = true;
        }
        // Boundary spins are agreed, so either parent works as `base`.
        let ca = component_contribution(&adj, &in_comp, &positions, &a, &a);
        let cb = component_contribution(&adj, &in_comp, &positions, &b, &a);
        if cb < ca {
            for &p in &positions {
                out[p] = b[p];
            }
        }
        for &p in &positions {
            in_comp[p] = false;
        }
    }
    Ok(adj.assignment_of(&out))
}

/// Multi-qubit correction over a whole sample set: fold the samples in
/// order through [`mqc_pair`] (accumulator starts at the first sample),
/// then finish with one [`sqc`] pass. The result's energy is at most the
/// minimum sample energy.
pub fn mqc(h: &IsingHamiltonian, set: &SampleSet) -> Result<SpinAssignment, PostprocessError> {
    let samples = set.samples();
    let first = samples.first().ok_or(PostprocessError::EmptySampleSet)?;
    let mut acc = first.clone();
    for z in &samples[1..] {
        acc = mqc_pair(h, &acc, z)?;
    }
    sqc(h, &acc)
}
