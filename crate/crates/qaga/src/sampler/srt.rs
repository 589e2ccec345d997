//! Spin-reversal transforms (gauges).
//!
//! A gauge `g ∈ {−1,+1}^N` relabels the spin axes: `h'_i = g_i h_i`,
//! `J'_ij = g_i g_j J_ij`. Energies are preserved under the matching sample
//! map `z_i ↦ g_i z_i`, so sampling the transformed Hamiltonian and mapping
//! samples back explores the same landscape under a different encoding —
//! the standard trick annealer users apply to average out per-qubit biases.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::ising::{IsingError, IsingHamiltonian, SpinAssignment};

use super::{
    check_sample_pre, derived_seed, Sampler, SamplerConfig, SamplerError, SampleSet,
    GAUGE_STREAM_BASE,
};

fn check_gauge_domain(
    h: &IsingHamiltonian,
    gauge: &SpinAssignment,
) -> Result<(), SamplerError> {
    if h.vars().eq(gauge.vars()) {
        Ok(())
    } else {
        let missing: Vec<usize> = h.vars().filter(|&i| !gauge.contains(i)).collect();
        let extra: Vec<usize> = gauge.vars().filter(|i| !h.is_active(*i)).collect();
        Err(SamplerError::Ising(IsingError::DomainMismatch {
            missing,
            extra,
        }))
    }
}

/// Transform `h` into the gauge frame: `h'_i = g_i h_i`, `J'_ij = g_i g_j J_ij`.
///
/// Energy-preserving bijection: `energy(apply_srt(H,g), z) == energy(H, g∘z)`
/// for every `z` (exactly — the coefficient maps are pure sign flips).
/// Applying the same gauge twice restores `h` bit-for-bit.
pub fn apply_srt(
    h: &IsingHamiltonian,
    gauge: &SpinAssignment,
) -> Result<IsingHamiltonian, SamplerError> {
    check_gauge_domain(h, gauge)?;
    let mut out = IsingHamiltonian::new(h.vars());
    out.set_offset(h.offset());
    for (i, v) in h.fields() {
        out.set_field(i, f64::from(gauge.get(i).expect("domain checked")) * v)?;
    }
    for ((i, j), v) in h.couplers() {
        let gi = f64::from(gauge.get(i).expect("domain checked"));
        let gj = f64::from(gauge.get(j).expect("domain checked"));
        out.add_coupler(i, j, gi * gj * v)?;
    }
    Ok(out)
}

/// Map samples drawn in the gauge frame back to the original frame
/// (`z_i ↦ g_i z_i`). Per-sample energies carry over unchanged: the gauge
/// map multiplies each energy term by `g_i² = 1`, exactly, term by term.
pub fn unapply_srt(set: &SampleSet, gauge: &SpinAssignment) -> Result<SampleSet, SamplerError> {
    let samples = set
        .samples()
        .iter()
        .map(|z| {
            SpinAssignment::from_pairs(z.iter().map(|(i, v)| {
                let g = gauge.get(i).ok_or(IsingError::DomainMismatch {
                    missing: vec![],
                    extra: vec![i],
                })?;
                Ok((i, g * v))
            }).collect::<Result<Vec<_>, IsingError>>()?)
        })
        .collect::<Result<Vec<_>, IsingError>>()?;
    Ok(SampleSet::from_parts(samples, set.energies().to_vec()))
}

/// Draw a ±1 gauge vector for gauge index `g` from its own ChaCha substream.
/// Gauge 0 is always the identity.
fn draw_gauge(h: &IsingHamiltonian, seed: u64, gauge_index: u64) -> SpinAssignment {
    if gauge_index == 0 {
        return SpinAssignment::constant(h.vars(), 1).expect("constant gauge");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(GAUGE_STREAM_BASE + gauge_index);
    SpinAssignment::from_pairs(
        h.vars()
            .map(|i| (i, if rng.random::<bool>() { 1i8 } else { -1 })),
    )
    .expect("distinct vars")
}

/// Sample under `cfg.num_gauges` spin-reversal transforms.
///
/// The read budget splits evenly across gauges (`num_gauges` must divide
/// `reads`); gauge 0 is the identity, the rest are drawn from the seed's
/// gauge substreams. Each gauge invokes `backend` on the transformed
/// Hamiltonian with its own derived seed, samples are mapped back to the
/// original frame, and the per-gauge batches concatenate in gauge order.
pub fn srt_sample(
    h: &IsingHamiltonian,
    cfg: &SamplerConfig,
    backend: &dyn Sampler,
) -> Result<SampleSet, SamplerError> {
    check_sample_pre(h, cfg)?;
    let k = cfg.num_gauges;
    if k == 0 {
        return Err(SamplerError::InvalidConfig(
            "srt_sample requires num_gauges >= 1".into(),
        ));
    }
    if !cfg.reads.is_multiple_of(k) {
        return Err(SamplerError::GaugeDivisibility {
            gauges: k,
            reads: cfg.reads,
        });
    }

    let reads_per_gauge = cfg.reads / k;
    let mut samples = Vec::with_capacity(cfg.reads);
    let mut energies = Vec::with_capacity(cfg.reads);
    for g in 0..k as u64 {
        let gauge = draw_gauge(h, cfg.seed, g);
        let transformed = apply_srt(h, &gauge)?;
        let sub_cfg = SamplerConfig {
            reads: reads_per_gauge,
            seed: derived_seed(cfg.seed, g),
            num_gauges: 0,
            ..cfg.clone()
        };
        let batch = unapply_srt(&backend.sample(&transformed, &sub_cfg)?, &gauge)?;
        let (s, e) = batch.into_parts();
        samples.extend(s);
        energies.extend(e);
    }
    Ok(SampleSet::from_parts(samples, energies))
}
