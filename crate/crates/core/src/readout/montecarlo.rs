//! Discrete-time homodyne trajectories used as an independent check on the
//! closed-form fidelity.
//!
//! Each record samples `I(t) = μ_j + ξ(t)` on a uniform grid, where `μ_j` is the
//! steady-state class mean and `ξ` is white noise of spectral density
//! `G(1 + 2A)/4`. A grid step `h` therefore carries variance `G(1 + 2A)/(4h)`,
//! so integrated statistics do not depend on the step. Trajectory `i` draws
//! from its own ChaCha stream `(seed, i)`, which keeps batches reproducible
//! regardless of how the work is split across threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use super::analytic::{assignment_fidelity, fisher_separation, noise_density, steady_state_kernel, steady_state_means};
use super::config::MeasurementConfig;
use crate::error::{require_positive, Error, Result};

/// Sampling grid of a record: number of samples and the actual step.
fn grid(t_m: f64, dt: f64) -> Result<(usize, f64)> {
    require_positive("time step", dt)?;
    require_positive("measurement time", t_m)?;
    let n = (t_m / dt).ceil();
    if !(1.0..=1e9).contains(&n) {
        return Err(Error::domain(format!("time step {dt:e} s gives an unusable record length")));
    }
    Ok((n as usize, t_m / n))
}

fn record(cfg: &MeasurementConfig, seed: u64, index: usize, samples: usize, step: f64) -> Vec<f64> {
    let (m0, m1) = steady_state_means(cfg);
    let mean = if index % 2 == 0 { m0 } else { m1 };
    let sigma = (noise_density(cfg) / step).sqrt();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    (0..samples)
        .map(|_| {
            let z: f64 = StandardNormal.sample(&mut rng);
            mean + sigma * z
        })
        .collect()
}

/// A set of simulated measurement records with alternating preparations.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryBatch {
    pub n_traj: usize,
    /// Sample spacing actually used, `t_m / ceil(t_m/dt)`.
    pub dt: f64,
    pub records: Vec<Vec<f64>>,
    /// Prepared state of each record; even indices are 0, odd are 1.
    pub labels: Vec<u8>,
    pub seed: u64,
}

impl TrajectoryBatch {
    pub fn generate(cfg: &MeasurementConfig, n_traj: usize, dt: f64, seed: u64) -> Result<Self> {
        cfg.validate()?;
        if n_traj < 2 {
            return Err(Error::domain("need at least one trajectory per class"));
        }
        let (samples, step) = grid(cfg.t_m, dt)?;
        let records = (0..n_traj).into_par_iter().map(|i| record(cfg, seed, i, samples, step)).collect();
        let labels = (0..n_traj).map(|i| (i % 2) as u8).collect();
        Ok(TrajectoryBatch { n_traj, dt: step, records, labels, seed })
    }

    /// `S = Σ w(t_k) I(t_k) h` for every record.
    pub fn scores(&self, kernel: &[f64]) -> Result<Vec<f64>> {
        if let Some(r) = self.records.first() {
            if r.len() != kernel.len() {
                return Err(Error::domain("kernel and records differ in length"));
            }
        }
        Ok(self.records.par_iter().map(|r| integrate(r, kernel, self.dt)).collect())
    }

    /// Per-sample class means, the empirical counterpart of the signal model.
    pub fn class_means(&self) -> (Vec<f64>, Vec<f64>) {
        let len = self.records.first().map_or(0, Vec::len);
        let mut sums = [vec![0.0; len], vec![0.0; len]];
        let mut counts = [0usize; 2];
        for (r, &l) in self.records.iter().zip(&self.labels) {
            counts[l as usize] += 1;
            for (s, x) in sums[l as usize].iter_mut().zip(r) {
                *s += x;
            }
        }
        let [s0, s1] = sums;
        let div = |v: Vec<f64>, n: usize| v.into_iter().map(|x| x / n.max(1) as f64).collect();
        (div(s0, counts[0]), div(s1, counts[1]))
    }
}

fn integrate(r: &[f64], kernel: &[f64], step: f64) -> f64 {
    r.iter().zip(kernel).map(|(x, w)| x * w).sum::<f64>() * step
}

/// Score statistics of a classified batch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScoreSummary {
    pub mean_0: f64,
    pub mean_1: f64,
    /// Pooled within-class variance.
    pub variance: f64,
    /// Fraction correctly labelled with the threshold halfway between the class means.
    pub fidelity: f64,
    /// `(mean_0 − mean_1)²/variance`.
    pub separation: f64,
}

/// Classifies scores at the midpoint of the empirical class means.
pub fn summarize_scores(scores: &[f64], labels: &[u8]) -> Result<ScoreSummary> {
    if scores.len() != labels.len() {
        return Err(Error::domain("scores and labels differ in length"));
    }
    let mut n = [0f64; 2];
    let mut sum = [0f64; 2];
    for (&s, &l) in scores.iter().zip(labels) {
        n[l as usize] += 1.0;
        sum[l as usize] += s;
    }
    if n[0] < 2.0 || n[1] < 2.0 {
        return Err(Error::domain("each class needs at least two records"));
    }
    let mean = [sum[0] / n[0], sum[1] / n[1]];
    let mut ss = 0.0;
    for (&s, &l) in scores.iter().zip(labels) {
        ss += (s - mean[l as usize]).powi(2);
    }
    let variance = ss / (n[0] + n[1] - 2.0);
    let threshold = 0.5 * (mean[0] + mean[1]);
    let upper_is_zero = mean[0] >= mean[1];
    let correct = scores
        .iter()
        .zip(labels)
        .filter(|(&s, &l)| {
            let guess_zero = (s > threshold) == upper_is_zero;
            guess_zero == (l == 0)
        })
        .count();
    Ok(ScoreSummary {
        mean_0: mean[0],
        mean_1: mean[1],
        variance,
        fidelity: correct as f64 / scores.len() as f64,
        separation: if variance > 0.0 { (mean[0] - mean[1]).powi(2) / variance } else { 0.0 },
    })
}

/// Outcome of a Monte Carlo fidelity estimate next to the closed-form prediction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MonteCarloResult {
    pub empirical_f: f64,
    pub empirical_r: f64,
    /// Binomial standard error `√(F(1 − F)/n)` of the empirical fidelity.
    pub stderr: f64,
    pub analytic_f: f64,
    pub analytic_r: f64,
    pub n_traj: usize,
}

impl MonteCarloResult {
    /// Whether the empirical and analytic fidelities agree within `k` standard errors.
    pub fn agrees_within(&self, k: f64) -> bool {
        let se = (self.analytic_f * (1.0 - self.analytic_f) / self.n_traj as f64).sqrt();
        (self.empirical_f - self.analytic_f).abs() <= k * se.max(self.stderr)
    }
}

/// Simulates `n_traj` records, integrates them against the LDA kernel and
/// classifies them at the midpoint threshold.
///
/// Records are generated and reduced one at a time, so memory stays flat even
/// for 10⁵ or more trajectories; the scores equal those of
/// [`TrajectoryBatch::generate`] followed by [`TrajectoryBatch::scores`].
pub fn monte_carlo_fidelity(cfg: &MeasurementConfig, n_traj: usize, dt: f64, seed: u64) -> Result<MonteCarloResult> {
    cfg.validate()?;
    if n_traj < 4 {
        return Err(Error::domain("need at least four trajectories"));
    }
    let (samples, step) = grid(cfg.t_m, dt)?;
    let kernel = steady_state_kernel(cfg, samples)?;
    let scores: Vec<f64> =
        (0..n_traj).into_par_iter().map(|i| integrate(&record(cfg, seed, i, samples, step), &kernel, step)).collect();
    let labels: Vec<u8> = (0..n_traj).map(|i| (i % 2) as u8).collect();
    let s = summarize_scores(&scores, &labels)?;
    let analytic_r = fisher_separation(cfg);
    Ok(MonteCarloResult {
        empirical_f: s.fidelity,
        empirical_r: s.separation,
        stderr: (s.fidelity * (1.0 - s.fidelity) / n_traj as f64).sqrt(),
        analytic_f: assignment_fidelity(analytic_r)?,
        analytic_r,
        n_traj,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::mhz;

    fn cfg() -> MeasurementConfig {
        MeasurementConfig::with_photons(mhz(5.0), mhz(2.5), 1.0, 0.3e-6).unwrap()
    }

    #[test]
    fn record_length_and_labels() {
        let b = TrajectoryBatch::generate(&cfg(), 6, 0.3e-6 / 49.5, 1).unwrap();
        assert!(b.records.iter().all(|r| r.len() == 50));
        assert_eq!(b.labels, vec![0, 1, 0, 1, 0, 1]);
        assert!((b.dt * 50.0 - 0.3e-6).abs() < 1e-20);
    }

    #[test]
    fn same_seed_same_records() {
        let a = TrajectoryBatch::generate(&cfg(), 64, 1e-8, 99).unwrap();
        let b = TrajectoryBatch::generate(&cfg(), 64, 1e-8, 99).unwrap();
        assert_eq!(a, b);
        let c = TrajectoryBatch::generate(&cfg(), 64, 1e-8, 100).unwrap();
        assert_ne!(a.records, c.records);
    }

    #[test]
    fn streaming_matches_batch() {
        let c = cfg();
        let b = TrajectoryBatch::generate(&c, 200, 1e-8, 5).unwrap();
        let k = steady_state_kernel(&c, b.records[0].len()).unwrap();
        let s = summarize_scores(&b.scores(&k).unwrap(), &b.labels).unwrap();
        let m = monte_carlo_fidelity(&c, 200, 1e-8, 5).unwrap();
        assert_eq!(s.fidelity, m.empirical_f);
        assert_eq!(s.separation, m.empirical_r);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(monte_carlo_fidelity(&cfg(), 1, 1e-8, 0).is_err());
        assert!(monte_carlo_fidelity(&cfg(), 100, 0.0, 0).is_err());
    }
}
