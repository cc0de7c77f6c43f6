//! Closed-form measurement figures of merit.

use statrs::function::erf::{erf, erf_inv};

use super::config::{MeasurementConfig, RateConvention};
use crate::error::{require_positive, Error, Result};

/// `n̄ = 2E²/(κ²/4 + χ²)`.
pub fn mean_photons(cfg: &MeasurementConfig) -> f64 {
    2.0 * cfg.drive_amp * cfg.drive_amp / cfg.lorentzian()
}

/// Steady-state pointer separation per unit time, `2χ² n̄/(κ²/4 + χ²)`.
///
/// Multiplying by `t_m` gives the integrated separation that enters `R`.
pub fn pointer_separation_norm(cfg: &MeasurementConfig) -> f64 {
    2.0 * cfg.chi * cfg.chi * mean_photons(cfg) / cfg.lorentzian()
}

/// The same quantity written with the drive, `4χ²E²/(κ²/4 + χ²)²`.
pub fn pointer_separation_norm_drive(cfg: &MeasurementConfig) -> f64 {
    let l = cfg.lorentzian();
    4.0 * cfg.chi * cfg.chi * cfg.drive_amp * cfg.drive_amp / (l * l)
}

/// Fisher separation `R = 8 κ t_m χ² n̄ η / (κ²/4 + χ²)`, κ in the configured convention.
pub fn fisher_separation(cfg: &MeasurementConfig) -> f64 {
    separation(cfg.kappa, cfg.chi, mean_photons(cfg), cfg.t_m, cfg.efficiency(), cfg.rate_convention)
}

/// Fisher separation for explicit arguments.
pub fn separation(kappa: f64, chi: f64, nbar: f64, t_m: f64, eta: f64, convention: RateConvention) -> f64 {
    let l = kappa * kappa / 4.0 + chi * chi;
    8.0 * convention.rate(kappa) * t_m * chi * chi * nbar * eta / l
}

/// `F = (1 + erf(√(R/8)))/2`.
pub fn assignment_fidelity(r: f64) -> Result<f64> {
    if r.is_nan() || r < 0.0 {
        return Err(Error::domain(format!("Fisher separation must be non-negative, got {r}")));
    }
    Ok(0.5 * (1.0 + erf((r / 8.0).sqrt())))
}

/// Separation needed for fidelity `f`, the inverse of [`assignment_fidelity`].
pub fn separation_for_fidelity(f: f64) -> Result<f64> {
    if !(f > 0.5 && f < 1.0) {
        return Err(Error::domain(format!("target fidelity must lie in (0.5, 1), got {f}")));
    }
    let x = erf_inv(2.0 * f - 1.0);
    Ok(8.0 * x * x)
}

/// Measurement time at which a matched (`κ = 2χ`) readout reaches fidelity `f`.
///
/// Solves `F = (1 + erf(√(κ t η n̄/2)))/2` for `t`, with κ given in rad/s and
/// converted according to `convention`.
pub fn required_measurement_time(f: f64, nbar: f64, kappa: f64, eta: f64, convention: RateConvention) -> Result<f64> {
    require_positive("mean photon number", nbar)?;
    require_positive("kappa", kappa)?;
    require_positive("efficiency", eta)?;
    let r = separation_for_fidelity(f)?;
    Ok(r / (4.0 * convention.rate(kappa) * eta * nbar))
}

/// Linear-discriminant kernel `w(t) = (⟨I⁰(t)⟩ − ⟨I¹(t)⟩)/σ²`.
pub fn lda_kernel(mean_0: &[f64], mean_1: &[f64], noise_var: f64) -> Result<Vec<f64>> {
    require_positive("noise variance", noise_var)?;
    if mean_0.len() != mean_1.len() {
        return Err(Error::domain("class means must share a time grid"));
    }
    Ok(mean_0.iter().zip(mean_1).map(|(a, b)| (a - b) / noise_var).collect())
}

/// Class-mean homodyne signals `√(Gκ) Re[e^{−iθ} α_j]` for the two qubit states.
pub fn steady_state_means(cfg: &MeasurementConfig) -> (f64, f64) {
    let (a0, a1) = cfg.pointer_states();
    let rot = num_complex::Complex64::from_polar(1.0, -cfg.quadrature_angle);
    let scale = (cfg.amp_gain * cfg.effective_kappa()).sqrt();
    (scale * (rot * a0).re, scale * (rot * a1).re)
}

/// White-noise spectral density of the amplified quadrature, `G(1 + 2A)/4`.
pub fn noise_density(cfg: &MeasurementConfig) -> f64 {
    cfg.amp_gain * (1.0 + 2.0 * cfg.amp_added_noise) / 4.0
}

/// Kernel of a steady-state measurement sampled at `samples` points.
pub fn steady_state_kernel(cfg: &MeasurementConfig, samples: usize) -> Result<Vec<f64>> {
    let (m0, m1) = steady_state_means(cfg);
    lda_kernel(&vec![m0; samples], &vec![m1; samples], noise_density(cfg))
}
