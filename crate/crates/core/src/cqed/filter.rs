//! Closed-form lifetime approximations and their filter-function factorization.
//!
//! ```text
//! T1_cQED(ω)   = ω_R (ω_R² − ω²)² / (4 κ g² ω³)
//! F(ω)         = ω_R² (ω_F² − ω²) / (ω² (ω_R² − ω_F²))
//! T1_filter(ω) = T1_cQED(ω) / |F(ω)|²
//! F_cQED(ω)    = β ω² / (ω_R² − ω²),   β = C_q/C_R
//! T1_cap(ω)    = C_Σ / (ω² C_κ² Z_env)
//! T1_cQED(ω)   = T1_cap(ω) / |F_cQED(ω)|²
//! ```
//!
//! The last line is exact only when κ and g are the simple closed-form
//! estimates taken at the same frequency ω.

use super::circuit::notch_frequency;
use super::params::{ResonatorParams, TransmonParams};
use crate::error::{require_positive, Error, Result};
use crate::netcore::CouplingSet;

/// Lifetime of an unfiltered dispersive readout circuit.
pub fn t1_cqed_approx(kappa: f64, g: f64, res: &ResonatorParams, omega: f64) -> Result<f64> {
    require_positive("angular frequency", omega)?;
    let wr = res.omega_r();
    let d = wr * wr - omega * omega;
    let denom = 4.0 * kappa * g * g * omega.powi(3);
    if denom == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(wr * d * d / denom)
}

/// Notch filter function; zero at `omega_f`, magnitude one at `ω_R`.
pub fn filter_function(res: &ResonatorParams, omega_f: f64, omega: f64) -> Result<f64> {
    require_positive("angular frequency", omega)?;
    require_positive("filter frequency", omega_f)?;
    let wr2 = res.omega_r().powi(2);
    if omega_f * omega_f >= wr2 {
        return Err(Error::domain("filter frequency must lie below the resonator frequency"));
    }
    Ok(wr2 * (omega_f * omega_f - omega * omega) / (omega * omega * (wr2 - omega_f * omega_f)))
}

/// Cavity filter function `β ω²/(ω_R² − ω²)`; infinite at `ω_R`.
pub fn cavity_filter_function(beta: f64, res: &ResonatorParams, omega: f64) -> Result<f64> {
    require_positive("angular frequency", omega)?;
    let d = res.omega_r().powi(2) - omega * omega;
    if d == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(beta * omega * omega / d)
}

/// Lifetime of a qubit coupled to the environment through a bare capacitor.
pub fn t1_cap(q: &TransmonParams, c_kappa: f64, z_env: f64, omega: f64) -> Result<f64> {
    require_positive("angular frequency", omega)?;
    let denom = omega * omega * c_kappa * c_kappa * z_env;
    if denom == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(q.c_sigma() / denom)
}

/// Lifetime with the notch filter, `ω (ω_R² − ω_F²)² (ω_R² − ω²)² / (4κg² ω_R³ (ω_F² − ω²)²)`.
///
/// The notch frequency comes from the star filter capacitor of `c`; the pole at
/// `ω_F` is reported as `+∞`.
pub fn t1_filter_approx(kappa: f64, g: f64, res: &ResonatorParams, c: &CouplingSet, omega: f64) -> Result<f64> {
    let star = c.star().ok_or_else(|| Error::domain("filter approximation needs a finite filter capacitor"))?;
    let wf = notch_frequency(res, star.c_f)?;
    t1_filter_approx_at(kappa, g, res, wf, omega)
}

/// [`t1_filter_approx`] with the notch frequency given directly.
pub fn t1_filter_approx_at(kappa: f64, g: f64, res: &ResonatorParams, omega_f: f64, omega: f64) -> Result<f64> {
    require_positive("angular frequency", omega)?;
    let wr = res.omega_r();
    let (wr2, wf2, w2) = (wr * wr, omega_f * omega_f, omega * omega);
    let notch = wf2 - w2;
    let denom = 4.0 * kappa * g * g * wr.powi(3) * notch * notch;
    if denom == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(omega * (wr2 - wf2).powi(2) * (wr2 - w2).powi(2) / denom)
}
