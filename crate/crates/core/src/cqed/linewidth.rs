//! Resonator linewidth κ: two closed-form estimates and the full-circuit value.

use num_complex::Complex64;

use super::circuit::{delta_circuit, RESONATOR};
use super::params::{ResonatorParams, TransmonParams};
use crate::error::{require_non_negative, require_positive, Error, Result};
use crate::netcore::CouplingSet;
use crate::search::{bisect, golden_max};

/// `κ ≈ ω_ge² ω_R Z_R C_κ² Z_env`.
///
/// The caller decides which coupling capacitance to pass: the star value
/// `C'_κ` and the Δ value `C_κ` differ by several percent and so do the
/// resulting estimates.
pub fn kappa_approx_simple(q: &TransmonParams, res: &ResonatorParams, c_kappa: f64, z_env: f64) -> Result<f64> {
    require_non_negative("C_kappa", c_kappa)?;
    require_non_negative("Z_env", z_env)?;
    Ok(q.omega_ge().powi(2) * res.omega_r() * res.z_r() * c_kappa * c_kappa * z_env)
}

/// Sum of inverse star capacitances `1/C'_κ + 1/C'_F` on the environment side.
///
/// Without a filter capacitor the star form is degenerate (`C'_F` infinite) and
/// `C'_κ` equals the Δ value.
fn environment_elastance(c: &CouplingSet) -> Result<f64> {
    match c.star() {
        Some(s) => Ok(1.0 / s.c_kappa + 1.0 / s.c_f),
        None => {
            let ck = c.delta().c_kappa;
            require_positive("C_kappa", ck)?;
            Ok(1.0 / ck)
        }
    }
}

/// Effective-resistance estimate `κ ≈ ω_R/R_eff · √(L_R/(C_R + C_eff))`,
/// evaluated at the bare resonator frequency, with
///
/// ```text
/// S     = 1/C'_κ + 1/C'_F
/// R_eff = Z_env + S²/(ω² Z_env)
/// C_eff = S / (ω² Z_env² + S²)
/// ```
pub fn kappa_effective(res: &ResonatorParams, c: &CouplingSet) -> Result<f64> {
    let s = environment_elastance(c)?;
    let w = res.omega_r();
    let z = c.z_env();
    let r_eff = z + s * s / (w * w * z);
    let c_eff = s / (w * w * z * z + s * s);
    Ok(w / r_eff * (res.l_r() / (res.c_r() + c_eff)).sqrt())
}

/// Frequency at which the reactive part of the admittance seen at the resonator
/// node crosses zero, i.e. the resonator frequency after loading by the
/// couplings and the qubit.
pub fn loaded_resonator_frequency(q: &TransmonParams, res: &ResonatorParams, c: &CouplingSet) -> Result<f64> {
    let n = delta_circuit(Some(q), res, c)?;
    let wr = res.omega_r();
    bisect(
        |w| Ok(n.driving_point_admittance(RESONATOR, w)?.im()),
        0.9 * wr,
        wr * (1.0 + 1e-6),
        1e-13,
        "loaded resonator frequency",
    )
}

/// Complex natural frequency `s = −κ/2 + jω` of the loaded resonator mode.
pub fn resonator_mode(q: &TransmonParams, res: &ResonatorParams, c: &CouplingSet) -> Result<Complex64> {
    let w0 = loaded_resonator_frequency(q, res, c)?;
    let n = delta_circuit(Some(q), res, c)?;
    let s = n.natural_frequency_near(Complex64::new(0.0, w0))?;
    let wr = res.omega_r();
    if s.im < 0.8 * wr || s.im > 1.05 * wr || s.re > 1e-9 * wr {
        return Err(Error::Search(format!("mode search left the resonator window, landed at {s}")));
    }
    Ok(s)
}

/// Linewidth from the decay rate of the loaded mode, `κ = −2 Re(s)`.
pub fn kappa_from_natural_frequency(q: &TransmonParams, res: &ResonatorParams, c: &CouplingSet) -> Result<f64> {
    Ok((-2.0 * resonator_mode(q, res, c)?.re).max(0.0))
}

/// Linewidth of the loaded resonator from the full circuit.
///
/// The resistance `Re Z(ω)` seen at the resonator node (qubit included as its
/// linear oscillator) traces a Lorentzian around the loaded mode; κ is its full
/// width at half maximum. The search is centred on the natural frequency. For
/// quality factors above 10⁷ the half-power points are closer together than the
/// sweep can resolve, and the decay-rate value is returned instead.
pub fn kappa_exact(q: &TransmonParams, res: &ResonatorParams, c: &CouplingSet) -> Result<f64> {
    let s = resonator_mode(q, res, c)?;
    let estimate = (-2.0 * s.re).max(0.0);
    let wc = s.im;
    if estimate < 1e-7 * wc {
        return Ok(estimate);
    }
    let n = delta_circuit(Some(q), res, c)?;
    let resistance = |w: f64| Ok(n.driving_point_impedance(RESONATOR, w)?.re());
    let peak = golden_max(resistance, wc - 2.0 * estimate, wc + 2.0 * estimate, 1e-13)?;
    let half = resistance(peak)? / 2.0;
    let excess = |w: f64| Ok(resistance(w)? - half);
    let lower = bisect(excess, peak - 20.0 * estimate, peak, 1e-14, "lower half-power point")?;
    let upper = bisect(excess, peak, peak + 20.0 * estimate, 1e-14, "upper half-power point")?;
    Ok(upper - lower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cqed::{nominal_couplings, nominal_star_couplings};
    use crate::netcore::{DeltaCapacitances, StarCapacitances};
    use crate::units::{femtofarads as ff, to_mhz};

    #[test]
    fn simple_estimate_by_hand() {
        let q = TransmonParams::nominal();
        let res = ResonatorParams::nominal();
        let star = to_mhz(kappa_approx_simple(&q, &res, ff(15.4), 50.0).unwrap());
        let delta = to_mhz(kappa_approx_simple(&q, &res, ff(14.3), 50.0).unwrap());
        assert!((star - 3.7).abs() < 0.2, "{star}");
        assert!((delta - 3.2).abs() < 0.2, "{delta}");
        assert_eq!(kappa_approx_simple(&q, &res, 0.0, 50.0).unwrap(), 0.0);
    }

    #[test]
    fn effective_estimate() {
        let res = ResonatorParams::nominal();
        let k = to_mhz(kappa_effective(&res, &nominal_star_couplings()).unwrap());
        assert!((k - 5.7).abs() < 0.3, "{k}");
        let far = nominal_star_couplings().with_z_env(1e18).unwrap();
        assert!(kappa_effective(&res, &far).unwrap() < 1e-3);
        let weak = CouplingSet::from_star(StarCapacitances::new(ff(345.0), ff(12.0), 1e-22), 50.0).unwrap();
        assert!(kappa_effective(&res, &weak).unwrap() < 1e-3);
    }

    #[test]
    fn exact_linewidth_and_alternative_agree() {
        let q = TransmonParams::nominal();
        let res = ResonatorParams::nominal();
        let c = nominal_couplings();
        let k = kappa_exact(&q, &res, &c).unwrap();
        let alt = kappa_from_natural_frequency(&q, &res, &c).unwrap();
        assert!((to_mhz(k) - 5.0).abs() < 0.5, "{}", to_mhz(k));
        assert!((alt / k - 1.0).abs() < 0.05, "{} vs {}", to_mhz(alt), to_mhz(k));
    }

    #[test]
    fn quadratic_in_environment_coupling() {
        let q = TransmonParams::nominal();
        let res = ResonatorParams::nominal();
        let full = StarCapacitances::new(ff(345.0), ff(12.0), ff(15.4));
        let half = StarCapacitances { c_kappa: full.c_kappa / 2.0, ..full };
        let k1 = kappa_exact(&q, &res, &CouplingSet::from_star(full, 50.0).unwrap()).unwrap();
        let k2 = kappa_exact(&q, &res, &CouplingSet::from_star(half, 50.0).unwrap()).unwrap();
        let ratio = k1 / k2;
        assert!((3.4..=4.6).contains(&ratio), "{ratio}");
    }

    #[test]
    fn decoupled_environment_is_lossless() {
        let q = TransmonParams::nominal();
        let res = ResonatorParams::nominal();
        let c = nominal_couplings().with_z_env(1e15).unwrap();
        assert!(kappa_exact(&q, &res, &c).unwrap() < 1.0);
    }

    #[test]
    fn loading_pulls_resonator_down() {
        let q = TransmonParams::nominal();
        let res = ResonatorParams::nominal();
        let w = loaded_resonator_frequency(&q, &res, &nominal_couplings()).unwrap();
        assert!(w < res.omega_r());
        let bare = CouplingSet::from_delta(DeltaCapacitances::new(1e-24, 1e-24, 1e-24), 50.0).unwrap();
        let wb = loaded_resonator_frequency(&q, &res, &bare).unwrap();
        assert!((wb / res.omega_r() - 1.0).abs() < 1e-8);
        let mut last = f64::INFINITY;
        for k in 0..=15 {
            let c = CouplingSet::from_delta(DeltaCapacitances::new(ff(0.5), ff(5.0 + k as f64), ff(14.3)), 50.0)
                .unwrap();
            let w = loaded_resonator_frequency(&q, &res, &c).unwrap();
            assert!(w < last);
            last = w;
        }
    }
}
