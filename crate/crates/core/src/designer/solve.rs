//! Capacitor synthesis.

use serde::Serialize;

use super::targets::DesignTargets;
use crate::cqed::{chi_shifts, g_exact, kappa_exact, t1_exact, notch_frequency, ResonatorParams, TransmonParams};
use crate::error::{require_positive, Error, Result};
use crate::netcore::{CouplingSet, DeltaCapacitances};
use crate::search::bisect;
use crate::units::ghz;

/// Star filter capacitor `C'_F = 1/(L_R ω_F²) − C_R` that puts the notch at `omega_f`.
pub fn solve_filter_cap(res: &ResonatorParams, omega_f: f64) -> Result<f64> {
    require_positive("notch frequency", omega_f)?;
    if omega_f >= res.omega_r() {
        return Err(Error::Infeasible(format!(
            "a notch at {omega_f:.6e} rad/s needs a negative filter capacitor (resonator at {:.6e} rad/s)",
            res.omega_r()
        )));
    }
    Ok(1.0 / (res.l_r() * omega_f * omega_f) - res.c_r())
}

/// Δ filter capacitor that, together with `c_q` and `c_kappa`, gives the star
/// filter capacitor `c_f_star`.
///
/// From `C'_F = C_q + C_κ + C_q C_κ / C_F`.
pub fn delta_filter_for_star(c_f_star: f64, c_q: f64, c_kappa: f64) -> Result<f64> {
    let room = c_f_star - c_q - c_kappa;
    if room <= 0.0 {
        return Err(Error::Infeasible(format!(
            "coupling capacitors ({c_q:.3e} F + {c_kappa:.3e} F) leave no room for a {c_f_star:.3e} F star filter capacitor"
        )));
    }
    Ok(c_q * c_kappa / room)
}

/// A converged coupling design with its solver diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CouplingSolution {
    pub couplings: CouplingSet,
    pub iterations: usize,
    /// `g/g_target − 1` at the returned design.
    pub g_residual: f64,
    /// `(κ/2|χ|)/target − 1` at the returned design.
    pub kappa_residual: f64,
}

const DAMPING: f64 = 0.5;
const TOLERANCE: f64 = 1e-4;
const MAX_ITERATIONS: usize = 200;

struct Problem<'a> {
    q: TransmonParams,
    res: &'a ResonatorParams,
    targets: &'a DesignTargets,
    c_f_star: f64,
}

impl Problem<'_> {
    fn couplings(&self, c_q: f64, c_kappa: f64) -> Result<CouplingSet> {
        let c_f = delta_filter_for_star(self.c_f_star, c_q, c_kappa)?;
        CouplingSet::from_delta(DeltaCapacitances::new(c_f, c_q, c_kappa), self.targets.z_env)
    }

    fn g(&self, c_q: f64, c_kappa: f64) -> Result<f64> {
        Ok(g_exact(&self.q, self.res, &self.couplings(c_q, c_kappa)?))
    }

    fn ratio(&self, c_q: f64, c_kappa: f64) -> Result<f64> {
        let c = self.couplings(c_q, c_kappa)?;
        let g = g_exact(&self.q, self.res, &c);
        let chi = chi_shifts(g, self.q.omega_ge() - self.res.omega_r(), self.q.delta_anh())?.chi;
        Ok(kappa_exact(&self.q, self.res, &c)? / (2.0 * chi.abs()))
    }

    fn residuals(&self, c_q: f64, c_kappa: f64) -> Result<(f64, f64)> {
        Ok((
            self.g(c_q, c_kappa)? / self.targets.g_target - 1.0,
            self.ratio(c_q, c_kappa)? / self.targets.kappa_over_2chi_target - 1.0,
        ))
    }
}

/// Damped Newton step on one variable, kept positive.
fn newton_step<F>(x: f64, f: F, target: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let h = 1e-4 * x;
    let fx = f(x)?;
    let slope = (f(x + h)? - f(x - h)?) / (2.0 * h);
    if slope == 0.0 || !slope.is_finite() {
        return Err(Error::Search("flat design response".into()));
    }
    let step = DAMPING * (fx - target) / slope;
    Ok(if x - step <= 0.0 { x / 2.0 } else { x - step })
}

/// Chooses `C_q` and `C_κ` so that the exact coupling hits `g_target` and the
/// exact linewidth satisfies `κ/(2|χ|)` = target, with the notch held at the
/// qubit frequency throughout.
///
/// The qubit is first retuned to `omega_ge_target`. Starting from the
/// closed-form estimates, each round takes one damped Newton step in `C_q`
/// (for g) and then one in `C_κ` (for κ/2χ), re-deriving the Δ filter
/// capacitor from the fixed star value every time either moves.
pub fn solve_couplings(q: &TransmonParams, res: &ResonatorParams, targets: &DesignTargets) -> Result<CouplingSolution> {
    targets.validate(res)?;
    let q = q.retuned(targets.omega_ge_target)?;
    let c_f_star = solve_filter_cap(res, targets.omega_ge_target)?;
    let p = Problem { q, res, targets, c_f_star };
    let w = q.omega_ge();
    let detuning = w - res.omega_r();

    if targets.g_target == 0.0 {
        return Err(Error::Infeasible("a zero coupling target leaves no qubit to read out".into()));
    }
    let mut c_q = 2.0 * targets.g_target / (w * res.omega_r() / (q.c_sigma() * res.c_r())).sqrt();
    let chi = chi_shifts(targets.g_target, detuning, q.delta_anh())?.chi.abs();
    let kappa = 2.0 * chi * targets.kappa_over_2chi_target;
    let mut c_kappa = (kappa / (w * w * res.omega_r() * res.z_r() * targets.z_env)).sqrt();

    let mut last = (f64::NAN, f64::NAN);
    for iteration in 0..=MAX_ITERATIONS {
        let (rg, rk) = p.residuals(c_q, c_kappa)?;
        last = (rg, rk);
        if rg.abs() < TOLERANCE && rk.abs() < TOLERANCE {
            let couplings = p.couplings(c_q, c_kappa)?;
            if couplings.delta().c_f < targets.c_f_min {
                return Err(Error::Infeasible(format!(
                    "filter capacitor {:.3e} F is below the realizable minimum {:.3e} F",
                    couplings.delta().c_f,
                    targets.c_f_min
                )));
            }
            return Ok(CouplingSolution { couplings, iterations: iteration, g_residual: rg, kappa_residual: rk });
        }
        if iteration == MAX_ITERATIONS {
            break;
        }
        c_q = newton_step(c_q, |x| p.g(x, c_kappa), targets.g_target)?;
        c_kappa = newton_step(c_kappa, |x| p.ratio(c_q, x), targets.kappa_over_2chi_target)?;
    }
    Err(Error::NonConvergence { iterations: MAX_ITERATIONS, g_residual: last.0, kappa_residual: last.1 })
}

/// Width of the band around the notch where the exact `T1` exceeds `threshold`.
///
/// Walks outward from `ω_F` in doubling steps until `T1` drops below the
/// threshold on each side, then bisects for the crossing. Crossings further
/// than 2π·1 GHz from the notch are reported as a search failure.
pub fn filter_bandwidth(q: &TransmonParams, res: &ResonatorParams, c: &CouplingSet, threshold: f64) -> Result<f64> {
    require_positive("T1 threshold", threshold)?;
    let star = c.star().ok_or_else(|| Error::Search("circuit has no notch".into()))?;
    let wf = notch_frequency(res, star.c_f)?;
    let above = |w: f64| -> Result<f64> {
        let t = t1_exact(q, res, c, w)?;
        Ok(if t.is_infinite() { 1.0 } else { (t / threshold).ln() })
    };
    if above(wf)? <= 0.0 {
        return Err(Error::Search(format!("T1 at the notch does not exceed {threshold:e} s")));
    }
    let window = ghz(1.0);
    let edge = |dir: f64| -> Result<f64> {
        let mut inner = 0.0;
        let mut step = window / 1024.0;
        loop {
            let outer = step.min(window);
            if above(wf + dir * outer)? < 0.0 {
                return bisect(|d| above(wf + dir * d), inner, outer, 1e-12, "filter band edge");
            }
            if outer >= window {
                return Err(Error::Search(format!("T1 stays above {threshold:e} s within 2π·1 GHz of the notch")));
            }
            inner = outer;
            step *= 2.0;
        }
    };
    let upper = edge(1.0)?;
    let lower = edge(-1.0)?;
    Ok(upper + lower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cqed::nominal_couplings;
    use crate::units::{femtofarads as ff, to_femtofarads, to_mhz};

    #[test]
    fn filter_cap_for_five_ghz() {
        let res = ResonatorParams::nominal();
        let c = solve_filter_cap(&res, ghz(5.0)).unwrap();
        assert!((to_femtofarads(c) - 345.0).abs() < 2.0);
        assert!((notch_frequency(&res, c).unwrap() / ghz(5.0) - 1.0).abs() < 1e-12);
        assert!(matches!(solve_filter_cap(&res, res.omega_r()), Err(Error::Infeasible(_))));
        assert!(solve_filter_cap(&res, res.omega_r() * (1.0 - 1e-9)).unwrap() < ff(0.01));
    }

    #[test]
    fn star_filter_inversion() {
        let c = nominal_couplings();
        let d = c.delta();
        let back = delta_filter_for_star(c.star().unwrap().c_f, d.c_q, d.c_kappa).unwrap();
        assert!((back / d.c_f - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bandwidths_near_reference() {
        let q = TransmonParams::nominal();
        let res = ResonatorParams::nominal();
        let c = crate::cqed::nominal_star_couplings();
        let b1 = to_mhz(filter_bandwidth(&q, &res, &c, 1e-3).unwrap());
        let b10 = to_mhz(filter_bandwidth(&q, &res, &c, 1e-2).unwrap());
        assert!((b1 / 138.0 - 1.0).abs() < 0.15, "{b1}");
        assert!((b10 / 43.0 - 1.0).abs() < 0.15, "{b10}");
    }
}
