//! Frequency and capacitance sweeps behind the lifetime, coupling and
//! readout-matching plots.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cqed::{chi_shifts, g_exact, kappa_exact, t1_exact, ResonatorParams, TransmonParams};
use crate::error::{Error, Result};
use crate::netcore::{CouplingSet, DeltaCapacitances};
use crate::units::{femtofarads, ghz};

/// Grids for the sweep datasets, in SI units and rad/s.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepPlan {
    pub omega_min: f64,
    pub omega_max: f64,
    pub points: usize,
    /// Δ filter capacitors, one curve each.
    pub c_f_values: Vec<f64>,
    /// Δ qubit coupling capacitors, one curve each.
    pub c_q_values: Vec<f64>,
}

impl Default for SweepPlan {
    /// 2001 points over 4.0–6.5 GHz, `C_F` ∈ {0, 0.25, 0.5, 1, 2} fF,
    /// `C_q` ∈ {5, 8, 11.1, 14, 17, 20} fF.
    fn default() -> Self {
        SweepPlan {
            omega_min: ghz(4.0),
            omega_max: ghz(6.5),
            points: 2001,
            c_f_values: [0.0, 0.25, 0.5, 1.0, 2.0].into_iter().map(femtofarads).collect(),
            c_q_values: [5.0, 8.0, 11.1, 14.0, 17.0, 20.0].into_iter().map(femtofarads).collect(),
        }
    }
}

impl SweepPlan {
    pub fn validate(&self) -> Result<()> {
        if !(self.omega_min > 0.0 && self.omega_max > self.omega_min && self.omega_max.is_finite()) {
            return Err(Error::domain("sweep frequency range must be positive and increasing"));
        }
        if self.points < 2 {
            return Err(Error::domain("a sweep needs at least two points"));
        }
        if self.c_f_values.iter().chain(&self.c_q_values).any(|&c| !(c >= 0.0 && c.is_finite())) {
            return Err(Error::domain("sweep capacitances must be non-negative"));
        }
        Ok(())
    }

    /// Evenly spaced angular frequencies, endpoints included.
    pub fn omegas(&self) -> Vec<f64> {
        let n = self.points;
        (0..n).map(|i| self.omega_min + (self.omega_max - self.omega_min) * i as f64 / (n - 1) as f64).collect()
    }
}

/// Exact `T1(ω)` for several filter capacitors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct T1Spectrum {
    pub omega: Vec<f64>,
    pub c_f: Vec<f64>,
    /// `t1[k][i]`: capacitor `c_f[k]`, frequency `omega[i]`; `+∞` inside a notch.
    pub t1: Vec<Vec<f64>>,
}

/// Sweeps the qubit frequency for every Δ filter capacitor in `c_f_values`,
/// keeping the other couplings of `base`.
pub fn t1_spectrum(
    q: &TransmonParams,
    res: &ResonatorParams,
    base: &CouplingSet,
    c_f_values: &[f64],
    omegas: &[f64],
) -> Result<T1Spectrum> {
    let t1 = c_f_values
        .iter()
        .map(|&cf| {
            let c = base.with_delta_filter(cf)?;
            omegas.par_iter().map(|&w| t1_exact(q, res, &c, w)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(T1Spectrum { omega: omegas.to_vec(), c_f: c_f_values.to_vec(), t1 })
}

/// Exact coupling versus qubit frequency for several `C_F` and several `C_q`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CouplingSweep {
    pub omega: Vec<f64>,
    pub c_f: Vec<f64>,
    pub c_q: Vec<f64>,
    /// `g_vs_c_f[k][i]`: `C_F = c_f[k]` with the base `C_q`.
    pub g_vs_c_f: Vec<Vec<f64>>,
    /// `g_vs_c_q[k][i]`: `C_q = c_q[k]` with the base `C_F`.
    pub g_vs_c_q: Vec<Vec<f64>>,
}

/// The qubit is retuned at each frequency by changing `L_J` only.
pub fn coupling_sweep(
    q: &TransmonParams,
    res: &ResonatorParams,
    base: &CouplingSet,
    c_f_values: &[f64],
    c_q_values: &[f64],
    omegas: &[f64],
) -> Result<CouplingSweep> {
    let qubits = omegas.iter().map(|&w| q.retuned(w)).collect::<Result<Vec<_>>>()?;
    let curve = |c: CouplingSet| qubits.iter().map(|t| g_exact(t, res, &c)).collect::<Vec<_>>();
    let d = base.delta();
    let g_vs_c_f = c_f_values.iter().map(|&cf| Ok(curve(base.with_delta_filter(cf)?))).collect::<Result<Vec<_>>>()?;
    let g_vs_c_q = c_q_values
        .iter()
        .map(|&cq| Ok(curve(CouplingSet::from_delta(DeltaCapacitances { c_q: cq, ..*d }, base.z_env())?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CouplingSweep { omega: omegas.to_vec(), c_f: c_f_values.to_vec(), c_q: c_q_values.to_vec(), g_vs_c_f, g_vs_c_q })
}

/// Readout matching `κ/(2|χ|)` over a grid of `C_F` and `C_q`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SnrMap {
    pub c_f: Vec<f64>,
    pub c_q: Vec<f64>,
    /// `ratio[i][j]`: `C_F = c_f[i]`, `C_q = c_q[j]`.
    pub ratio: Vec<Vec<f64>>,
}

/// `κ/(2|χ|)` from the exact linewidth and coupling, at the qubit's current frequency.
pub fn kappa_over_2chi(q: &TransmonParams, res: &ResonatorParams, c: &CouplingSet) -> Result<f64> {
    let g = g_exact(q, res, c);
    let chi = chi_shifts(g, q.omega_ge() - res.omega_r(), q.delta_anh())?.chi;
    Ok(kappa_exact(q, res, c)? / (2.0 * chi.abs()))
}

pub fn snr_map(
    q: &TransmonParams,
    res: &ResonatorParams,
    base: &CouplingSet,
    c_f_values: &[f64],
    c_q_values: &[f64],
) -> Result<SnrMap> {
    let d = *base.delta();
    let ratio = c_f_values
        .par_iter()
        .map(|&cf| {
            c_q_values
                .iter()
                .map(|&cq| {
                    let c = CouplingSet::from_delta(DeltaCapacitances { c_f: cf, c_q: cq, ..d }, base.z_env())?;
                    kappa_over_2chi(q, res, &c)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SnrMap { c_f: c_f_values.to_vec(), c_q: c_q_values.to_vec(), ratio })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cqed::nominal_couplings;

    #[test]
    fn unfiltered_spectrum_has_no_pole() {
        let q = TransmonParams::nominal();
        let res = ResonatorParams::nominal();
        let plan = SweepPlan { points: 101, ..SweepPlan::default() };
        let s = t1_spectrum(&q, &res, &nominal_couplings(), &[0.0], &plan.omegas()).unwrap();
        assert!(s.t1[0].iter().all(|t| t.is_finite() && *t > 0.0));
    }

    #[test]
    fn filter_capacitor_barely_moves_g() {
        let q = TransmonParams::nominal();
        let res = ResonatorParams::nominal();
        let plan = SweepPlan { points: 21, ..SweepPlan::default() };
        let s = coupling_sweep(&q, &res, &nominal_couplings(), &plan.c_f_values, &plan.c_q_values, &plan.omegas())
            .unwrap();
        for i in 0..s.omega.len() {
            let col: Vec<f64> = s.g_vs_c_f.iter().map(|c| c[i]).collect();
            let spread = col.iter().cloned().fold(f64::MIN, f64::max) - col.iter().cloned().fold(f64::MAX, f64::min);
            assert!(spread < crate::units::mhz(10.0));
        }
        assert!(s.g_vs_c_q.windows(2).all(|w| w[1][10] > w[0][10]));
    }
}
