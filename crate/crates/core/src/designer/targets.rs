use serde::{Deserialize, Serialize};

use crate::cqed::ResonatorParams;
use crate::error::{require_non_negative, require_positive, Error, Result};
use crate::units::{femtofarads, ghz, mhz};

/// What the designer is asked to achieve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DesignTargets {
    /// Qubit frequency, where the notch is placed (rad/s).
    pub omega_ge_target: f64,
    /// Qubit–resonator coupling (rad/s).
    pub g_target: f64,
    /// Desired `κ/(2|χ|)`; 1 maximizes the Fisher separation.
    pub kappa_over_2chi_target: f64,
    /// Lifetimes (s) for which filter bandwidths are reported.
    pub t1_thresholds: Vec<f64>,
    /// Smallest Δ filter capacitor accepted as realizable (F).
    pub c_f_min: f64,
    /// Environment impedance (Ω).
    pub z_env: f64,
}

impl Default for DesignTargets {
    /// 5 GHz qubit, g/2π = 150 MHz, matched readout, 1 ms and 10 ms bands,
    /// 0.05 fF minimum filter capacitor, 50 Ω line.
    fn default() -> Self {
        DesignTargets {
            omega_ge_target: ghz(5.0),
            g_target: mhz(150.0),
            kappa_over_2chi_target: 1.0,
            t1_thresholds: vec![1e-3, 1e-2],
            c_f_min: femtofarads(0.05),
            z_env: 50.0,
        }
    }
}

impl DesignTargets {
    /// Checks the targets against the resonator, including `g < |Δ|/5`.
    pub fn validate(&self, res: &ResonatorParams) -> Result<()> {
        require_positive("qubit frequency target", self.omega_ge_target)?;
        require_non_negative("coupling target", self.g_target)?;
        require_positive("kappa/2chi target", self.kappa_over_2chi_target)?;
        require_non_negative("minimum filter capacitance", self.c_f_min)?;
        require_positive("environment impedance", self.z_env)?;
        for &t in &self.t1_thresholds {
            require_positive("T1 threshold", t)?;
        }
        let detuning = (self.omega_ge_target - res.omega_r()).abs();
        if self.g_target >= detuning / 5.0 {
            return Err(Error::Infeasible(format!(
                "coupling {:.4e} rad/s is not dispersive against detuning {detuning:.4e} rad/s (needs g < |Δ|/5)",
                self.g_target
            )));
        }
        if self.omega_ge_target >= res.omega_r() {
            return Err(Error::Infeasible("the notch can only be placed below the resonator frequency".into()));
        }
        Ok(())
    }
}
