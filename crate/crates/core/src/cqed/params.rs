use serde::Serialize;

use crate::error::{require_positive, Error, Result};
use crate::units::{femtofarads, ghz, mhz, nanohenries};

/// Transmon treated as a linear `L_J`–`C_Σ` oscillator with anharmonicity `δ`.
///
/// `omega_ge` is always `1/√(L_J C_Σ)`. Retuning the qubit changes `L_J` and
/// keeps `C_Σ`, which is how a flux-tunable device moves in practice.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TransmonParams {
    c_sigma: f64,
    l_j: f64,
    omega_ge: f64,
    delta_anh: f64,
}

impl TransmonParams {
    pub fn new(c_sigma: f64, l_j: f64, delta_anh: f64) -> Result<Self> {
        require_positive("C_sigma", c_sigma)?;
        require_positive("L_J", l_j)?;
        Self::check_anharmonicity(delta_anh)?;
        Ok(TransmonParams { c_sigma, l_j, omega_ge: 1.0 / (l_j * c_sigma).sqrt(), delta_anh })
    }

    pub fn from_frequency(c_sigma: f64, omega_ge: f64, delta_anh: f64) -> Result<Self> {
        require_positive("C_sigma", c_sigma)?;
        require_positive("omega_ge", omega_ge)?;
        Self::new(c_sigma, 1.0 / (omega_ge * omega_ge * c_sigma), delta_anh)
    }

    fn check_anharmonicity(delta_anh: f64) -> Result<()> {
        if delta_anh.is_finite() && delta_anh < 0.0 {
            Ok(())
        } else {
            Err(Error::domain(format!("transmon anharmonicity must be negative, got {delta_anh}")))
        }
    }

    /// Nominal device: `C_Σ` = 65 fF, 5.0 GHz, δ/2π = −297 MHz.
    pub fn nominal() -> Self {
        Self::from_frequency(femtofarads(65.0), ghz(5.0), mhz(-297.0)).expect("nominal transmon")
    }

    /// Same `C_Σ` and anharmonicity, `L_J` adjusted to put the qubit at `omega_ge`.
    pub fn retuned(&self, omega_ge: f64) -> Result<Self> {
        Self::from_frequency(self.c_sigma, omega_ge, self.delta_anh)
    }

    pub fn c_sigma(&self) -> f64 {
        self.c_sigma
    }

    pub fn l_j(&self) -> f64 {
        self.l_j
    }

    pub fn omega_ge(&self) -> f64 {
        self.omega_ge
    }

    pub fn delta_anh(&self) -> f64 {
        self.delta_anh
    }
}

/// Readout resonator as a parallel `L_R`–`C_R` tank.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResonatorParams {
    l_r: f64,
    c_r: f64,
    omega_r: f64,
    z_r: f64,
}

impl ResonatorParams {
    pub fn new(l_r: f64, c_r: f64) -> Result<Self> {
        require_positive("L_R", l_r)?;
        require_positive("C_R", c_r)?;
        Ok(ResonatorParams { l_r, c_r, omega_r: 1.0 / (l_r * c_r).sqrt(), z_r: (l_r / c_r).sqrt() })
    }

    /// 1.2 nH ‖ 500 fF, about 6.5 GHz and 49 Ω.
    pub fn nominal() -> Self {
        Self::new(nanohenries(1.2), femtofarads(500.0)).expect("nominal resonator")
    }

    pub fn l_r(&self) -> f64 {
        self.l_r
    }

    pub fn c_r(&self) -> f64 {
        self.c_r
    }

    /// Bare resonance `1/√(L_R C_R)`.
    pub fn omega_r(&self) -> f64 {
        self.omega_r
    }

    /// On-resonance impedance `√(L_R/C_R)`.
    pub fn z_r(&self) -> f64 {
        self.z_r
    }
}

/// Dispersive-regime figures of merit, all rates in rad/s.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DispersiveParams {
    pub g: f64,
    /// `Δ = ω_ge − ω_R`.
    pub detuning: f64,
    pub chi0: f64,
    pub chi1: f64,
    /// `(χ₁ − χ₀)/2`.
    pub chi: f64,
    pub kappa: f64,
    /// `Δ²/(4g²)`.
    pub n_crit: f64,
}

impl DispersiveParams {
    pub fn new(g: f64, detuning: f64, delta_anh: f64, kappa: f64) -> Result<Self> {
        let shifts = super::chi_shifts(g, detuning, delta_anh)?;
        Ok(DispersiveParams {
            g,
            detuning,
            chi0: shifts.chi0,
            chi1: shifts.chi1,
            chi: shifts.chi,
            kappa,
            n_crit: detuning * detuning / (4.0 * g * g),
        })
    }

    /// `|g/Δ| < 1`. Outside this the dispersive expressions stop meaning anything.
    pub fn is_dispersive(&self) -> bool {
        (self.g / self.detuning).abs() < 1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::to_ghz;

    #[test]
    fn nominal_values() {
        let q = TransmonParams::nominal();
        // 15.6 nH is the rounded inductance for 5.0 GHz at 65 fF
        assert!((q.l_j() / 15.6e-9 - 1.0).abs() < 1e-3);
        let r = ResonatorParams::nominal();
        assert!((to_ghz(r.omega_r()) - 6.497).abs() < 1e-3);
        assert!((r.z_r() - 48.99).abs() < 0.01);
    }

    #[test]
    fn frequency_and_inductance_consistent() {
        let q = TransmonParams::new(65e-15, 15.6e-9, -1.0).unwrap();
        let back = TransmonParams::from_frequency(65e-15, q.omega_ge(), -1.0).unwrap();
        assert!((back.l_j() / q.l_j() - 1.0).abs() < 1e-9);
        let moved = q.retuned(ghz(4.2)).unwrap();
        assert_eq!(moved.c_sigma(), q.c_sigma());
        assert!((moved.omega_ge() * (moved.l_j() * moved.c_sigma()).sqrt() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_positive_anharmonicity() {
        assert!(TransmonParams::new(65e-15, 15.6e-9, 1.0).is_err());
        assert!(ResonatorParams::new(0.0, 1e-12).is_err());
    }

    #[test]
    fn dispersive_params_identities() {
        let p = DispersiveParams::new(mhz(150.0), ghz(-1.5), mhz(-297.0), mhz(5.0)).unwrap();
        assert_eq!(p.chi, (p.chi1 - p.chi0) / 2.0);
        assert_eq!(p.n_crit, p.detuning * p.detuning / (4.0 * p.g * p.g));
        assert!(p.is_dispersive());
        let strong = DispersiveParams::new(ghz(2.0), ghz(-1.5), mhz(-297.0), mhz(5.0)).unwrap();
        assert!(!strong.is_dispersive());
    }
}
