use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{require_non_negative, require_positive, Error, Result};

/// How a linewidth in rad/s enters the measurement-rate prefactor.
///
/// Every expression that multiplies κ by a time (the separation `R` and the
/// fidelity formula) needs a rate in 1/s. `Cyclic` divides the angular κ by 2π
/// before using it, which is the reading under which the published measurement
/// times come out; `Angular` uses κ in rad/s as is. Ratios such as
/// `χ²/(κ²/4 + χ²)` are unaffected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RateConvention {
    #[default]
    #[serde(rename = "paper", alias = "cyclic")]
    Cyclic,
    Angular,
}

impl RateConvention {
    /// The rate that multiplies measurement time, given κ in rad/s.
    pub fn rate(self, kappa: f64) -> f64 {
        match self {
            RateConvention::Cyclic => kappa / TAU,
            RateConvention::Angular => kappa,
        }
    }
}

/// Steady-state dispersive measurement settings. Rates are in rad/s.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementConfig {
    pub kappa: f64,
    pub chi: f64,
    /// Drive amplitude `E_m`.
    pub drive_amp: f64,
    pub t_m: f64,
    /// Amplifier power gain `G`.
    pub amp_gain: f64,
    /// Added noise `A` in quanta.
    pub amp_added_noise: f64,
    /// Homodyne quadrature angle θ.
    pub quadrature_angle: f64,
    pub rate_convention: RateConvention,
}

impl MeasurementConfig {
    /// Noiseless unit-gain amplifier on the optimal quadrature.
    pub fn new(kappa: f64, chi: f64, drive_amp: f64, t_m: f64) -> Result<Self> {
        let mut cfg = MeasurementConfig {
            kappa,
            chi,
            drive_amp,
            t_m,
            amp_gain: 1.0,
            amp_added_noise: 0.0,
            quadrature_angle: 0.0,
            rate_convention: RateConvention::Cyclic,
        };
        cfg.validate()?;
        cfg.quadrature_angle = cfg.optimal_quadrature();
        Ok(cfg)
    }

    /// Drive amplitude chosen so the resonator holds `nbar` photons on average.
    pub fn with_photons(kappa: f64, chi: f64, nbar: f64, t_m: f64) -> Result<Self> {
        require_non_negative("mean photon number", nbar)?;
        Self::new(kappa, chi, drive_for_photons(kappa, chi, nbar), t_m)
    }

    pub fn with_amplifier(self, gain: f64, added_noise: f64) -> Result<Self> {
        let cfg = MeasurementConfig { amp_gain: gain, amp_added_noise: added_noise, ..self };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_convention(self, rate_convention: RateConvention) -> Self {
        MeasurementConfig { rate_convention, ..self }
    }

    pub fn with_duration(self, t_m: f64) -> Result<Self> {
        let cfg = MeasurementConfig { t_m, ..self };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Same κ, χ and amplifier, drive rescaled to `nbar` photons.
    pub fn with_mean_photons(self, nbar: f64) -> Result<Self> {
        require_non_negative("mean photon number", nbar)?;
        Ok(MeasurementConfig { drive_amp: drive_for_photons(self.kappa, self.chi, nbar), ..self })
    }

    pub fn validate(&self) -> Result<()> {
        require_positive("kappa", self.kappa)?;
        if !self.chi.is_finite() {
            return Err(Error::domain("chi must be finite"));
        }
        require_non_negative("drive amplitude", self.drive_amp)?;
        require_positive("measurement time", self.t_m)?;
        require_positive("amplifier gain", self.amp_gain)?;
        require_non_negative("amplifier added noise", self.amp_added_noise)?;
        // a phase-insensitive amplifier adds at least |1 − 1/G|/2 quanta
        let floor = 0.5 * (1.0 - 1.0 / self.amp_gain).abs();
        if self.amp_added_noise < floor * (1.0 - 1e-12) {
            return Err(Error::domain(format!(
                "added noise {} is below the amplifier limit {floor} for gain {}",
                self.amp_added_noise, self.amp_gain
            )));
        }
        if !self.quadrature_angle.is_finite() {
            return Err(Error::domain("quadrature angle must be finite"));
        }
        Ok(())
    }

    /// `η = 1/(1 + 2A)`.
    pub fn efficiency(&self) -> f64 {
        1.0 / (1.0 + 2.0 * self.amp_added_noise)
    }

    /// `κ²/4 + χ²`.
    pub(crate) fn lorentzian(&self) -> f64 {
        self.kappa * self.kappa / 4.0 + self.chi * self.chi
    }

    /// Rate that multiplies the measurement time under the chosen convention.
    pub fn effective_kappa(&self) -> f64 {
        self.rate_convention.rate(self.kappa)
    }

    /// Steady-state pointer amplitudes `α_j = −iE/(κ/2 ± iχ)` for the qubit in 0 and 1.
    pub fn pointer_states(&self) -> (num_complex::Complex64, num_complex::Complex64) {
        use num_complex::Complex64;
        let e = Complex64::new(0.0, -self.drive_amp);
        let half = self.kappa / 2.0;
        (e / Complex64::new(half, self.chi), e / Complex64::new(half, -self.chi))
    }

    /// Quadrature that puts all of `α₀ − α₁` on the measured axis.
    pub fn optimal_quadrature(&self) -> f64 {
        let (a0, a1) = self.pointer_states();
        let beta = a0 - a1;
        if beta.norm() == 0.0 {
            0.0
        } else {
            beta.arg()
        }
    }
}

fn drive_for_photons(kappa: f64, chi: f64, nbar: f64) -> f64 {
    (nbar * (kappa * kappa / 4.0 + chi * chi) / 2.0).sqrt()
}
