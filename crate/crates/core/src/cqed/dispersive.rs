use serde::Serialize;

use crate::error::{Error, Result};

/// State-dependent resonator pulls of a transmon.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChiShifts {
    /// `−g²/Δ`, qubit in the ground state.
    pub chi0: f64,
    /// `g²(δ − Δ)/(Δ(Δ + δ))`, qubit excited.
    pub chi1: f64,
    /// `(χ₁ − χ₀)/2 = g²δ/(Δ(Δ + δ))`.
    pub chi: f64,
}

/// Dispersive shifts for coupling `g`, detuning `Δ = ω_ge − ω_R` and anharmonicity `δ`.
pub fn chi_shifts(g: f64, detuning: f64, delta_anh: f64) -> Result<ChiShifts> {
    if detuning == 0.0 || detuning + delta_anh == 0.0 {
        return Err(Error::Singularity(format!(
            "dispersive shifts diverge at detuning {detuning:e} rad/s with anharmonicity {delta_anh:e} rad/s"
        )));
    }
    if !(g.is_finite() && detuning.is_finite() && delta_anh.is_finite()) {
        return Err(Error::domain("dispersive shift inputs must be finite"));
    }
    let g2 = g * g;
    let chi0 = -g2 / detuning;
    let chi1 = g2 * (delta_anh - detuning) / (detuning * (detuning + delta_anh));
    Ok(ChiShifts { chi0, chi1, chi: 0.5 * (chi1 - chi0) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{ghz, mhz, to_mhz};

    #[test]
    fn nominal_shift() {
        let s = chi_shifts(mhz(150.0), ghz(-1.5), mhz(-297.0)).unwrap();
        assert!((to_mhz(s.chi.abs()) - 2.5).abs() < 0.05, "{}", to_mhz(s.chi));
        let closed = mhz(150.0).powi(2) * mhz(-297.0) / (ghz(-1.5) * (ghz(-1.5) + mhz(-297.0)));
        assert!((s.chi / closed - 1.0).abs() < 1e-12);
    }

    #[test]
    fn two_level_limit() {
        let (g, d) = (mhz(100.0), ghz(-1.0));
        let s = chi_shifts(g, d, -1e30).unwrap();
        assert!((s.chi / (g * g / d) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn singular_points() {
        assert!(matches!(chi_shifts(1.0, 0.0, -1.0), Err(Error::Singularity(_))));
        assert!(matches!(chi_shifts(1.0, 2.0, -2.0), Err(Error::Singularity(_))));
    }
}
