//! Qubit–resonator coupling strength.
//!
//! Both oscillators are linear here; the exact form comes from the two-node
//! capacitance matrix obtained with the environment port grounded. In Δ form
//! the qubit node carries `C_Σ + C_F` to ground, the resonator node carries
//! `C_R + C_κ`, and `C_q` bridges them:
//!
//! ```text
//! C̄_Σ = C_Σ + C_F,   C̄_R = C_R + C_κ,   C̄_q = C_q
//! D   = C̄_Σ C̄_R + C̄_q (C̄_Σ + C̄_R)
//! 1/C₁ = (C̄_R + C̄_q)/D,   1/C₂ = (C̄_Σ + C̄_q)/D
//! g   = C̄_q / (2 √(Z₁ Z₂) D),   Z₁ = √(L_J/C₁),  Z₂ = √(L_R/C₂)
//! ```

use super::params::{ResonatorParams, TransmonParams};
use crate::netcore::CouplingSet;

/// Renormalized capacitances of the two-mode Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoadedCapacitances {
    pub qubit: f64,
    pub resonator: f64,
    pub coupling: f64,
}

impl LoadedCapacitances {
    pub fn of(q: &TransmonParams, res: &ResonatorParams, c: &CouplingSet) -> Self {
        let d = c.delta();
        LoadedCapacitances { qubit: q.c_sigma() + d.c_f, resonator: res.c_r() + d.c_kappa, coupling: d.c_q }
    }

    /// Determinant of the 2×2 capacitance matrix.
    pub fn determinant(&self) -> f64 {
        self.qubit * self.resonator + self.coupling * (self.qubit + self.resonator)
    }

    /// Effective qubit capacitance `C₁`.
    pub fn c1(&self) -> f64 {
        self.determinant() / (self.resonator + self.coupling)
    }

    /// Effective resonator capacitance `C₂`.
    pub fn c2(&self) -> f64 {
        self.determinant() / (self.qubit + self.coupling)
    }
}

/// Exact coupling of the linearized circuit, in rad/s.
pub fn g_exact(q: &TransmonParams, res: &ResonatorParams, c: &CouplingSet) -> f64 {
    let cap = LoadedCapacitances::of(q, res, c);
    let z1 = (q.l_j() / cap.c1()).sqrt();
    let z2 = (res.l_r() / cap.c2()).sqrt();
    cap.coupling / (2.0 * (z1 * z2).sqrt() * cap.determinant())
}

/// Weak-coupling estimate `g ≈ (C_q/2) √(ω_ge ω_R / (C_Σ C_R))`.
pub fn g_approx(q: &TransmonParams, res: &ResonatorParams, c: &CouplingSet) -> f64 {
    let c_q = c.delta().c_q;
    0.5 * c_q * (q.omega_ge() * res.omega_r() / (q.c_sigma() * res.c_r())).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cqed::nominal_couplings;
    use crate::netcore::DeltaCapacitances;
    use crate::units::{femtofarads as ff, ghz, to_mhz};

    #[test]
    fn approximate_coupling_by_hand() {
        let q = TransmonParams::nominal();
        let res = ResonatorParams::new(1.2e-9, ff(500.0)).unwrap();
        let c = nominal_couplings();
        // C_q/2 · √(ω_ge ω_R/(C_Σ C_R)), ω_R at 6.5 GHz
        let hand = 0.5 * ff(11.1) * (ghz(5.0) * res.omega_r() / (ff(65.0) * ff(500.0))).sqrt();
        assert!((g_approx(&q, &res, &c) - hand).abs() < 1e-6 * hand);
        assert!((to_mhz(hand) - 175.0).abs() < 1.0, "{}", to_mhz(hand));
    }

    #[test]
    fn vanishes_without_coupling_capacitor() {
        let q = TransmonParams::nominal();
        let res = ResonatorParams::nominal();
        let c = CouplingSet::from_delta(DeltaCapacitances::new(ff(0.5), 0.0, ff(14.3)), 50.0).unwrap();
        assert_eq!(g_exact(&q, &res, &c), 0.0);
        assert_eq!(g_approx(&q, &res, &c), 0.0);
        let tiny = CouplingSet::from_delta(DeltaCapacitances::new(ff(0.5), 1e-22, ff(14.3)), 50.0).unwrap();
        assert!(to_mhz(g_exact(&q, &res, &tiny)) < 1e-3);
    }

    #[test]
    fn nominal_exact_coupling_in_band() {
        let g = to_mhz(g_exact(&TransmonParams::nominal(), &ResonatorParams::nominal(), &nominal_couplings()));
        assert!((140.0..=190.0).contains(&g), "{g}");
    }

    #[test]
    fn exact_and_approximate_agree_within_thirty_percent() {
        let q = TransmonParams::nominal();
        let res = ResonatorParams::nominal();
        for k in 0..=15 {
            let cq = ff(5.0 + k as f64);
            let c = CouplingSet::from_delta(DeltaCapacitances::new(ff(0.5), cq, ff(14.3)), 50.0).unwrap();
            let (ge, ga) = (g_exact(&q, &res, &c), g_approx(&q, &res, &c));
            assert!((ga / ge - 1.0).abs() < 0.30, "C_q={} fF: {} vs {}", 5 + k, to_mhz(ge), to_mhz(ga));
        }
    }
}
