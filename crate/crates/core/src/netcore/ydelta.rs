//! Star (Y) and loop (Δ) forms of the three coupling capacitors.
//!
//! The star has its centre node joined to the qubit, the top of the readout
//! resonator and the environment port. Branch naming follows the node pairs
//! each Δ capacitor bridges:
//!
//! | Δ capacitor | nodes joined           | star branches used   |
//! |-------------|------------------------|----------------------|
//! | `c_f`       | qubit ↔ environment    | `c_q'`, `c_kappa'`   |
//! | `c_q`       | qubit ↔ resonator      | `c_q'`, `c_f'`       |
//! | `c_kappa`   | resonator ↔ environment| `c_kappa'`, `c_f'`   |
//!
//! For capacitors the transform runs opposite to the resistive one: a Δ
//! capacitance is a product of two star capacitances over their sum.

use serde::{Deserialize, Serialize};

use crate::error::{require_non_negative, require_positive, Result};

/// Star capacitances in farads (primed quantities).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StarCapacitances {
    /// Star centre to resonator (the filter capacitor).
    pub c_f: f64,
    /// Star centre to qubit.
    pub c_q: f64,
    /// Star centre to environment.
    pub c_kappa: f64,
}

/// Δ capacitances in farads (unprimed quantities).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaCapacitances {
    /// Qubit to environment.
    pub c_f: f64,
    /// Qubit to resonator.
    pub c_q: f64,
    /// Resonator to environment.
    pub c_kappa: f64,
}

impl StarCapacitances {
    pub fn new(c_f: f64, c_q: f64, c_kappa: f64) -> Self {
        StarCapacitances { c_f, c_q, c_kappa }
    }

    fn validate(&self) -> Result<()> {
        require_positive("star c_f'", self.c_f)?;
        require_positive("star c_q'", self.c_q)?;
        require_positive("star c_kappa'", self.c_kappa)
    }

    pub fn scaled(&self, s: f64) -> Self {
        StarCapacitances::new(self.c_f * s, self.c_q * s, self.c_kappa * s)
    }
}

impl DeltaCapacitances {
    pub fn new(c_f: f64, c_q: f64, c_kappa: f64) -> Self {
        DeltaCapacitances { c_f, c_q, c_kappa }
    }

    fn validate_positive(&self) -> Result<()> {
        require_positive("delta c_f", self.c_f)?;
        require_positive("delta c_q", self.c_q)?;
        require_positive("delta c_kappa", self.c_kappa)
    }

    fn validate_non_negative(&self) -> Result<()> {
        require_non_negative("delta c_f", self.c_f)?;
        require_non_negative("delta c_q", self.c_q)?;
        require_non_negative("delta c_kappa", self.c_kappa)
    }
}

/// Star to Δ.
///
/// With `S = c_f' + c_q' + c_kappa'`: `c_f = c_q' c_kappa' / S`,
/// `c_q = c_q' c_f' / S`, `c_kappa = c_kappa' c_f' / S`.
pub fn y_to_delta(y: &StarCapacitances) -> Result<DeltaCapacitances> {
    y.validate()?;
    let sum = y.c_f + y.c_q + y.c_kappa;
    Ok(DeltaCapacitances {
        c_f: y.c_q * y.c_kappa / sum,
        c_q: y.c_q * y.c_f / sum,
        c_kappa: y.c_kappa * y.c_f / sum,
    })
}

/// Δ to star, the inverse of [`y_to_delta`].
///
/// With `P = c_f c_q + c_q c_kappa + c_kappa c_f`, each star capacitance is `P`
/// over the Δ capacitance on the opposite side of the triangle.
pub fn delta_to_y(d: &DeltaCapacitances) -> Result<StarCapacitances> {
    d.validate_positive()?;
    let p = d.c_f * d.c_q + d.c_q * d.c_kappa + d.c_kappa * d.c_f;
    Ok(StarCapacitances {
        c_f: p / d.c_f,
        c_q: p / d.c_kappa,
        c_kappa: p / d.c_q,
    })
}

/// The three coupling capacitors plus the environment impedance.
///
/// The Δ form is always present. The star form exists only when every Δ
/// capacitance is positive: a vanishing `c_f` corresponds to an infinite
/// (shorted) star filter capacitor, which is the plain dispersive-readout
/// circuit without a notch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CouplingSet {
    star: Option<StarCapacitances>,
    delta: DeltaCapacitances,
    z_env: f64,
}

impl CouplingSet {
    pub fn from_star(star: StarCapacitances, z_env: f64) -> Result<Self> {
        require_positive("environment impedance", z_env)?;
        let delta = y_to_delta(&star)?;
        Ok(CouplingSet { star: Some(star), delta, z_env })
    }

    pub fn from_delta(delta: DeltaCapacitances, z_env: f64) -> Result<Self> {
        require_positive("environment impedance", z_env)?;
        delta.validate_non_negative()?;
        let star = if delta.c_f > 0.0 && delta.c_q > 0.0 && delta.c_kappa > 0.0 {
            Some(delta_to_y(&delta)?)
        } else {
            None
        };
        Ok(CouplingSet { star, delta, z_env })
    }

    /// Plain dispersive readout: qubit → `c_q` → resonator → `c_kappa` → environment.
    pub fn without_filter(c_q: f64, c_kappa: f64, z_env: f64) -> Result<Self> {
        Self::from_delta(DeltaCapacitances::new(0.0, c_q, c_kappa), z_env)
    }

    pub fn star(&self) -> Option<&StarCapacitances> {
        self.star.as_ref()
    }

    pub fn delta(&self) -> &DeltaCapacitances {
        &self.delta
    }

    pub fn z_env(&self) -> f64 {
        self.z_env
    }

    pub fn with_z_env(&self, z_env: f64) -> Result<Self> {
        require_positive("environment impedance", z_env)?;
        Ok(CouplingSet { z_env, ..*self })
    }

    /// Same Δ coupling capacitors with a different filter capacitor.
    pub fn with_delta_filter(&self, c_f: f64) -> Result<Self> {
        Self::from_delta(DeltaCapacitances { c_f, ..self.delta }, self.z_env)
    }

    /// Whether the star form, when present, reproduces the Δ form within `rel_tol`.
    pub fn is_consistent(&self, rel_tol: f64) -> bool {
        let Some(star) = self.star else {
            return true;
        };
        let Ok(d) = y_to_delta(&star) else {
            return false;
        };
        let rel = |a: f64, b: f64| (a - b).abs() <= rel_tol * a.abs().max(b.abs());
        rel(d.c_f, self.delta.c_f) && rel(d.c_q, self.delta.c_q) && rel(d.c_kappa, self.delta.c_kappa)
    }
}
