//! Engineering-unit conversions.
//!
//! Everything inside the crate works in SI with angular frequencies (rad/s).
//! Cyclic units (GHz, MHz) only appear at the boundary, through these helpers.

use std::f64::consts::TAU;

pub const FEMTO: f64 = 1e-15;
pub const NANO: f64 = 1e-9;
pub const MICRO: f64 = 1e-6;
pub const MILLI: f64 = 1e-3;

/// Cyclic frequency in GHz to angular frequency in rad/s.
pub fn ghz(f: f64) -> f64 {
    TAU * f * 1e9
}

/// Cyclic frequency in MHz to angular frequency in rad/s.
pub fn mhz(f: f64) -> f64 {
    TAU * f * 1e6
}

pub fn to_ghz(omega: f64) -> f64 {
    omega / TAU / 1e9
}

pub fn to_mhz(omega: f64) -> f64 {
    omega / TAU / 1e6
}

pub fn femtofarads(c: f64) -> f64 {
    c * FEMTO
}

pub fn to_femtofarads(c: f64) -> f64 {
    c / FEMTO
}

pub fn nanohenries(l: f64) -> f64 {
    l * NANO
}

pub fn to_nanohenries(l: f64) -> f64 {
    l / NANO
}
