//! Complex impedance and admittance values with explicit open/short sentinels.
//!
//! An ideal open circuit has no finite impedance and an ideal short has no
//! finite admittance. Rather than carrying `inf` through complex arithmetic
//! (which turns `0 * inf` into `NaN`), each type has one sentinel variant and
//! the series/parallel rules treat it exactly.

use num_complex::Complex64;
use serde::Serialize;

/// Impedance in ohms, or an ideal open circuit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum ComplexImpedance {
    Finite(Complex64),
    Open,
}

/// Admittance in siemens, or an ideal short circuit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum ComplexAdmittance {
    Finite(Complex64),
    Short,
}

/// `1/z` computed so that the real part keeps the sign of `re(z)`.
///
/// `num_complex`'s division goes through the general `a/b` path; for a unit
/// numerator the real part reduces to `re / |z|^2`, which never changes sign
/// through cancellation. Passivity checks downstream depend on this.
pub(crate) fn reciprocal(z: Complex64) -> Complex64 {
    let scale = z.re.abs().max(z.im.abs());
    let (re, im) = (z.re / scale, z.im / scale);
    let norm = re * re + im * im;
    Complex64::new(re / norm / scale, -im / norm / scale)
}

impl ComplexImpedance {
    pub const SHORT: ComplexImpedance = ComplexImpedance::Finite(Complex64::new(0.0, 0.0));

    pub fn new(re: f64, im: f64) -> Self {
        ComplexImpedance::Finite(Complex64::new(re, im))
    }

    pub fn is_open(&self) -> bool {
        matches!(self, ComplexImpedance::Open)
    }

    pub fn finite(&self) -> Option<Complex64> {
        match self {
            ComplexImpedance::Finite(z) => Some(*z),
            ComplexImpedance::Open => None,
        }
    }

    /// Real part; `+inf` for an open circuit.
    pub fn re(&self) -> f64 {
        self.finite().map_or(f64::INFINITY, |z| z.re)
    }

    pub fn im(&self) -> f64 {
        self.finite().map_or(f64::INFINITY, |z| z.im)
    }

    pub fn norm(&self) -> f64 {
        self.finite().map_or(f64::INFINITY, |z| z.norm())
    }

    pub fn to_admittance(self) -> ComplexAdmittance {
        match self {
            ComplexImpedance::Open => ComplexAdmittance::Finite(Complex64::new(0.0, 0.0)),
            ComplexImpedance::Finite(z) if z.re == 0.0 && z.im == 0.0 => ComplexAdmittance::Short,
            ComplexImpedance::Finite(z) => ComplexAdmittance::Finite(reciprocal(z)),
        }
    }

    /// Series connection. Open absorbs everything.
    pub fn series(self, other: ComplexImpedance) -> ComplexImpedance {
        match (self, other) {
            (ComplexImpedance::Finite(a), ComplexImpedance::Finite(b)) => ComplexImpedance::Finite(a + b),
            _ => ComplexImpedance::Open,
        }
    }

    /// Parallel connection, computed through the admittance sum.
    pub fn parallel(self, other: ComplexImpedance) -> ComplexImpedance {
        self.to_admittance().sum(other.to_admittance()).to_impedance()
    }
}

impl ComplexAdmittance {
    pub const OPEN: ComplexAdmittance = ComplexAdmittance::Finite(Complex64::new(0.0, 0.0));

    pub fn new(re: f64, im: f64) -> Self {
        ComplexAdmittance::Finite(Complex64::new(re, im))
    }

    pub fn is_short(&self) -> bool {
        matches!(self, ComplexAdmittance::Short)
    }

    pub fn finite(&self) -> Option<Complex64> {
        match self {
            ComplexAdmittance::Finite(y) => Some(*y),
            ComplexAdmittance::Short => None,
        }
    }

    /// Real part (conductance); `+inf` for a short.
    pub fn re(&self) -> f64 {
        self.finite().map_or(f64::INFINITY, |y| y.re)
    }

    pub fn im(&self) -> f64 {
        self.finite().map_or(f64::INFINITY, |y| y.im)
    }

    pub fn to_impedance(self) -> ComplexImpedance {
        match self {
            ComplexAdmittance::Short => ComplexImpedance::Finite(Complex64::new(0.0, 0.0)),
            ComplexAdmittance::Finite(y) if y.re == 0.0 && y.im == 0.0 => ComplexImpedance::Open,
            ComplexAdmittance::Finite(y) => ComplexImpedance::Finite(reciprocal(y)),
        }
    }

    /// Admittance of two branches in parallel. Short absorbs everything.
    pub fn sum(self, other: ComplexAdmittance) -> ComplexAdmittance {
        match (self, other) {
            (ComplexAdmittance::Finite(a), ComplexAdmittance::Finite(b)) => ComplexAdmittance::Finite(a + b),
            _ => ComplexAdmittance::Short,
        }
    }

    pub fn scale(self, k: f64) -> ComplexAdmittance {
        match self {
            ComplexAdmittance::Finite(y) => ComplexAdmittance::Finite(y * k),
            ComplexAdmittance::Short => ComplexAdmittance::Short,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_with_open_is_identity() {
        let z = ComplexImpedance::new(12.5, -3.0);
        assert_eq!(z.parallel(ComplexImpedance::Open), z);
        assert_eq!(ComplexImpedance::Open.parallel(z), z);
    }

    #[test]
    fn series_with_short_is_identity() {
        let z = ComplexImpedance::new(50.0, 0.0);
        assert_eq!(z.series(ComplexImpedance::SHORT), z);
    }

    #[test]
    fn sentinels_map_to_each_other() {
        assert_eq!(ComplexImpedance::Open.to_admittance(), ComplexAdmittance::OPEN);
        assert!(ComplexImpedance::SHORT.to_admittance().is_short());
        assert!(ComplexAdmittance::Short.to_impedance() == ComplexImpedance::SHORT);
        assert!(ComplexAdmittance::OPEN.to_impedance().is_open());
    }

    #[test]
    fn parallel_with_short_is_short() {
        let z = ComplexImpedance::new(3.0, 4.0).parallel(ComplexImpedance::SHORT);
        assert_eq!(z, ComplexImpedance::SHORT);
    }

    #[test]
    fn reciprocal_keeps_sign_of_tiny_real_part() {
        let z = Complex64::new(1e-300, 1e3);
        let y = reciprocal(z);
        assert!(y.re > 0.0);
        let z = Complex64::new(-0.0, 1e3);
        assert!(reciprocal(z).re <= 0.0);
        let big = Complex64::new(1e200, 1e200);
        assert!(reciprocal(big).re > 0.0);
    }
}
