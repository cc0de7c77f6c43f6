use rayon::prelude::*;
use serde::Serialize;

use super::analytic::{assignment_fidelity, separation, separation_for_fidelity};
use super::config::MeasurementConfig;
use crate::error::{Error, Result};

/// Fidelity levels drawn as iso-lines on the map.
pub const CONTOUR_LEVELS: [f64; 3] = [0.95, 0.99, 0.999];

/// Iso-fidelity line: for every photon number, the time at which `level` is reached.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Contour {
    pub level: f64,
    pub points: Vec<(f64, f64)>,
}

/// Assignment fidelity over a grid of photon numbers and measurement times.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FidelityMap {
    pub nbar: Vec<f64>,
    pub t_m: Vec<f64>,
    /// `fidelity[i][j]` belongs to `nbar[i]`, `t_m[j]`.
    pub fidelity: Vec<Vec<f64>>,
    pub contours: Vec<Contour>,
    /// Photon number above which the dispersive picture breaks down.
    pub n_crit: f64,
}

fn check_grid(name: &str, g: &[f64]) -> Result<()> {
    if g.is_empty() {
        return Err(Error::domain(format!("{name} grid is empty")));
    }
    if g.iter().any(|&x| !x.is_finite() || x < 0.0) || g.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::domain(format!("{name} grid must be non-negative and strictly increasing")));
    }
    Ok(())
}

/// Evaluates the closed-form fidelity of `base` (κ, χ, amplifier, convention)
/// on every `(n̄, t_m)` pair.
pub fn fidelity_map(base: &MeasurementConfig, nbar_grid: &[f64], tm_grid: &[f64], n_crit: f64) -> Result<FidelityMap> {
    base.validate()?;
    check_grid("photon number", nbar_grid)?;
    check_grid("measurement time", tm_grid)?;
    let eta = base.efficiency();
    let r = |n: f64, t: f64| separation(base.kappa, base.chi, n, t, eta, base.rate_convention);
    let fidelity = nbar_grid
        .par_iter()
        .map(|&n| tm_grid.iter().map(|&t| assignment_fidelity(r(n, t))).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let contours = CONTOUR_LEVELS
        .iter()
        .map(|&level| {
            let need = separation_for_fidelity(level)?;
            let points = nbar_grid
                .iter()
                .filter(|&&n| n > 0.0 && r(n, 1.0) > 0.0)
                .map(|&n| (n, need / r(n, 1.0)))
                .collect();
            Ok(Contour { level, points })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FidelityMap { nbar: nbar_grid.to_vec(), t_m: tm_grid.to_vec(), fidelity, contours, n_crit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::mhz;

    #[test]
    fn monotone_and_anchored() {
        let base = MeasurementConfig::with_photons(mhz(5.0), mhz(2.5), 1.0, 1e-6).unwrap();
        let n: Vec<f64> = (0..10).map(|i| 1.0 + 3.0 * i as f64).collect();
        let t: Vec<f64> = (0..12).map(|j| j as f64 * 20e-9).collect();
        let m = fidelity_map(&base, &n, &t, 25.0).unwrap();
        assert_eq!(m.fidelity[0][0], 0.5);
        for i in 0..n.len() {
            for j in 0..t.len() {
                if i + 1 < n.len() {
                    assert!(m.fidelity[i + 1][j] >= m.fidelity[i][j]);
                }
                if j + 1 < t.len() {
                    assert!(m.fidelity[i][j + 1] >= m.fidelity[i][j]);
                }
            }
        }
        assert!(fidelity_map(&base, &[2.0, 1.0], &t, 25.0).is_err());
    }
}
