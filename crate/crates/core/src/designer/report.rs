use serde::Serialize;

use super::solve::{filter_bandwidth, solve_couplings};
use super::sweeps::{coupling_sweep, snr_map, t1_spectrum, CouplingSweep, SnrMap, SweepPlan, T1Spectrum};
use super::targets::DesignTargets;
use crate::cqed::{dispersive_params, notch_frequency, ResonatorParams, TransmonParams};
use crate::error::{Error, Result};
use crate::netcore::{y_to_delta, CouplingSet};
use crate::units::{to_femtofarads, to_ghz, to_mhz, to_nanohenries};

/// One line of the parameter table. `reference` is the published value for the
/// nominal device; `target` is set for quantities the designer was asked to hit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub quantity: String,
    pub symbol: String,
    pub unit: String,
    pub value: f64,
    pub target: Option<f64>,
    pub reference: Option<f64>,
    /// `value/reference − 1`.
    pub deviation: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bandwidth {
    pub t1_threshold: f64,
    pub width: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Diagnostics {
    pub iterations: usize,
    pub g_residual: f64,
    pub kappa_residual: f64,
    /// `|ω_F/ω_target − 1|` recomputed from the returned capacitors.
    pub notch_error: f64,
    /// Largest relative mismatch between the reported Δ set and the transform of the reported star set.
    pub transform_error: f64,
}

/// A full design: capacitors, derived parameters, bandwidths, and the sweep
/// datasets around the design point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DesignReport {
    pub targets: DesignTargets,
    pub qubit: TransmonParams,
    pub resonator: ResonatorParams,
    pub couplings: CouplingSet,
    pub omega_f: f64,
    pub g: f64,
    pub kappa: f64,
    pub chi: f64,
    pub n_crit: f64,
    pub bandwidths: Vec<Bandwidth>,
    pub diagnostics: Diagnostics,
    pub table: Vec<TableRow>,
    pub t1_spectrum: T1Spectrum,
    pub coupling_sweep: CouplingSweep,
    pub snr_map: SnrMap,
}

fn row(quantity: &str, symbol: &str, unit: &str, value: f64, target: Option<f64>, reference: Option<f64>) -> TableRow {
    TableRow {
        quantity: quantity.into(),
        symbol: symbol.into(),
        unit: unit.into(),
        value,
        target,
        reference,
        deviation: reference.map(|r| value / r - 1.0),
    }
}

fn bandwidth_reference(threshold: f64) -> Option<f64> {
    if (threshold - 1e-3).abs() < 1e-15 {
        Some(138.0)
    } else if (threshold - 1e-2).abs() < 1e-14 {
        Some(43.0)
    } else {
        None
    }
}

/// Solves the design, then re-evaluates every reported quantity from the
/// returned capacitors.
pub fn design_report(
    q: &TransmonParams,
    res: &ResonatorParams,
    targets: &DesignTargets,
    plan: &SweepPlan,
) -> Result<DesignReport> {
    plan.validate()?;
    let sol = solve_couplings(q, res, targets)?;
    let q = q.retuned(targets.omega_ge_target)?;
    let c = sol.couplings;
    let star = *c.star().ok_or_else(|| Error::Infeasible("design has no finite star filter capacitor".into()))?;
    let d = *c.delta();
    let omega_f = notch_frequency(res, star.c_f)?;
    let disp = dispersive_params(&q, res, &c)?;
    let bandwidths = targets
        .t1_thresholds
        .iter()
        .map(|&t| Ok(Bandwidth { t1_threshold: t, width: filter_bandwidth(&q, res, &c, t)? }))
        .collect::<Result<Vec<_>>>()?;

    let back = y_to_delta(&star)?;
    let rel = |a: f64, b: f64| if b == 0.0 { a.abs() } else { (a / b - 1.0).abs() };
    let diagnostics = Diagnostics {
        iterations: sol.iterations,
        g_residual: sol.g_residual,
        kappa_residual: sol.kappa_residual,
        notch_error: rel(omega_f, targets.omega_ge_target),
        transform_error: rel(back.c_f, d.c_f).max(rel(back.c_q, d.c_q)).max(rel(back.c_kappa, d.c_kappa)),
    };

    let mut table = vec![
        row("Total qubit capacitance", "C_Σ", "fF", to_femtofarads(q.c_sigma()), None, Some(65.0)),
        row("Qubit inductance", "L_J", "nH", to_nanohenries(q.l_j()), None, Some(15.6)),
        row("Qubit frequency", "ω_ge/2π", "GHz", to_ghz(q.omega_ge()), Some(to_ghz(targets.omega_ge_target)), Some(5.0)),
        row("Resonator capacitance", "C_R", "fF", to_femtofarads(res.c_r()), None, Some(500.0)),
        row("Resonator inductance", "L_R", "nH", to_nanohenries(res.l_r()), None, Some(1.2)),
        row("Readout frequency", "ω_R/2π", "GHz", to_ghz(res.omega_r()), None, Some(6.5)),
        row("Anharmonicity", "δ/2π", "MHz", to_mhz(q.delta_anh()), None, Some(-297.0)),
        row("Environment impedance", "Z_env", "Ω", c.z_env(), None, Some(50.0)),
        row("Notch frequency", "ω_F/2π", "GHz", to_ghz(omega_f), Some(to_ghz(targets.omega_ge_target)), Some(5.0)),
        row("Filter capacitance", "C_F", "fF", to_femtofarads(d.c_f), None, Some(0.50)),
        row("Filter capacitance", "C'_F", "fF", to_femtofarads(star.c_f), None, Some(345.0)),
    ];
    for b in &bandwidths {
        let ms = b.t1_threshold * 1e3;
        table.push(row(
            &format!("Filter bandwidth (T1 > {ms} ms)"),
            &format!("Δω_F({ms} ms)/2π"),
            "MHz",
            to_mhz(b.width),
            None,
            bandwidth_reference(b.t1_threshold),
        ));
    }
    table.extend([
        row("Qubit coupling capacitance", "C_q", "fF", to_femtofarads(d.c_q), None, Some(11.1)),
        row("Qubit coupling capacitance", "C'_q", "fF", to_femtofarads(star.c_q), None, Some(12.0)),
        row("Qubit-resonator coupling", "g/2π", "MHz", to_mhz(disp.g), Some(to_mhz(targets.g_target)), Some(150.0)),
        row("Resonator coupling capacitance", "C_κ", "fF", to_femtofarads(d.c_kappa), None, Some(14.3)),
        row("Resonator coupling capacitance", "C'_κ", "fF", to_femtofarads(star.c_kappa), None, Some(15.4)),
        row("Photon decay rate", "κ/2π", "MHz", to_mhz(disp.kappa), None, Some(5.0)),
        row("Dispersive shift", "|χ|/2π", "MHz", to_mhz(disp.chi.abs()), None, Some(2.5)),
        row(
            "Readout matching",
            "κ/2|χ|",
            "",
            disp.kappa / (2.0 * disp.chi.abs()),
            Some(targets.kappa_over_2chi_target),
            Some(1.0),
        ),
        row("Critical photon number", "n_crit", "", disp.n_crit, None, Some(25.0)),
    ]);

    let omegas = plan.omegas();
    let t1 = t1_spectrum(&q, res, &c, &plan.c_f_values, &omegas)?;
    let gs = coupling_sweep(&q, res, &c, &plan.c_f_values, &plan.c_q_values, &omegas)?;
    let snr = snr_map(&q, res, &c, &plan.c_f_values, &plan.c_q_values)?;

    Ok(DesignReport {
        targets: targets.clone(),
        qubit: q,
        resonator: *res,
        couplings: c,
        omega_f,
        g: disp.g,
        kappa: disp.kappa,
        chi: disp.chi,
        n_crit: disp.n_crit,
        bandwidths,
        diagnostics,
        table,
        t1_spectrum: t1,
        coupling_sweep: gs,
        snr_map: snr,
    })
}
