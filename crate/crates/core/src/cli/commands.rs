use std::path::PathBuf;

use super::config::RunConfig;
use super::output::{cap_label, format_number as num, write_csv, write_text};
use super::CliError;
use crate::cqed::{g_exact, DispersiveParams};
use crate::designer::{coupling_sweep, design_report, snr_map, t1_spectrum};
use crate::readout::{fidelity_map, monte_carlo_fidelity};
use crate::units::{to_femtofarads, to_ghz, to_mhz};

pub fn cmd_t1_spectrum(cfg: &RunConfig) -> Result<Vec<PathBuf>, CliError> {
    let (q, res, c) = (cfg.transmon()?, cfg.resonator()?, cfg.couplings()?);
    let plan = cfg.sweep_plan();
    let s = t1_spectrum(&q, &res, &c, &plan.c_f_values, &plan.omegas())?;
    let mut header = vec!["omega_ge_GHz".to_string()];
    header.extend(cfg.sweep.c_f_values_fF.iter().map(|&v| format!("T1_s_CF_{}", cap_label(v))));
    let rows: Vec<Vec<String>> = s
        .omega
        .iter()
        .enumerate()
        .map(|(i, &w)| std::iter::once(num(to_ghz(w))).chain(s.t1.iter().map(|col| num(col[i]))).collect())
        .collect();
    Ok(vec![write_csv(&cfg.out_dir, "t1_spectrum.csv", &header, &rows)?])
}

pub fn cmd_coupling_sweep(cfg: &RunConfig) -> Result<Vec<PathBuf>, CliError> {
    let (q, res, c) = (cfg.transmon()?, cfg.resonator()?, cfg.couplings()?);
    let plan = cfg.sweep_plan();
    let s = coupling_sweep(&q, &res, &c, &plan.c_f_values, &plan.c_q_values, &plan.omegas())?;
    let mut header = vec!["omega_ge_GHz".to_string()];
    header.extend(cfg.sweep.c_f_values_fF.iter().map(|&v| format!("g_MHz_CF_{}", cap_label(v))));
    header.extend(cfg.sweep.c_q_values_fF.iter().map(|&v| format!("g_MHz_Cq_{}", cap_label(v))));
    let rows: Vec<Vec<String>> = s
        .omega
        .iter()
        .enumerate()
        .map(|(i, &w)| {
            std::iter::once(num(to_ghz(w)))
                .chain(s.g_vs_c_f.iter().chain(&s.g_vs_c_q).map(|col| num(to_mhz(col[i]))))
                .collect()
        })
        .collect();
    Ok(vec![write_csv(&cfg.out_dir, "coupling_sweep.csv", &header, &rows)?])
}

pub fn cmd_snr_map(cfg: &RunConfig) -> Result<Vec<PathBuf>, CliError> {
    let (q, res, c) = (cfg.transmon()?, cfg.resonator()?, cfg.couplings()?);
    let plan = cfg.sweep_plan();
    let m = snr_map(&q, &res, &c, &plan.c_f_values, &plan.c_q_values)?;
    let header: Vec<String> = ["C_F_fF", "C_q_fF", "kappa_over_2chi"].map(String::from).to_vec();
    let mut rows = Vec::new();
    for (i, &cf) in m.c_f.iter().enumerate() {
        for (j, &cq) in m.c_q.iter().enumerate() {
            rows.push(vec![num(to_femtofarads(cf)), num(to_femtofarads(cq)), num(m.ratio[i][j])]);
        }
    }
    Ok(vec![write_csv(&cfg.out_dir, "snr_map.csv", &header, &rows)?])
}

/// `n_crit` of the configured circuit, from the exact coupling.
fn critical_photons(cfg: &RunConfig) -> Result<f64, CliError> {
    let (q, res, c) = (cfg.transmon()?, cfg.resonator()?, cfg.couplings()?);
    let g = g_exact(&q, &res, &c);
    let d = DispersiveParams::new(g, q.omega_ge() - res.omega_r(), q.delta_anh(), 1.0)?;
    Ok(d.n_crit)
}

pub fn cmd_fidelity_map(cfg: &RunConfig) -> Result<Vec<PathBuf>, CliError> {
    let base = cfg.measurement()?;
    let tm = cfg.t_m_grid();
    let m = fidelity_map(&base, &cfg.nbar_grid(), &tm, critical_photons(cfg)?)?;
    let header: Vec<String> = ["nbar", "t_m_us", "F"].map(String::from).to_vec();
    let mut rows = Vec::new();
    for (i, &n) in m.nbar.iter().enumerate() {
        for (j, &t) in m.t_m.iter().enumerate() {
            rows.push(vec![num(n), num(t * 1e6), num(m.fidelity[i][j])]);
        }
    }
    let main = write_csv(&cfg.out_dir, "fidelity_map.csv", &header, &rows)?;

    let header: Vec<String> = ["series", "value", "nbar", "t_m_us"].map(String::from).to_vec();
    let mut rows = Vec::new();
    for c in &m.contours {
        for &(n, t) in &c.points {
            rows.push(vec!["iso_fidelity".into(), num(c.level), num(n), num(t * 1e6)]);
        }
    }
    for &t in [tm[0], tm[tm.len() - 1]].iter() {
        rows.push(vec!["n_crit".into(), num(m.n_crit), num(m.n_crit), num(t * 1e6)]);
    }
    let side = write_csv(&cfg.out_dir, "fidelity_map_contours.csv", &header, &rows)?;
    Ok(vec![main, side])
}

pub fn cmd_design(cfg: &RunConfig) -> Result<Vec<PathBuf>, CliError> {
    let (q, res) = (cfg.transmon()?, cfg.resonator()?);
    let report = design_report(&q, &res, &cfg.targets()?, &cfg.sweep_plan())?;
    for r in &report.table {
        let reference = r.reference.map(num).unwrap_or_default();
        println!("{:<34} {:<18} {:>16} {:>16} {}", r.quantity, r.symbol, num(r.value), reference, r.unit);
    }
    let text = serde_json::to_string_pretty(&report)
        .map_err(|e| CliError::Output(format!("cannot serialize design report: {e}")))?;
    Ok(vec![write_text(&cfg.out_dir, "design.json", &text)?])
}

pub fn cmd_mc_validate(cfg: &RunConfig) -> Result<Vec<PathBuf>, CliError> {
    let base = cfg.measurement()?;
    let mc = &cfg.monte_carlo;
    let header: Vec<String> =
        ["nbar", "t_m_us", "analytic_F", "empirical_F", "stderr", "analytic_R", "empirical_R", "within_3_sigma"]
            .map(String::from)
            .to_vec();
    let mut rows = Vec::new();
    for (k, (&n, &t_us)) in mc.nbar_values.iter().zip(&mc.t_m_us_values).enumerate() {
        let t = t_us * 1e-6;
        let m = base.with_mean_photons(n)?.with_duration(t)?;
        let dt = t / mc.samples_per_record as f64;
        let r = monte_carlo_fidelity(&m, mc.n_traj, dt, cfg.seed.wrapping_add(k as u64))?;
        rows.push(vec![
            num(n),
            num(t_us),
            num(r.analytic_f),
            num(r.empirical_f),
            num(r.stderr),
            num(r.analytic_r),
            num(r.empirical_r),
            r.agrees_within(3.0).to_string(),
        ]);
    }
    Ok(vec![write_csv(&cfg.out_dir, "mc_validate.csv", &header, &rows)?])
}
