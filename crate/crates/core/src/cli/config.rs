//! Run configuration in engineering units.
//!
//! Every key carries its unit in the name (`_fF`, `_nH`, `_GHz`, `_MHz`,
//! `_ohm`, `_ms`, `_us`). Omitted keys take the nominal device values.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::cqed::{ResonatorParams, TransmonParams};
use crate::designer::{DesignTargets, SweepPlan};
use crate::netcore::{CouplingSet, DeltaCapacitances};
use crate::readout::{MeasurementConfig, RateConvention};
use crate::units::{femtofarads, ghz, mhz, nanohenries};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
#[allow(non_snake_case)]
pub struct SweepSection {
    pub freq_min_GHz: f64,
    pub freq_max_GHz: f64,
    pub points: usize,
    pub c_f_values_fF: Vec<f64>,
    pub c_q_values_fF: Vec<f64>,
}

impl Default for SweepSection {
    fn default() -> Self {
        SweepSection {
            freq_min_GHz: 4.0,
            freq_max_GHz: 6.5,
            points: 2001,
            c_f_values_fF: vec![0.0, 0.25, 0.5, 1.0, 2.0],
            c_q_values_fF: vec![5.0, 8.0, 11.1, 14.0, 17.0, 20.0],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
#[allow(non_snake_case)]
pub struct ReadoutSection {
    pub kappa_MHz: f64,
    pub chi_MHz: f64,
    pub amp_gain: f64,
    pub amp_added_noise: f64,
    pub nbar_min: f64,
    pub nbar_max: f64,
    pub nbar_points: usize,
    pub t_m_min_us: f64,
    pub t_m_max_us: f64,
    pub t_m_points: usize,
}

impl Default for ReadoutSection {
    fn default() -> Self {
        ReadoutSection {
            kappa_MHz: 5.0,
            chi_MHz: 2.5,
            amp_gain: 1.0,
            amp_added_noise: 0.0,
            nbar_min: 1.0,
            nbar_max: 50.0,
            nbar_points: 50,
            t_m_min_us: 0.0,
            t_m_max_us: 2.0,
            t_m_points: 101,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct MonteCarloSection {
    pub n_traj: usize,
    pub samples_per_record: usize,
    pub nbar_values: Vec<f64>,
    pub t_m_us_values: Vec<f64>,
}

impl Default for MonteCarloSection {
    fn default() -> Self {
        MonteCarloSection {
            n_traj: 100_000,
            samples_per_record: 100,
            nbar_values: vec![1.0, 1.0, 2.0, 5.0, 25.0],
            t_m_us_values: vec![0.3, 1.09, 0.6, 0.15, 0.022],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
#[allow(non_snake_case)]
pub struct RunConfig {
    pub c_sigma_fF: f64,
    /// Josephson inductance; give this or `qubit_freq_GHz`, not both.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_j_nH: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qubit_freq_GHz: Option<f64>,
    pub anharmonicity_MHz: f64,
    pub c_r_fF: f64,
    pub l_r_nH: f64,
    pub z_env_ohm: f64,
    /// Δ coupling capacitors used by the analysis commands.
    pub c_f_fF: f64,
    pub c_q_fF: f64,
    pub c_kappa_fF: f64,
    pub g_target_MHz: f64,
    pub kappa_over_2chi_target: f64,
    pub t1_thresholds_ms: Vec<f64>,
    pub c_f_min_fF: f64,
    pub seed: u64,
    pub convention: RateConvention,
    pub out_dir: PathBuf,
    pub sweep: SweepSection,
    pub readout: ReadoutSection,
    pub monte_carlo: MonteCarloSection,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            c_sigma_fF: 65.0,
            l_j_nH: None,
            qubit_freq_GHz: None,
            anharmonicity_MHz: -297.0,
            c_r_fF: 500.0,
            l_r_nH: 1.2,
            z_env_ohm: 50.0,
            c_f_fF: 0.50,
            c_q_fF: 11.1,
            c_kappa_fF: 14.3,
            g_target_MHz: 150.0,
            kappa_over_2chi_target: 1.0,
            t1_thresholds_ms: vec![1.0, 10.0],
            c_f_min_fF: 0.05,
            seed: 0,
            convention: RateConvention::Cyclic,
            out_dir: PathBuf::from("out"),
            sweep: SweepSection::default(),
            readout: ReadoutSection::default(),
            monte_carlo: MonteCarloSection::default(),
        }
    }
}

const DEFAULT_QUBIT_GHZ: f64 = 5.0;

fn positive(name: &str, v: f64) -> Result<(), CliError> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(CliError::Validation(format!("{name} must be positive, got {v}")))
    }
}

fn non_negative(name: &str, v: f64) -> Result<(), CliError> {
    if v.is_finite() && v >= 0.0 {
        Ok(())
    } else {
        Err(CliError::Validation(format!("{name} must be non-negative, got {v}")))
    }
}

fn increasing(name: &str, lo: f64, hi: f64, points: usize) -> Result<(), CliError> {
    if hi <= lo || points < 2 {
        return Err(CliError::Validation(format!("{name} range needs max > min and at least two points")));
    }
    Ok(())
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        positive("c_sigma_fF", self.c_sigma_fF)?;
        match (self.l_j_nH, self.qubit_freq_GHz) {
            (Some(_), Some(_)) => {
                return Err(CliError::Validation("give l_j_nH or qubit_freq_GHz, not both".into()));
            }
            (Some(l), None) => positive("l_j_nH", l)?,
            (None, Some(f)) => positive("qubit_freq_GHz", f)?,
            (None, None) => {}
        }
        if !(self.anharmonicity_MHz.is_finite() && self.anharmonicity_MHz < 0.0) {
            return Err(CliError::Validation(format!(
                "anharmonicity_MHz must be negative, got {}",
                self.anharmonicity_MHz
            )));
        }
        positive("c_r_fF", self.c_r_fF)?;
        positive("l_r_nH", self.l_r_nH)?;
        positive("z_env_ohm", self.z_env_ohm)?;
        non_negative("c_f_fF", self.c_f_fF)?;
        non_negative("c_q_fF", self.c_q_fF)?;
        non_negative("c_kappa_fF", self.c_kappa_fF)?;
        positive("g_target_MHz", self.g_target_MHz)?;
        positive("kappa_over_2chi_target", self.kappa_over_2chi_target)?;
        for &t in &self.t1_thresholds_ms {
            positive("t1_thresholds_ms", t)?;
        }
        non_negative("c_f_min_fF", self.c_f_min_fF)?;

        let s = &self.sweep;
        positive("sweep.freq_min_GHz", s.freq_min_GHz)?;
        positive("sweep.freq_max_GHz", s.freq_max_GHz)?;
        increasing("sweep frequency", s.freq_min_GHz, s.freq_max_GHz, s.points)?;
        for &c in &s.c_f_values_fF {
            non_negative("sweep.c_f_values_fF", c)?;
        }
        for &c in &s.c_q_values_fF {
            non_negative("sweep.c_q_values_fF", c)?;
        }

        let r = &self.readout;
        positive("readout.kappa_MHz", r.kappa_MHz)?;
        if !r.chi_MHz.is_finite() {
            return Err(CliError::Validation("readout.chi_MHz must be finite".into()));
        }
        positive("readout.amp_gain", r.amp_gain)?;
        non_negative("readout.amp_added_noise", r.amp_added_noise)?;
        non_negative("readout.nbar_min", r.nbar_min)?;
        increasing("readout.nbar", r.nbar_min, r.nbar_max, r.nbar_points)?;
        non_negative("readout.t_m_min_us", r.t_m_min_us)?;
        increasing("readout.t_m", r.t_m_min_us, r.t_m_max_us, r.t_m_points)?;

        let m = &self.monte_carlo;
        if m.n_traj < 1000 {
            return Err(CliError::Validation(format!("monte_carlo.n_traj must be at least 1000, got {}", m.n_traj)));
        }
        if m.samples_per_record < 50 {
            return Err(CliError::Validation(format!(
                "monte_carlo.samples_per_record must be at least 50, got {}",
                m.samples_per_record
            )));
        }
        if m.nbar_values.len() != m.t_m_us_values.len() {
            return Err(CliError::Validation(
                "monte_carlo.nbar_values and monte_carlo.t_m_us_values differ in length".into(),
            ));
        }
        for &n in &m.nbar_values {
            non_negative("monte_carlo.nbar_values", n)?;
        }
        for &t in &m.t_m_us_values {
            positive("monte_carlo.t_m_us_values", t)?;
        }
        Ok(())
    }

    pub fn transmon(&self) -> Result<TransmonParams, CliError> {
        let c = femtofarads(self.c_sigma_fF);
        let d = mhz(self.anharmonicity_MHz);
        Ok(match self.l_j_nH {
            Some(l) => TransmonParams::new(c, nanohenries(l), d)?,
            None => TransmonParams::from_frequency(c, ghz(self.qubit_freq_GHz.unwrap_or(DEFAULT_QUBIT_GHZ)), d)?,
        })
    }

    pub fn resonator(&self) -> Result<ResonatorParams, CliError> {
        Ok(ResonatorParams::new(nanohenries(self.l_r_nH), femtofarads(self.c_r_fF))?)
    }

    pub fn couplings(&self) -> Result<CouplingSet, CliError> {
        let d = DeltaCapacitances::new(femtofarads(self.c_f_fF), femtofarads(self.c_q_fF), femtofarads(self.c_kappa_fF));
        Ok(CouplingSet::from_delta(d, self.z_env_ohm)?)
    }

    /// Design targets; the notch goes to the configured qubit frequency.
    pub fn targets(&self) -> Result<DesignTargets, CliError> {
        Ok(DesignTargets {
            omega_ge_target: self.transmon()?.omega_ge(),
            g_target: mhz(self.g_target_MHz),
            kappa_over_2chi_target: self.kappa_over_2chi_target,
            t1_thresholds: self.t1_thresholds_ms.iter().map(|t| t * 1e-3).collect(),
            c_f_min: femtofarads(self.c_f_min_fF),
            z_env: self.z_env_ohm,
        })
    }

    pub fn sweep_plan(&self) -> SweepPlan {
        let s = &self.sweep;
        SweepPlan {
            omega_min: ghz(s.freq_min_GHz),
            omega_max: ghz(s.freq_max_GHz),
            points: s.points,
            c_f_values: s.c_f_values_fF.iter().copied().map(femtofarads).collect(),
            c_q_values: s.c_q_values_fF.iter().copied().map(femtofarads).collect(),
        }
    }

    /// Measurement settings for the fidelity map, at the first grid photon number
    /// and the longest grid time.
    pub fn measurement(&self) -> Result<MeasurementConfig, CliError> {
        let r = &self.readout;
        Ok(MeasurementConfig::with_photons(mhz(r.kappa_MHz), mhz(r.chi_MHz), r.nbar_min, r.t_m_max_us * 1e-6)?
            .with_amplifier(r.amp_gain, r.amp_added_noise)?
            .with_convention(self.convention))
    }

    pub fn nbar_grid(&self) -> Vec<f64> {
        linspace(self.readout.nbar_min, self.readout.nbar_max, self.readout.nbar_points)
    }

    pub fn t_m_grid(&self) -> Vec<f64> {
        linspace(self.readout.t_m_min_us, self.readout.t_m_max_us, self.readout.t_m_points)
            .into_iter()
            .map(|t| t * 1e-6)
            .collect()
    }

    pub fn to_toml(&self) -> Result<String, CliError> {
        toml::to_string(self).map_err(|e| CliError::Output(format!("cannot serialize configuration: {e}")))
    }

    /// Parses and validates a document; unknown keys are collected and rejected.
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        let de = toml::Deserializer::parse(text).map_err(|e| CliError::Parse(e.to_string()))?;
        let mut unknown = Vec::new();
        let cfg: RunConfig = serde_ignored::deserialize(de, |path| unknown.push(path.to_string()))
            .map_err(|e| CliError::Parse(e.to_string()))?;
        if !unknown.is_empty() {
            return Err(CliError::UnknownKey(unknown));
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Reads, parses and validates a configuration file.
pub fn parse_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            CliError::MissingFile(path.to_path_buf())
        } else {
            CliError::Parse(format!("{}: {e}", path.display()))
        }
    })?;
    RunConfig::from_toml(&text)
}
