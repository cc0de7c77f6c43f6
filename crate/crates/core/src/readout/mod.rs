//! Dispersive readout: pointer states, Fisher separation, assignment fidelity
//! and a homodyne-trajectory simulator.

mod analytic;
mod config;
mod map;
mod montecarlo;

pub use analytic::{
    assignment_fidelity, fisher_separation, lda_kernel, mean_photons, noise_density, pointer_separation_norm,
    pointer_separation_norm_drive, required_measurement_time, separation, separation_for_fidelity,
    steady_state_kernel, steady_state_means,
};
pub use config::{MeasurementConfig, RateConvention};
pub use map::{fidelity_map, Contour, FidelityMap, CONTOUR_LEVELS};
pub use montecarlo::{monte_carlo_fidelity, summarize_scores, MonteCarloResult, ScoreSummary, TrajectoryBatch};
