//! Design synthesis: notch placement, coupling-capacitor selection, filter
//! bandwidths and the sweep datasets around a design.

mod report;
mod solve;
mod sweeps;
mod targets;

pub use report::{design_report, Bandwidth, DesignReport, Diagnostics, TableRow};
pub use solve::{delta_filter_for_star, filter_bandwidth, solve_couplings, solve_filter_cap, CouplingSolution};
pub use sweeps::{coupling_sweep, kappa_over_2chi, snr_map, t1_spectrum, CouplingSweep, SnrMap, SweepPlan, T1Spectrum};
pub use targets::DesignTargets;
