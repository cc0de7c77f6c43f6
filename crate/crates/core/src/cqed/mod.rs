//! Circuit-QED analysis of the combined readout/filter circuit.

mod circuit;
mod coupling;
mod dispersive;
mod filter;
mod linewidth;
mod params;

pub use circuit::{
    delta_circuit, nominal_couplings, nominal_star_couplings, notch_frequency, qubit_admittance,
    qubit_admittance_delta, star_circuit, t1_exact, t1_purcell, z_sub, CONDUCTANCE_FLOOR, ENVIRONMENT, QUBIT,
    RESONATOR,
};
pub use coupling::{g_approx, g_exact, LoadedCapacitances};
pub use dispersive::{chi_shifts, ChiShifts};
pub use filter::{
    cavity_filter_function, filter_function, t1_cap, t1_cqed_approx, t1_filter_approx, t1_filter_approx_at,
};
pub use linewidth::{
    kappa_approx_simple, kappa_effective, kappa_exact, kappa_from_natural_frequency, loaded_resonator_frequency,
    resonator_mode,
};
pub use params::{DispersiveParams, ResonatorParams, TransmonParams};

use crate::error::Result;

/// Dispersive parameters of a circuit from its exact coupling and linewidth.
///
/// The detuning is taken against the bare resonator frequency.
pub fn dispersive_params(q: &TransmonParams, res: &ResonatorParams, c: &crate::netcore::CouplingSet) -> Result<DispersiveParams> {
    let g = g_exact(q, res, c);
    let kappa = kappa_exact(q, res, c)?;
    DispersiveParams::new(g, q.omega_ge() - res.omega_r(), q.delta_anh(), kappa)
}
