//! Resonator linewidth three ways, the loaded resonator frequency, and the
//! dispersive shifts. Run with `cargo run --example resonator_linewidth`.

use notch_readout::cqed::{
    dispersive_params, kappa_approx_simple, kappa_effective, kappa_exact, kappa_from_natural_frequency,
    loaded_resonator_frequency, nominal_couplings, ResonatorParams, TransmonParams,
};
use notch_readout::units::{to_ghz, to_mhz};

fn main() -> notch_readout::Result<()> {
    let q = TransmonParams::nominal();
    let res = ResonatorParams::nominal();
    let c = nominal_couplings();
    let star = c.star().expect("nominal circuit has a star form");

    println!("κ/2π estimates (MHz)");
    println!("  simple, star C'_κ    {:.3}", to_mhz(kappa_approx_simple(&q, &res, star.c_kappa, c.z_env())?));
    println!("  simple, Δ C_κ        {:.3}", to_mhz(kappa_approx_simple(&q, &res, c.delta().c_kappa, c.z_env())?));
    println!("  effective R and C    {:.3}", to_mhz(kappa_effective(&res, &c)?));
    println!("  half-power width     {:.3}", to_mhz(kappa_exact(&q, &res, &c)?));
    println!("  mode decay rate      {:.3}", to_mhz(kappa_from_natural_frequency(&q, &res, &c)?));

    let w = loaded_resonator_frequency(&q, &res, &c)?;
    println!("\nbare resonator {:.4} GHz, loaded {:.4} GHz", to_ghz(res.omega_r()), to_ghz(w));

    let d = dispersive_params(&q, &res, &c)?;
    println!(
        "\ng = {:.2} MHz, Δ = {:.1} MHz, χ0 = {:.3} MHz, χ1 = {:.3} MHz, χ = {:.3} MHz, n_crit = {:.1}",
        to_mhz(d.g),
        to_mhz(d.detuning),
        to_mhz(d.chi0),
        to_mhz(d.chi1),
        to_mhz(d.chi),
        d.n_crit
    );
    println!("κ/2|χ| = {:.4}", d.kappa / (2.0 * d.chi.abs()));
    Ok(())
}
