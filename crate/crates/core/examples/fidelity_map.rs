//! Closed-form assignment fidelity: measurement times for target fidelities
//! and a coarse fidelity map. Run with `cargo run --example fidelity_map`.

use notch_readout::readout::{fidelity_map, required_measurement_time, MeasurementConfig, RateConvention};
use notch_readout::units::mhz;

fn main() -> notch_readout::Result<()> {
    let kappa = mhz(5.0);
    for convention in [RateConvention::Cyclic, RateConvention::Angular] {
        println!("{convention:?} rate convention");
        for nbar in [1.0, 25.0] {
            let times: Vec<String> = [0.95, 0.99, 0.999]
                .iter()
                .map(|&f| required_measurement_time(f, nbar, kappa, 1.0, convention).map(|t| format!("{:.1} ns", t * 1e9)))
                .collect::<Result<_, _>>()?;
            println!("  n̄ = {nbar:>4}: {}", times.join(", "));
        }
    }

    let base = MeasurementConfig::with_photons(kappa, mhz(2.5), 1.0, 1e-6)?;
    let nbar: Vec<f64> = [1.0, 2.0, 5.0, 10.0, 25.0, 50.0].to_vec();
    let t_m: Vec<f64> = (0..=8).map(|i| i as f64 * 25e-9).collect();
    let m = fidelity_map(&base, &nbar, &t_m, 25.0)?;
    print!("\n{:>6}", "n̄");
    for t in &m.t_m {
        print!(" {:>7}", format!("{:.0}ns", t * 1e9));
    }
    println!();
    for (i, n) in m.nbar.iter().enumerate() {
        let marker = if *n > m.n_crit { " (above n_crit)" } else { "" };
        print!("{n:>6}");
        for f in &m.fidelity[i] {
            print!(" {f:>7.4}");
        }
        println!("{marker}");
    }
    Ok(())
}
