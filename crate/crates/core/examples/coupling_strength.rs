//! Exact and approximate qubit–resonator coupling, and how little the filter
//! capacitor costs in g. Run with `cargo run --example coupling_strength`.

use notch_readout::cqed::{g_approx, g_exact, nominal_couplings, ResonatorParams, TransmonParams};
use notch_readout::units::{femtofarads, ghz, to_mhz};

fn main() -> notch_readout::Result<()> {
    let res = ResonatorParams::nominal();
    let c = nominal_couplings();
    let q = TransmonParams::nominal();
    println!("nominal: g_exact = {:.2} MHz, g_approx = {:.2} MHz", to_mhz(g_exact(&q, &res, &c)), to_mhz(g_approx(&q, &res, &c)));

    println!("\ng/2π (MHz) versus qubit frequency and filter capacitor");
    let filters = [0.0, 0.25, 0.5, 1.0, 2.0];
    print!("{:>8}", "f (GHz)");
    for cf in filters {
        print!(" {:>9}", format!("{cf} fF"));
    }
    println!();
    for f in [4.0, 4.5, 5.0, 5.5, 6.0] {
        let qf = q.retuned(ghz(f))?;
        print!("{f:>8.2}");
        for cf in filters {
            print!(" {:>9.3}", to_mhz(g_exact(&qf, &res, &c.with_delta_filter(femtofarads(cf))?)));
        }
        println!();
    }

    let drop = g_exact(&q, &res, &c) - g_exact(&q, &res, &c.with_delta_filter(0.0)?);
    println!("\nchange in g from adding the 0.5 fF filter capacitor: {:+.3} MHz", to_mhz(drop));
    Ok(())
}
