//! Synthesizes the coupling capacitors for a 5 GHz qubit and prints the
//! parameter table. Run with `cargo run --release --example design_table`.

use notch_readout::cqed::{ResonatorParams, TransmonParams};
use notch_readout::designer::{design_report, DesignTargets, SweepPlan};

fn main() -> notch_readout::Result<()> {
    let plan = SweepPlan { points: 201, ..SweepPlan::default() };
    let report = design_report(&TransmonParams::nominal(), &ResonatorParams::nominal(), &DesignTargets::default(), &plan)?;

    println!("{:<34} {:<16} {:>12} {:>10} {:>9}", "quantity", "symbol", "value", "reference", "dev");
    for r in &report.table {
        let (reference, dev) = match (r.reference, r.deviation) {
            (Some(x), Some(d)) => (format!("{x}"), format!("{:+.2}%", 100.0 * d)),
            _ => (String::new(), String::new()),
        };
        println!("{:<34} {:<16} {:>12.4} {:>10} {:>9} {}", r.quantity, r.symbol, r.value, reference, dev, r.unit);
    }
    let d = report.diagnostics;
    println!(
        "\nconverged in {} rounds; residuals g {:.1e}, κ/2χ {:.1e}; notch error {:.1e}",
        d.iterations, d.g_residual, d.kappa_residual, d.notch_error
    );
    Ok(())
}
