//! Lumped-network algebra and the star/Δ capacitor transform.
//!
//! Run with `cargo run --example ydelta_transform`.

use notch_readout::netcore::{compose, delta_to_y, y_to_delta, OnePortNetwork, StarCapacitances};
use notch_readout::units::{femtofarads, ghz, nanohenries, to_femtofarads};

fn main() -> notch_readout::Result<()> {
    // A parallel LC tank evaluated below its resonance looks inductive.
    let tank = OnePortNetwork::parallel(vec![
        OnePortNetwork::inductor(nanohenries(1.2))?,
        OnePortNetwork::capacitor(femtofarads(500.0))?,
    ])?;
    for f in [4.0, 5.0, 6.0, 7.0] {
        let z = compose(&tank, ghz(f))?;
        println!("tank at {f} GHz: {:+.3} {:+.3}j Ω", z.re(), z.im());
    }

    // An open branch in parallel changes nothing.
    let with_open = OnePortNetwork::parallel(vec![tank.clone(), OnePortNetwork::Open])?;
    assert_eq!(compose(&with_open, ghz(5.0))?, compose(&tank, ghz(5.0))?);

    let star = StarCapacitances::new(femtofarads(345.0), femtofarads(12.0), femtofarads(15.4));
    let delta = y_to_delta(&star)?;
    println!(
        "star (C'_F, C'_q, C'_κ) = (345, 12.0, 15.4) fF  ->  Δ (C_F, C_q, C_κ) = ({:.3}, {:.3}, {:.3}) fF",
        to_femtofarads(delta.c_f),
        to_femtofarads(delta.c_q),
        to_femtofarads(delta.c_kappa)
    );
    let back = delta_to_y(&delta)?;
    println!(
        "and back: ({:.6}, {:.6}, {:.6}) fF",
        to_femtofarads(back.c_f),
        to_femtofarads(back.c_q),
        to_femtofarads(back.c_kappa)
    );
    Ok(())
}
