//! Purcell-limited lifetime with and without the notch filter.
//!
//! Prints the exact lifetime next to the closed-form estimates across the
//! qubit band. Run with `cargo run --example t1_spectrum`.

use notch_readout::cqed::{
    nominal_couplings, notch_frequency, t1_cqed_approx, t1_exact, t1_filter_approx, ResonatorParams, TransmonParams,
};
use notch_readout::units::{ghz, mhz, to_ghz};

fn main() -> notch_readout::Result<()> {
    let q = TransmonParams::nominal();
    let res = ResonatorParams::nominal();
    let filtered = nominal_couplings();
    let plain = filtered.with_delta_filter(0.0)?;
    let wf = notch_frequency(&res, filtered.star().expect("filtered circuit").c_f)?;
    println!("notch at {:.4} GHz, resonator at {:.4} GHz\n", to_ghz(wf), to_ghz(res.omega_r()));

    let (kappa, g) = (mhz(5.0), mhz(150.0));
    println!("{:>8} {:>14} {:>14} {:>14} {:>14}", "f (GHz)", "T1 no filter", "T1 filtered", "approx cQED", "approx filter");
    for i in 0..=20 {
        let w = ghz(4.5 + 0.05 * i as f64);
        println!(
            "{:>8.3} {:>14.4e} {:>14.4e} {:>14.4e} {:>14.4e}",
            to_ghz(w),
            t1_exact(&q, &res, &plain, w)?,
            t1_exact(&q, &res, &filtered, w)?,
            t1_cqed_approx(kappa, g, &res, w)?,
            t1_filter_approx(kappa, g, &res, &filtered, w)?,
        );
    }
    println!("\nexactly at the notch: T1 = {:e} s", t1_exact(&q, &res, &filtered, wf)?);
    Ok(())
}
