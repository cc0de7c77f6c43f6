//! Coupling synthesis and filter bandwidth behaviour.

use notch_readout::cqed::{g_exact, notch_frequency, ResonatorParams, TransmonParams};
use notch_readout::designer::{
    filter_bandwidth, kappa_over_2chi, solve_couplings, DesignTargets,
};
use notch_readout::units::{ghz, mhz};
use notch_readout::Error;

fn targets() -> DesignTargets {
    DesignTargets { c_f_min: 0.0, ..DesignTargets::default() }
}

#[test]
fn notch_tracks_the_qubit() {
    let res = ResonatorParams::nominal();
    for f in [4.6, 5.0, 5.4] {
        let t = DesignTargets { omega_ge_target: ghz(f), ..targets() };
        let sol = solve_couplings(&TransmonParams::nominal(), &res, &t).unwrap();
        let wf = notch_frequency(&res, sol.couplings.star().unwrap().c_f).unwrap();
        assert!((wf / ghz(f) - 1.0).abs() < 1e-9, "{f} GHz: notch at {wf}");
    }
}

#[test]
fn matched_readout_and_target_coupling() {
    let res = ResonatorParams::nominal();
    let t = targets();
    let q = TransmonParams::nominal();
    let sol = solve_couplings(&q, &res, &t).unwrap();
    let ratio = kappa_over_2chi(&q, &res, &sol.couplings).unwrap();
    assert!((ratio - 1.0).abs() <= 1e-3, "{ratio}");
    let g = g_exact(&q, &res, &sol.couplings);
    assert!((g / t.g_target - 1.0).abs() <= 1e-3);
}

#[test]
fn coupling_capacitor_grows_with_target() {
    let res = ResonatorParams::nominal();
    let mut last = 0.0;
    for g in [90.0, 120.0, 150.0, 180.0] {
        let t = DesignTargets { g_target: mhz(g), ..targets() };
        let sol = solve_couplings(&TransmonParams::nominal(), &res, &t).unwrap();
        let cq = sol.couplings.delta().c_q;
        assert!(cq > last, "C_q not increasing at g = {g} MHz");
        last = cq;
    }
}

#[test]
fn impossible_targets_are_rejected() {
    let res = ResonatorParams::nominal();
    let q = TransmonParams::nominal();
    let zero = DesignTargets { g_target: 0.0, ..targets() };
    assert!(matches!(solve_couplings(&q, &res, &zero), Err(Error::Infeasible(_))));
    let above = DesignTargets { omega_ge_target: ghz(7.0), ..targets() };
    assert!(matches!(solve_couplings(&q, &res, &above), Err(Error::Infeasible(_))));
    let strong = DesignTargets { g_target: mhz(400.0), ..targets() };
    assert!(matches!(solve_couplings(&q, &res, &strong), Err(Error::Infeasible(_))));
}

#[test]
fn bandwidth_follows_inverse_square_root_of_threshold() {
    let res = ResonatorParams::nominal();
    let q = TransmonParams::nominal();
    let sol = solve_couplings(&q, &res, &targets()).unwrap();
    let b1 = filter_bandwidth(&q, &res, &sol.couplings, 1e-3).unwrap();
    let b100 = filter_bandwidth(&q, &res, &sol.couplings, 100e-3).unwrap();
    assert!((b1 / b100 / 10.0 - 1.0).abs() < 0.05, "{}", b1 / b100);
}
