//! Invariants of the circuit and coupling models, checked on random inputs.

use nalgebra::Matrix2;
use notch_readout::cqed::{
    chi_shifts, delta_circuit, g_exact, qubit_admittance, star_circuit, t1_exact, t1_purcell, ResonatorParams,
    TransmonParams, QUBIT,
};
use notch_readout::designer::solve_filter_cap;
use notch_readout::cqed::notch_frequency;
use notch_readout::netcore::{
    compose, delta_to_y, y_to_delta, CouplingSet, DeltaCapacitances, OnePortNetwork, StarCapacitances,
};
use notch_readout::units::{femtofarads as ff, ghz, mhz};
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn cap() -> impl Strategy<Value = f64> {
    (0.01..1000.0f64).prop_map(ff)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn star_delta_round_trip(a in cap(), b in cap(), c in cap()) {
        let s = StarCapacitances::new(a, b, c);
        let back = delta_to_y(&y_to_delta(&s).unwrap()).unwrap();
        prop_assert!(rel(back.c_f, a) <= 1e-12 && rel(back.c_q, b) <= 1e-12 && rel(back.c_kappa, c) <= 1e-12);
    }

    #[test]
    fn transform_is_homogeneous(a in cap(), b in cap(), c in cap(), k in 0.01..100.0f64) {
        let d = y_to_delta(&StarCapacitances::new(a, b, c)).unwrap();
        let dk = y_to_delta(&StarCapacitances::new(k * a, k * b, k * c)).unwrap();
        prop_assert!(rel(dk.c_f, k * d.c_f) <= 1e-12);
        prop_assert!(rel(dk.c_q, k * d.c_q) <= 1e-12);
        prop_assert!(rel(dk.c_kappa, k * d.c_kappa) <= 1e-12);
    }

    #[test]
    fn series_and_parallel_compose_like_impedances(r in 1.0..1e3f64, c in 1e-15..1e-12f64, l in 1e-10..1e-8f64, w in 1e8..1e11f64) {
        let parts = || vec![
            OnePortNetwork::resistor(r).unwrap(),
            OnePortNetwork::capacitor(c).unwrap(),
            OnePortNetwork::inductor(l).unwrap(),
        ];
        let zs: Vec<_> = parts().iter().map(|p| compose(p, w).unwrap().finite().unwrap()).collect();
        let series = compose(&OnePortNetwork::series(parts()).unwrap(), w).unwrap().finite().unwrap();
        let want = zs[0] + zs[1] + zs[2];
        prop_assert!((series - want).norm() <= 1e-12 * want.norm());
        let parallel = compose(&OnePortNetwork::parallel(parts()).unwrap(), w).unwrap().finite().unwrap();
        let want = 1.0 / (1.0 / zs[0] + 1.0 / zs[1] + 1.0 / zs[2]);
        prop_assert!((parallel - want).norm() <= 1e-12 * want.norm());
    }

    #[test]
    fn closed_form_matches_both_nodal_topologies(cf in 50.0..1500.0f64, cq in 2.0..30.0f64, ck in 2.0..30.0f64, f in 3.0..7.0f64) {
        let res = ResonatorParams::nominal();
        let q = TransmonParams::nominal();
        let c = CouplingSet::from_star(StarCapacitances::new(ff(cf), ff(cq), ff(ck)), 50.0).unwrap();
        let w = ghz(f);
        prop_assume!(rel(w, res.omega_r()) > 1e-6 && rel(w, notch_frequency(&res, ff(cf)).unwrap()) > 1e-6);
        let closed = t1_purcell(&q, qubit_admittance(&res, &c, w).unwrap()).unwrap();
        let star = t1_purcell(&q, star_circuit(None, &res, &c).unwrap().driving_point_admittance(QUBIT, w).unwrap()).unwrap();
        let delta = t1_purcell(&q, delta_circuit(None, &res, &c).unwrap().driving_point_admittance(QUBIT, w).unwrap()).unwrap();
        prop_assert!(rel(star, closed) <= 1e-9, "{star} vs {closed}");
        prop_assert!(rel(delta, closed) <= 1e-9, "{delta} vs {closed}");
    }

    #[test]
    fn coupling_matches_inverse_capacitance_matrix(cf in 0.0..3.0f64, cq in 0.5..40.0f64, ck in 1.0..40.0f64, f in 4.0..6.0f64) {
        let res = ResonatorParams::nominal();
        let q = TransmonParams::nominal().retuned(ghz(f)).unwrap();
        let c = CouplingSet::from_delta(DeltaCapacitances::new(ff(cf), ff(cq), ff(ck)), 50.0).unwrap();
        // environment node grounded, so it drops out of the Maxwell matrix
        let m = Matrix2::new(
            q.c_sigma() + ff(cf) + ff(cq), -ff(cq),
            -ff(cq), res.c_r() + ff(ck) + ff(cq),
        );
        let inv = m.try_inverse().unwrap();
        let z1 = (q.l_j() * inv[(0, 0)]).sqrt();
        let z2 = (res.l_r() * inv[(1, 1)]).sqrt();
        let oracle = inv[(0, 1)].abs() / (2.0 * (z1 * z2).sqrt());
        prop_assert!(rel(g_exact(&q, &res, &c), oracle) <= 1e-10);
    }

    #[test]
    fn dispersive_shift_is_half_the_difference(g in 10.0..300.0f64, det in -3000.0..-500.0f64, anh in -400.0..-100.0f64) {
        let s = chi_shifts(mhz(g), mhz(det), mhz(anh)).unwrap();
        let (g2, d, a) = (mhz(g).powi(2), mhz(det), mhz(anh));
        prop_assert!(rel(s.chi0, -g2 / d) <= 1e-12);
        // χ₁ − χ₀ = 2g²δ/(Δ(Δ + δ)), written independently of the implementation
        prop_assert!(rel(s.chi, g2 * a / (d * (d + a))) <= 1e-10);
        prop_assert!(rel(s.chi1, s.chi0 + 2.0 * s.chi) <= 1e-12);
    }

    #[test]
    fn filter_cap_round_trip(f in 2.0..6.4f64) {
        let res = ResonatorParams::nominal();
        let cf = solve_filter_cap(&res, ghz(f)).unwrap();
        prop_assert!(rel(notch_frequency(&res, cf).unwrap(), ghz(f)) <= 1e-12);
    }

    #[test]
    fn protection_grows_near_notch(offset in 1.0..200.0f64) {
        let q = TransmonParams::nominal();
        let res = ResonatorParams::nominal();
        let c = CouplingSet::from_star(StarCapacitances::new(ff(345.0), ff(12.0), ff(15.4)), 50.0).unwrap();
        let wf = notch_frequency(&res, ff(345.0)).unwrap();
        let near = t1_exact(&q, &res, &c, wf + mhz(offset)).unwrap();
        let far = t1_exact(&q, &res, &c, wf + mhz(2.0 * offset)).unwrap();
        prop_assert!(near > far);
    }
}
