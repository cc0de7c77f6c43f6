//! The combined readout/filter network as seen from the qubit.
//!
//! Star form: the qubit reaches a star node through `C'_q`; the star node goes
//! to the resonator tank through `C'_F` and to the environment through `C'_κ`
//! followed by `Z_env`. The filter capacitor in series with the tank gives the
//! sub-circuit an impedance zero (a notch) at `ω_F < ω_R`.

use super::params::{ResonatorParams, TransmonParams};
use crate::error::{require_positive, Error, Result};
use crate::netcore::{
    ComplexAdmittance, ComplexImpedance, CouplingSet, DeltaCapacitances, Element, NodalCircuit, Node,
    StarCapacitances,
};
use crate::units::femtofarads;

/// Conductance below which the qubit is considered perfectly isolated.
pub const CONDUCTANCE_FLOOR: f64 = 1e-25;

pub const QUBIT: usize = 0;
pub const RESONATOR: usize = 1;
pub const ENVIRONMENT: usize = 2;

/// Nominal Δ couplings: `C_F` = 0.50 fF, `C_q` = 11.1 fF, `C_κ` = 14.3 fF into 50 Ω.
pub fn nominal_couplings() -> CouplingSet {
    CouplingSet::from_delta(DeltaCapacitances::new(femtofarads(0.50), femtofarads(11.1), femtofarads(14.3)), 50.0)
        .expect("nominal couplings")
}

/// Nominal star couplings: `C'_F` = 345 fF, `C'_q` = 12.0 fF, `C'_κ` = 15.4 fF into 50 Ω.
pub fn nominal_star_couplings() -> CouplingSet {
    CouplingSet::from_star(StarCapacitances::new(femtofarads(345.0), femtofarads(12.0), femtofarads(15.4)), 50.0)
        .expect("nominal star couplings")
}

/// `ω_F = 1/√(L_R (C_R + C'_F))`.
pub fn notch_frequency(res: &ResonatorParams, c_f_star: f64) -> Result<f64> {
    require_positive("C'_F", c_f_star)?;
    Ok(1.0 / (res.l_r() * (res.c_r() + c_f_star)).sqrt())
}

/// Impedance to ground of `C'_F` in series with the resonator tank.
///
/// Closed form `ω_R³ Z_R (ω_F² − ω²) / [jω (ω_R² − ω_F²)(ω_R² − ω²)]`; returns
/// the open sentinel at the tank's antiresonance `ω = ω_R`.
pub fn z_sub(res: &ResonatorParams, c_f_star: f64, omega: f64) -> Result<ComplexImpedance> {
    require_positive("angular frequency", omega)?;
    let wf = notch_frequency(res, c_f_star)?;
    let wr = res.omega_r();
    let (wr2, wf2, w2) = (wr * wr, wf * wf, omega * omega);
    if w2 == wr2 {
        return Ok(ComplexImpedance::Open);
    }
    let x = wr * wr2 * res.z_r() * (wf2 - w2) / (omega * (wr2 - wf2) * (wr2 - w2));
    // 1/j = −j
    Ok(ComplexImpedance::new(0.0, -x))
}

fn capacitor_z(c: f64, omega: f64) -> ComplexImpedance {
    ComplexImpedance::new(0.0, -1.0 / (omega * c))
}

/// Admittance the qubit sees, `Y_q = 1/Z_q`.
///
/// Uses the star closed form `Z_q = 1/jωC'_q + Z_sub ‖ (1/jωC'_κ + Z_env)` when
/// the star form exists, and nodal analysis of the Δ network otherwise (for
/// instance with `C_F = 0`, where the star filter capacitor is a wire).
pub fn qubit_admittance(res: &ResonatorParams, c: &CouplingSet, omega: f64) -> Result<ComplexAdmittance> {
    require_positive("angular frequency", omega)?;
    match c.star() {
        Some(star) => {
            let zs = z_sub(res, star.c_f, omega)?;
            let zb = capacitor_z(star.c_kappa, omega).series(ComplexImpedance::new(c.z_env(), 0.0));
            let zq = capacitor_z(star.c_q, omega).series(zs.parallel(zb));
            Ok(zq.to_admittance())
        }
        None => qubit_admittance_delta(res, c, omega),
    }
}

/// `Y_q` from nodal analysis of the Δ network.
pub fn qubit_admittance_delta(res: &ResonatorParams, c: &CouplingSet, omega: f64) -> Result<ComplexAdmittance> {
    delta_circuit(None, res, c)?.driving_point_admittance(QUBIT, omega)
}

/// Δ network: nodes [`QUBIT`], [`RESONATOR`], [`ENVIRONMENT`].
///
/// With `qubit` given, the `L_J`–`C_Σ` oscillator is attached to the qubit node;
/// otherwise the qubit node is left as a bare port.
pub fn delta_circuit(
    qubit: Option<&TransmonParams>,
    res: &ResonatorParams,
    c: &CouplingSet,
) -> Result<NodalCircuit> {
    let d = c.delta();
    let mut n = NodalCircuit::new(3);
    let (q, r, e) = (Node::N(QUBIT), Node::N(RESONATOR), Node::N(ENVIRONMENT));
    n.connect_capacitor(q, r, d.c_q)?;
    n.connect_capacitor(q, e, d.c_f)?;
    n.connect_capacitor(r, e, d.c_kappa)?;
    n.connect(r, Node::Ground, Element::Capacitor(res.c_r()))?;
    n.connect(r, Node::Ground, Element::Inductor(res.l_r()))?;
    n.connect(e, Node::Ground, Element::Resistor(c.z_env()))?;
    if let Some(t) = qubit {
        n.connect(q, Node::Ground, Element::Capacitor(t.c_sigma()))?;
        n.connect(q, Node::Ground, Element::Inductor(t.l_j()))?;
    }
    Ok(n)
}

/// Star network: the Δ node numbering plus the star centre as node 3.
pub fn star_circuit(
    qubit: Option<&TransmonParams>,
    res: &ResonatorParams,
    c: &CouplingSet,
) -> Result<NodalCircuit> {
    let star = c.star().ok_or_else(|| Error::domain("coupling set has no star form"))?;
    let mut n = NodalCircuit::new(4);
    let (q, r, e, x) = (Node::N(QUBIT), Node::N(RESONATOR), Node::N(ENVIRONMENT), Node::N(3));
    n.connect(q, x, Element::Capacitor(star.c_q))?;
    n.connect(x, r, Element::Capacitor(star.c_f))?;
    n.connect(x, e, Element::Capacitor(star.c_kappa))?;
    n.connect(r, Node::Ground, Element::Capacitor(res.c_r()))?;
    n.connect(r, Node::Ground, Element::Inductor(res.l_r()))?;
    n.connect(e, Node::Ground, Element::Resistor(c.z_env()))?;
    if let Some(t) = qubit {
        n.connect(q, Node::Ground, Element::Capacitor(t.c_sigma()))?;
        n.connect(q, Node::Ground, Element::Inductor(t.l_j()))?;
    }
    Ok(n)
}

/// Purcell-limited lifetime `T1 = C_Σ / Re[Y_q]`.
///
/// Conductances below [`CONDUCTANCE_FLOOR`] give `+∞`; a clearly negative
/// conductance means the admittance came from a non-passive model.
pub fn t1_purcell(q: &TransmonParams, y_q: ComplexAdmittance) -> Result<f64> {
    let g = match y_q {
        ComplexAdmittance::Short => return Ok(0.0),
        ComplexAdmittance::Finite(y) => y.re,
    };
    if g < -CONDUCTANCE_FLOOR {
        return Err(Error::Passivity(format!("qubit sees conductance {g:e} S")));
    }
    if g < CONDUCTANCE_FLOOR {
        return Ok(f64::INFINITY);
    }
    Ok(q.c_sigma() / g)
}

/// Exact Purcell `T1` of a qubit at angular frequency `omega`.
pub fn t1_exact(q: &TransmonParams, res: &ResonatorParams, c: &CouplingSet, omega: f64) -> Result<f64> {
    t1_purcell(q, qubit_admittance(res, c, omega)?)
}
