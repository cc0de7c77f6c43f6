use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::immittance::{reciprocal, ComplexAdmittance, ComplexImpedance};
use crate::error::{require_positive, Error, Result};

/// A lumped two-terminal element. Values are ohms, farads and henries.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Element {
    Resistor(f64),
    Capacitor(f64),
    Inductor(f64),
}

impl Element {
    pub fn resistor(ohms: f64) -> Result<Self> {
        require_positive("resistance", ohms)?;
        Ok(Element::Resistor(ohms))
    }

    pub fn capacitor(farads: f64) -> Result<Self> {
        require_positive("capacitance", farads)?;
        Ok(Element::Capacitor(farads))
    }

    pub fn inductor(henries: f64) -> Result<Self> {
        require_positive("inductance", henries)?;
        Ok(Element::Inductor(henries))
    }

    pub fn value(&self) -> f64 {
        match *self {
            Element::Resistor(v) | Element::Capacitor(v) | Element::Inductor(v) => v,
        }
    }

    /// Admittance at complex frequency `s` (`s = jω` on the real-frequency axis).
    pub fn admittance_at(&self, s: Complex64) -> Complex64 {
        match *self {
            Element::Resistor(r) => Complex64::new(1.0 / r, 0.0),
            Element::Capacitor(c) => s * c,
            Element::Inductor(l) => reciprocal(s * l),
        }
    }
}

/// Impedance of a single element at angular frequency `omega`.
///
/// Capacitors come out purely negative-imaginary, inductors purely
/// positive-imaginary and resistors purely real.
pub fn element_impedance(element: &Element, omega: f64) -> Result<ComplexImpedance> {
    require_positive("angular frequency", omega)?;
    require_positive("element value", element.value())?;
    let z = match *element {
        Element::Resistor(r) => Complex64::new(r, 0.0),
        Element::Capacitor(c) => Complex64::new(0.0, -1.0 / (omega * c)),
        Element::Inductor(l) => Complex64::new(0.0, omega * l),
    };
    Ok(ComplexImpedance::Finite(z))
}

/// A one-port built from series and parallel combinations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum OnePortNetwork {
    Leaf(Element),
    Short,
    Open,
    Series(Vec<OnePortNetwork>),
    Parallel(Vec<OnePortNetwork>),
}

impl OnePortNetwork {
    pub fn resistor(ohms: f64) -> Result<Self> {
        Element::resistor(ohms).map(OnePortNetwork::Leaf)
    }

    pub fn capacitor(farads: f64) -> Result<Self> {
        Element::capacitor(farads).map(OnePortNetwork::Leaf)
    }

    pub fn inductor(henries: f64) -> Result<Self> {
        Element::inductor(henries).map(OnePortNetwork::Leaf)
    }

    pub fn series(children: Vec<OnePortNetwork>) -> Result<Self> {
        if children.len() < 2 {
            return Err(Error::domain("a series combination needs at least two branches"));
        }
        Ok(OnePortNetwork::Series(children))
    }

    pub fn parallel(children: Vec<OnePortNetwork>) -> Result<Self> {
        if children.len() < 2 {
            return Err(Error::domain("a parallel combination needs at least two branches"));
        }
        Ok(OnePortNetwork::Parallel(children))
    }

    /// Checks element values and combinator arity through the whole tree.
    pub fn validate(&self) -> Result<()> {
        match self {
            OnePortNetwork::Leaf(e) => require_positive("element value", e.value()),
            OnePortNetwork::Short | OnePortNetwork::Open => Ok(()),
            OnePortNetwork::Series(ch) | OnePortNetwork::Parallel(ch) => {
                if ch.len() < 2 {
                    return Err(Error::domain("combinator with fewer than two branches"));
                }
                ch.iter().try_for_each(OnePortNetwork::validate)
            }
        }
    }
}

/// Evaluates a network to its impedance at `omega`.
///
/// Series branches add as impedances; parallel branches add as admittances,
/// so an open branch drops out of a parallel group and a shorted branch
/// shorts it.
pub fn compose(net: &OnePortNetwork, omega: f64) -> Result<ComplexImpedance> {
    require_positive("angular frequency", omega)?;
    net.validate()?;
    Ok(eval(net, omega))
}

fn eval(net: &OnePortNetwork, omega: f64) -> ComplexImpedance {
    match net {
        OnePortNetwork::Leaf(e) => match *e {
            Element::Resistor(r) => ComplexImpedance::new(r, 0.0),
            Element::Capacitor(c) => ComplexImpedance::new(0.0, -1.0 / (omega * c)),
            Element::Inductor(l) => ComplexImpedance::new(0.0, omega * l),
        },
        OnePortNetwork::Short => ComplexImpedance::SHORT,
        OnePortNetwork::Open => ComplexImpedance::Open,
        OnePortNetwork::Series(ch) => ch
            .iter()
            .map(|c| eval(c, omega))
            .fold(ComplexImpedance::SHORT, ComplexImpedance::series),
        OnePortNetwork::Parallel(ch) => ch
            .iter()
            .map(|c| eval(c, omega).to_admittance())
            .fold(ComplexAdmittance::OPEN, ComplexAdmittance::sum)
            .to_impedance(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{femtofarads, ghz, nanohenries};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn capacitor_at_readout_band() {
        let z = element_impedance(&Element::Capacitor(femtofarads(500.0)), ghz(6.5)).unwrap();
        let z = z.finite().unwrap();
        assert_eq!(z.re, 0.0);
        assert!(close(z.im, -48.97, 0.005), "{}", z.im);
    }

    #[test]
    fn inductor_at_readout_band() {
        let z = element_impedance(&Element::Inductor(nanohenries(1.2)), ghz(6.5)).unwrap();
        let z = z.finite().unwrap();
        assert_eq!(z.re, 0.0);
        assert!(close(z.im, 49.01, 0.005), "{}", z.im);
    }

    #[test]
    fn resistor_is_frequency_independent() {
        for f in [0.1, 1.0, 17.0] {
            let z = element_impedance(&Element::Resistor(50.0), ghz(f)).unwrap();
            assert_eq!(z, ComplexImpedance::new(50.0, 0.0));
        }
    }

    #[test]
    fn bad_inputs_are_domain_errors() {
        assert!(matches!(element_impedance(&Element::Resistor(50.0), 0.0), Err(Error::Domain(_))));
        assert!(matches!(element_impedance(&Element::Capacitor(-1e-15), 1e9), Err(Error::Domain(_))));
        assert!(Element::inductor(0.0).is_err());
        assert!(OnePortNetwork::series(vec![OnePortNetwork::Short]).is_err());
    }

    #[test]
    fn series_with_short() {
        let net = OnePortNetwork::series(vec![OnePortNetwork::resistor(50.0).unwrap(), OnePortNetwork::Short]).unwrap();
        assert_eq!(compose(&net, 1e9).unwrap(), ComplexImpedance::new(50.0, 0.0));
    }

    #[test]
    fn parallel_with_open() {
        let r = OnePortNetwork::resistor(75.0).unwrap();
        let c = OnePortNetwork::capacitor(1e-12).unwrap();
        let inner = OnePortNetwork::series(vec![r, c]).unwrap();
        let net = OnePortNetwork::parallel(vec![inner.clone(), OnePortNetwork::Open]).unwrap();
        let w = ghz(3.0);
        let a = compose(&net, w).unwrap().finite().unwrap();
        let b = compose(&inner, w).unwrap().finite().unwrap();
        assert!((a - b).norm() <= 1e-12 * b.norm());
    }

    #[test]
    fn open_in_series_is_open() {
        let net = OnePortNetwork::series(vec![OnePortNetwork::resistor(1.0).unwrap(), OnePortNetwork::Open]).unwrap();
        assert!(compose(&net, 1e9).unwrap().is_open());
    }

    #[test]
    fn parallel_lc_below_resonance() {
        // jωL / (1 - ω²LC), evaluated independently
        let (l, c, w) = (nanohenries(1.2), femtofarads(500.0), ghz(5.0));
        let expected = w * l / (1.0 - w * w * l * c);
        let net = OnePortNetwork::parallel(vec![
            OnePortNetwork::inductor(l).unwrap(),
            OnePortNetwork::capacitor(c).unwrap(),
        ])
        .unwrap();
        let z = compose(&net, w).unwrap().finite().unwrap();
        assert!(z.re.abs() < 1e-12);
        assert!(close(z.im, expected, 1e-10 * expected));
        assert!(close(z.im, 92.44, 0.01), "{}", z.im);
    }
}
