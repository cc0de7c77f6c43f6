//! Small nodal-analysis solver for lumped networks that are not series/parallel
//! reducible (the Δ coupling topology is a bridge).
//!
//! Driving-point quantities are evaluated by solving for the node voltages and
//! then summing branch powers, `Y_in = Σ_b y_b |ΔV_b|²` for a unit drive. The
//! real part is then a sum of non-negative terms, which keeps tiny conductances
//! near a transmission zero accurate instead of leaving them at the mercy of
//! cancellation inside a Schur complement.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::immittance::{ComplexAdmittance, ComplexImpedance};
use super::network::Element;
use crate::error::{require_positive, Error, Result};

/// Node reference: ground or one of the `n` ungrounded nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Node {
    Ground,
    N(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Branch {
    pub a: Node,
    pub b: Node,
    pub element: Element,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NodalCircuit {
    nodes: usize,
    branches: Vec<Branch>,
}

impl NodalCircuit {
    pub fn new(nodes: usize) -> Self {
        NodalCircuit { nodes, branches: Vec::new() }
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn connect(&mut self, a: Node, b: Node, element: Element) -> Result<&mut Self> {
        require_positive("element value", element.value())?;
        for n in [a, b] {
            if let Node::N(i) = n {
                if i >= self.nodes {
                    return Err(Error::domain(format!("node {i} out of range (circuit has {})", self.nodes)));
                }
            }
        }
        if a == b {
            return Err(Error::domain("branch endpoints coincide"));
        }
        self.branches.push(Branch { a, b, element });
        Ok(self)
    }

    /// Adds a capacitor, skipping it when the value is exactly zero (an open).
    pub fn connect_capacitor(&mut self, a: Node, b: Node, farads: f64) -> Result<&mut Self> {
        if farads == 0.0 {
            return Ok(self);
        }
        self.connect(a, b, Element::capacitor(farads)?)
    }

    /// Nodal admittance matrix at complex frequency `s`.
    pub fn admittance_matrix(&self, s: Complex64) -> DMatrix<Complex64> {
        let mut y = DMatrix::from_element(self.nodes, self.nodes, Complex64::new(0.0, 0.0));
        for br in &self.branches {
            let yb = br.element.admittance_at(s);
            match (br.a, br.b) {
                (Node::N(i), Node::N(j)) => {
                    y[(i, i)] += yb;
                    y[(j, j)] += yb;
                    y[(i, j)] -= yb;
                    y[(j, i)] -= yb;
                }
                (Node::N(i), Node::Ground) | (Node::Ground, Node::N(i)) => y[(i, i)] += yb,
                (Node::Ground, Node::Ground) => {}
            }
        }
        y
    }

    /// Determinant of the admittance matrix; its zeros are the natural frequencies.
    pub fn characteristic(&self, s: Complex64) -> Complex64 {
        self.admittance_matrix(s).determinant()
    }

    fn voltage(v: &DVector<Complex64>, n: Node) -> Complex64 {
        match n {
            Node::Ground => Complex64::new(0.0, 0.0),
            Node::N(i) => v[i],
        }
    }

    fn branch_power_sum(&self, v: &DVector<Complex64>, s: Complex64) -> Complex64 {
        self.branches
            .iter()
            .map(|br| {
                let dv = Self::voltage(v, br.a) - Self::voltage(v, br.b);
                br.element.admittance_at(s) * dv.norm_sqr()
            })
            .sum()
    }

    /// Admittance looking into `port` (against ground) at angular frequency `omega`.
    pub fn driving_point_admittance(&self, port: usize, omega: f64) -> Result<ComplexAdmittance> {
        require_positive("angular frequency", omega)?;
        self.check_port(port)?;
        let s = Complex64::new(0.0, omega);
        let y = self.admittance_matrix(s);
        let others: Vec<usize> = (0..self.nodes).filter(|&i| i != port).collect();
        let mut v = DVector::from_element(self.nodes, Complex64::new(0.0, 0.0));
        v[port] = Complex64::new(1.0, 0.0);
        if !others.is_empty() {
            let m = others.len();
            let inner = DMatrix::from_fn(m, m, |r, c| y[(others[r], others[c])]);
            let rhs = DVector::from_fn(m, |r, _| -y[(others[r], port)]);
            let sol = inner
                .lu()
                .solve(&rhs)
                .ok_or_else(|| Error::Singularity(format!("internal nodes singular at ω = {omega:e} rad/s")))?;
            for (k, &i) in others.iter().enumerate() {
                v[i] = sol[k];
            }
        }
        let total = self.branch_power_sum(&v, s);
        Ok(ComplexAdmittance::Finite(total))
    }

    /// Impedance looking into `port` (against ground) at angular frequency `omega`.
    pub fn driving_point_impedance(&self, port: usize, omega: f64) -> Result<ComplexImpedance> {
        require_positive("angular frequency", omega)?;
        self.check_port(port)?;
        let s = Complex64::new(0.0, omega);
        let y = self.admittance_matrix(s);
        let mut rhs = DVector::from_element(self.nodes, Complex64::new(0.0, 0.0));
        rhs[port] = Complex64::new(1.0, 0.0);
        let Some(v) = y.lu().solve(&rhs) else {
            return Ok(ComplexImpedance::Open);
        };
        // unit current in: P = Re(V_port) and the reactive part is Im(V_port)
        let re = self.branch_power_sum(&v, s).re;
        Ok(ComplexImpedance::new(re, v[port].im))
    }

    /// Newton iteration on the characteristic determinant from `guess`.
    ///
    /// Returns the complex frequency `s` with `Re(s) ≤ 0` for a passive network.
    pub fn natural_frequency_near(&self, guess: Complex64) -> Result<Complex64> {
        let mut s = guess;
        for _ in 0..200 {
            let f = self.characteristic(s);
            let h = s.norm() * 1e-7;
            let df = (self.characteristic(s + h) - self.characteristic(s - h)) / (2.0 * h);
            if df.norm() == 0.0 || !df.is_finite() {
                break;
            }
            let step = f / df;
            s -= step;
            if !s.is_finite() {
                break;
            }
            if step.norm() <= 1e-14 * s.norm() {
                return Ok(s);
            }
        }
        Err(Error::Search(format!("no natural frequency found near {guess}")))
    }

    fn check_port(&self, port: usize) -> Result<()> {
        if port < self.nodes {
            Ok(())
        } else {
            Err(Error::domain(format!("port {port} out of range")))
        }
    }
}
