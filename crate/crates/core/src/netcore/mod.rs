//! Complex-impedance algebra for lumped one-ports, a nodal solver for the
//! bridge topologies that do not reduce to series/parallel form, and the
//! star/Δ capacitor transform.

mod immittance;
mod network;
mod nodal;
mod ydelta;

pub use immittance::{ComplexAdmittance, ComplexImpedance};
pub use network::{compose, element_impedance, Element, OnePortNetwork};
pub use nodal::{Branch, NodalCircuit, Node};
pub use ydelta::{delta_to_y, y_to_delta, CouplingSet, DeltaCapacitances, StarCapacitances};
