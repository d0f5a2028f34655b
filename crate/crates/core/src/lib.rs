//! Exact computations in the Kauffman bracket skein algebra of the torus and
//! the skein modules of the trefoil complements.

pub mod chebyshev;
pub mod exactcoeff;
pub mod quantum_torus;
pub mod torus_skein;
pub mod trefoil_module;
pub mod ideal_lab;
pub mod syntax;
pub mod sample;
pub mod verify;

#[cfg(test)]
mod proptests;
