//! Finite residuated lattices, symbolic BL-chains, terms and nuclei.

pub mod algebra;
pub mod chain;
pub mod nucleus;
pub mod term;
pub mod variety;
pub mod zoo;

pub use algebra::FiniteResiduatedLattice;
pub use chain::{ChainDescriptor, ChainElement};
