//! List homomorphisms to separable signed graphs.

pub mod classify;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod graph;
pub mod hardness;
mod parity;
pub mod separable;
pub mod ordering;
pub mod solver;
pub mod targets;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{Bipartition, Colour, Sign, SignedGraph, Switching};
