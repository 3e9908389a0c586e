//! Lie algebras given by structure constants.

mod algebra;
mod structure;

pub use algebra::{AlgebraFile, BracketSpec, Element, LieAlgebra, LinearMap};
