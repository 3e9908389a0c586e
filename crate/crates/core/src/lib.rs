//! Exact workbench for the 12-dimensional automorphism algebra of the tube
//! domain over the dual Vinberg cone, and for its 6×6 linear model.

pub mod canonical;
pub mod cli;
pub mod coadjoint;
pub mod error;
pub mod lattice;
pub mod lie;
pub mod linalg;
pub mod model;

pub use error::{Error, Result};
