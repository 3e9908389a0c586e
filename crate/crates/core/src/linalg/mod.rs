//! Exact rational linear algebra: scalars, dense matrices, and canonical
//! subspaces.

pub mod matrix;
pub mod poly;
pub mod rational;
pub mod subspace;

pub use matrix::RMatrix;
pub use rational::Rational;
pub use subspace::{kernel, unit, Subspace};

pub fn rref(m: &RMatrix) -> (RMatrix, usize) {
    m.rref()
}

pub fn subspace_sum(u: &Subspace, v: &Subspace) -> crate::Result<Subspace> {
    u.sum(v)
}

pub fn subspace_intersect(u: &Subspace, v: &Subspace) -> crate::Result<Subspace> {
    u.intersect(v)
}

pub fn contains(u: &Subspace, w: &[Rational]) -> crate::Result<bool> {
    u.contains(w)
}
