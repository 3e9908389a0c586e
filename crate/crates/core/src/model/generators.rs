//! Basis matrices of the Lie algebra inside `gl(6)`, expansion of matrices
//! back into coefficients, and the adjoint action of the group.

use num_traits::Zero;

use crate::canonical::basis::*;
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra, LinearMap};
use crate::linalg::{rational, RMatrix, Rational};

use super::group::GroupElement;

/// `Σ coeffs[k] X_k` in canonical basis order.
pub fn generator_matrix(coeffs: &[Rational]) -> Result<RMatrix> {
    if coeffs.len() != DIM {
        return Err(Error::AmbientMismatch(DIM, coeffs.len()));
    }
    let c = |k: usize| coeffs[k].clone();
    let half = rational::frac(1, 2);
    let mut m = RMatrix::zeros(6, 6);
    m[(0, 0)] = &c(A1) * &half;
    m[(0, 3)] = c(E1) - c(W1);
    m[(0, 5)] = c(E31);
    m[(1, 1)] = &c(A2) * &half;
    m[(1, 4)] = c(E2) - c(W2);
    m[(1, 5)] = c(E32);
    m[(2, 0)] = c(A31);
    m[(2, 1)] = c(A32);
    m[(2, 2)] = &c(A3) * &half;
    m[(2, 3)] = c(E31);
    m[(2, 4)] = c(E32);
    m[(2, 5)] = c(E3);
    m[(3, 0)] = c(W1);
    m[(3, 3)] = -&c(A1) * &half;
    m[(3, 5)] = -c(A31);
    m[(4, 1)] = c(W2);
    m[(4, 4)] = -&c(A2) * &half;
    m[(4, 5)] = -c(A32);
    m[(5, 5)] = -&c(A3) * &half;
    Ok(m)
}

pub fn basis_matrices() -> Vec<RMatrix> {
    (0..DIM)
        .map(|k| {
            let mut e = vec![Rational::zero(); DIM];
            e[k] = rational::one();
            generator_matrix(&e).expect("dimension matches")
        })
        .collect()
}

/// Coefficients of `m` in the basis matrices, or `ExpansionFailed`.
pub fn expand(m: &RMatrix) -> Result<Vec<Rational>> {
    if m.rows() != 6 || m.cols() != 6 {
        return Err(Error::ExpansionFailed);
    }
    let two = rational::int(2);
    let mut c = vec![Rational::zero(); DIM];
    c[W1] = m[(3, 0)].clone();
    c[E1] = &m[(0, 3)] + &m[(3, 0)];
    c[W2] = m[(4, 1)].clone();
    c[E2] = &m[(1, 4)] + &m[(4, 1)];
    c[E3] = m[(2, 5)].clone();
    c[E31] = m[(0, 5)].clone();
    c[E32] = m[(1, 5)].clone();
    c[A1] = &m[(0, 0)] * &two;
    c[A2] = &m[(1, 1)] * &two;
    c[A3] = &m[(2, 2)] * &two;
    c[A31] = m[(2, 0)].clone();
    c[A32] = m[(2, 1)].clone();
    if generator_matrix(&c)? != *m {
        return Err(Error::ExpansionFailed);
    }
    Ok(c)
}

/// A basis pair whose matrix commutator disagrees with the structure constants.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelMismatch {
    pub i: usize,
    pub j: usize,
    pub expected: Vec<Rational>,
    pub actual: Vec<Rational>,
}

/// Compares `[X_i, X_j]` with the structure constants of `algebra` on every
/// unordered pair `i < j`.
pub fn verify_model(algebra: &LieAlgebra) -> Result<Vec<ModelMismatch>> {
    if algebra.dim() != DIM {
        return Err(Error::AmbientMismatch(DIM, algebra.dim()));
    }
    let mats = basis_matrices();
    let mut out = Vec::new();
    for i in 0..DIM {
        for j in i + 1..DIM {
            let actual = expand(&mats[i].commutator(&mats[j])?)?;
            let expected = algebra.basis_bracket(i, j);
            if actual != expected {
                out.push(ModelMismatch {
                    i,
                    j,
                    expected,
                    actual,
                });
            }
        }
    }
    Ok(out)
}

pub const MODEL_PAIRS: usize = DIM * (DIM - 1) / 2;

/// `g X g⁻¹` expanded in the basis.
pub fn adjoint_coeffs(g: &GroupElement, x: &[Rational]) -> Result<Vec<Rational>> {
    let gi = g.matrix().inverse()?;
    let conj = g.matrix().mul(&generator_matrix(x)?)?.mul(&gi)?;
    expand(&conj)
}

pub fn adjoint<'a>(g: &GroupElement, x: &Element<'a>) -> Result<Element<'a>> {
    x.algebra().element(adjoint_coeffs(g, x.coeffs())?)
}

/// The linear map `Ad(g)` on the 12-dimensional algebra.
pub fn adjoint_map(g: &GroupElement) -> Result<LinearMap> {
    let images = (0..DIM)
        .map(|k| {
            let mut e = vec![Rational::zero(); DIM];
            e[k] = rational::one();
            adjoint_coeffs(g, &e)
        })
        .collect::<Result<Vec<_>>>()?;
    LinearMap::from_images(&images)
}
