//! Multipliers on the tube domain and on the product of two half-planes, the
//! quotient map between the groups, and the intertwiner `F_f(z) = f(z¹, z²)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{rational, Rational};

use super::group::{sl2_identity, sl2_inverse, sl2_mul, GroupElement, Sl2};
use super::siegel::{act, act_halfplane, SiegelPoint};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MultiplierParams {
    pub n: u32,
    pub nprime: u32,
    pub eta3: f64,
}

/// `γ^{2iη₃} = exp(2iη₃ ln γ)` for `γ > 0`.
fn unimodular(gamma: f64, eta3: f64) -> Complex64 {
    Complex64::new(0.0, 2.0 * eta3 * gamma.ln()).exp()
}

fn factor(s: &Sl2, w: Complex64) -> Complex64 {
    rational::to_f64(&s[2]) * w + rational::to_f64(&s[3])
}

/// `m(g, z) = (c₁z¹ + d₁)ⁿ (c₂z² + d₂)ⁿ′ a₃^{2iη₃}`.
pub fn multiplier_m(g: &GroupElement, z: &SiegelPoint, p: &MultiplierParams) -> Complex64 {
    let q = g.params();
    factor(&q.sl2_1, z.z[0]).powu(p.n)
        * factor(&q.sl2_2, z.z[1]).powu(p.nprime)
        * unimodular(rational::to_f64(&q.a3), p.eta3)
}

/// An element `(γ, g₁, g₂)` of `ℝ₊ × SL(2) × SL(2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientImage {
    pub gamma: Rational,
    pub sl2_1: Sl2,
    pub sl2_2: Sl2,
}

impl QuotientImage {
    pub fn identity() -> Self {
        Self {
            gamma: rational::one(),
            sl2_1: sl2_identity(),
            sl2_2: sl2_identity(),
        }
    }

    pub fn mul(&self, other: &QuotientImage) -> QuotientImage {
        QuotientImage {
            gamma: &self.gamma * &other.gamma,
            sl2_1: sl2_mul(&self.sl2_1, &other.sl2_1),
            sl2_2: sl2_mul(&self.sl2_2, &other.sl2_2),
        }
    }

    pub fn inverse(&self) -> QuotientImage {
        QuotientImage {
            gamma: self.gamma.recip(),
            sl2_1: sl2_inverse(&self.sl2_1),
            sl2_2: sl2_inverse(&self.sl2_2),
        }
    }
}

pub fn quotient_phi(g: &GroupElement) -> QuotientImage {
    let p = g.params();
    QuotientImage {
        gamma: p.a3.clone(),
        sl2_1: p.sl2_1.clone(),
        sl2_2: p.sl2_2.clone(),
    }
}

/// `m̃((γ, g₁, g₂), (w¹, w²)) = (c₁w¹ + d₁)ⁿ (c₂w² + d₂)ⁿ′ γ^{2iη₃}`.
pub fn multiplier_tilde(
    t: &QuotientImage,
    w: (Complex64, Complex64),
    p: &MultiplierParams,
) -> Complex64 {
    factor(&t.sl2_1, w.0).powu(p.n)
        * factor(&t.sl2_2, w.1).powu(p.nprime)
        * unimodular(rational::to_f64(&t.gamma), p.eta3)
}

pub const MAX_POLY_DEGREE: usize = 8;

/// `f(w¹, w²) = Σ coeffs[i][j] (w¹)ⁱ (w²)ʲ` with total degree at most 8.
#[derive(Debug, Clone, PartialEq)]
pub struct BivariatePoly {
    coeffs: Vec<Vec<Complex64>>,
}

impl BivariatePoly {
    pub fn new(coeffs: Vec<Vec<Complex64>>) -> Result<Self> {
        for (i, row) in coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if i + j > MAX_POLY_DEGREE && *c != Complex64::new(0.0, 0.0) {
                    return Err(Error::Parse(format!(
                        "term of degree {} exceeds {MAX_POLY_DEGREE}",
                        i + j
                    )));
                }
            }
        }
        Ok(Self { coeffs })
    }

    pub fn constant(c: f64) -> Self {
        Self {
            coeffs: vec![vec![Complex64::new(c, 0.0)]],
        }
    }

    /// The monomial `(w¹)ⁱ (w²)ʲ`.
    pub fn monomial(i: usize, j: usize) -> Result<Self> {
        let mut coeffs = vec![vec![Complex64::new(0.0, 0.0); j + 1]; i + 1];
        coeffs[i][j] = Complex64::new(1.0, 0.0);
        Self::new(coeffs)
    }

    pub fn eval(&self, w1: Complex64, w2: Complex64) -> Complex64 {
        // Horner in w¹ over Horner-evaluated rows in w²
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, row| {
                let r = row
                    .iter()
                    .rev()
                    .fold(Complex64::new(0.0, 0.0), |a, c| a * w2 + c);
                acc * w1 + r
            })
    }
}

/// `τ_m(g)F(z) = m(g⁻¹, z)⁻¹ F(g⁻¹z)` for `F = F_f`.
fn tau_m(
    f: &BivariatePoly,
    g: &GroupElement,
    z: &SiegelPoint,
    p: &MultiplierParams,
) -> Result<Complex64> {
    let gi = g.inverse()?;
    let moved = act(&gi, z)?;
    Ok(f.eval(moved.z[0], moved.z[1]) / multiplier_m(&gi, z, p))
}

/// `τ_m̃(t)f(w) = m̃(t⁻¹, w)⁻¹ f(t₁⁻¹w¹, t₂⁻¹w²)`.
fn tau_tilde(
    f: &BivariatePoly,
    t: &QuotientImage,
    w: (Complex64, Complex64),
    p: &MultiplierParams,
) -> Result<Complex64> {
    let ti = t.inverse();
    let w1 = act_halfplane(&ti.sl2_1, w.0)?;
    let w2 = act_halfplane(&ti.sl2_2, w.1)?;
    Ok(f.eval(w1, w2) / multiplier_tilde(&ti, w, p))
}

/// `|τ_m(g)F_f(z) − F_{τ_m̃(φ(g))f}(z)|`.
pub fn intertwiner_residual(
    f: &BivariatePoly,
    g: &GroupElement,
    z: &SiegelPoint,
    p: &MultiplierParams,
) -> Result<f64> {
    let lhs = tau_m(f, g, z, p)?;
    let rhs = tau_tilde(f, &quotient_phi(g), (z.z[0], z.z[1]), p)?;
    Ok((lhs - rhs).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;
    use crate::model::{from_params, GroupParams};

    fn params(n: u32, nprime: u32, eta3: f64) -> MultiplierParams {
        MultiplierParams { n, nprime, eta3 }
    }

    #[test]
    fn identity_multipliers() {
        let z = SiegelPoint::base();
        let p = params(3, 2, 1.5);
        assert_eq!(
            multiplier_m(&GroupElement::identity(), &z, &p),
            Complex64::new(1.0, 0.0)
        );
        let w = (z.z[0], z.z[1]);
        assert_eq!(
            multiplier_tilde(&QuotientImage::identity(), w, &p),
            Complex64::new(1.0, 0.0)
        );
    }

    #[test]
    fn lower_unipotent_multiplier() {
        let g = from_params(&GroupParams {
            sl2_1: [int(1), int(0), int(1), int(1)],
            ..GroupParams::identity()
        })
        .unwrap();
        let m = multiplier_m(&g, &SiegelPoint::base(), &params(1, 0, 0.0));
        assert!((m - Complex64::new(1.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn unimodular_factor() {
        let v = unimodular(std::f64::consts::E, 0.5);
        assert!((v - Complex64::new(0.0, 1.0).exp()).norm() < 1e-15);
        assert!((v.norm() - 1.0).abs() < 1e-15);
        let t = QuotientImage {
            gamma: int(4),
            ..QuotientImage::identity()
        };
        let m = multiplier_tilde(&t, (Complex64::i(), Complex64::i()), &params(0, 0, 0.25));
        // 4^{2i/4} = exp(i ln 2)
        let expected = Complex64::new(0.0, 2f64.ln()).exp();
        assert!((m - expected).norm() < 1e-15);
    }

    #[test]
    fn phi_of_identity() {
        assert_eq!(
            quotient_phi(&GroupElement::identity()),
            QuotientImage::identity()
        );
    }

    #[test]
    fn trivial_intertwiner_cases() {
        let z = SiegelPoint::base();
        let f = BivariatePoly::monomial(1, 1).unwrap();
        let p = params(2, 1, 0.7);
        assert_eq!(
            intertwiner_residual(&f, &GroupElement::identity(), &z, &p).unwrap(),
            0.0
        );
    }

    #[test]
    fn degree_cap() {
        assert!(BivariatePoly::monomial(4, 4).is_ok());
        assert!(BivariatePoly::monomial(5, 4).is_err());
        let f = BivariatePoly::new(vec![
            vec![Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)],
            vec![Complex64::new(0.0, 0.0), Complex64::new(3.0, 0.0)],
        ])
        .unwrap();
        // 1 + 2w² + 3w¹w²
        let v = f.eval(Complex64::new(2.0, 0.0), Complex64::new(5.0, 0.0));
        assert_eq!(v, Complex64::new(41.0, 0.0));
        assert_eq!(
            BivariatePoly::constant(2.5).eval(Complex64::i(), Complex64::i()),
            Complex64::new(2.5, 0.0)
        );
    }
}
