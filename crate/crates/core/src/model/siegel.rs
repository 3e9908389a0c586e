//! Points of the tube domain and the block fractional-linear action.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::rational;

use super::expm::FMatrix;
use super::group::{GroupElement, Sl2};

/// Threshold for numerically singular denominators and pattern leaks.
pub const ENTRY_TOL: f64 = 1e-12;

type C3 = [[Complex64; 3]; 3];

/// `z = (z¹, …, z⁵)`, standing for the symmetric matrix
/// `[[z¹, 0, z⁴], [0, z², z⁵], [z⁴, z⁵, z³]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SiegelPoint {
    pub z: [Complex64; 5],
}

impl SiegelPoint {
    pub fn new(z: [Complex64; 5]) -> Self {
        Self { z }
    }

    /// `i·I₃`.
    pub fn base() -> Self {
        let i = Complex64::i();
        let o = Complex64::new(0.0, 0.0);
        Self::new([i, i, i, o, o])
    }

    pub fn matrix(&self) -> C3 {
        let [z1, z2, z3, z4, z5] = self.z;
        let o = Complex64::new(0.0, 0.0);
        [[z1, o, z4], [o, z2, z5], [z4, z5, z3]]
    }

    pub fn max_abs_diff(&self, other: &SiegelPoint) -> f64 {
        self.z
            .iter()
            .zip(&other.z)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Re/im pairs, coordinate by coordinate.
    pub fn to_pairs(&self) -> [f64; 10] {
        let mut out = [0.0; 10];
        for (k, c) in self.z.iter().enumerate() {
            out[2 * k] = c.re;
            out[2 * k + 1] = c.im;
        }
        out
    }

    pub fn from_pairs(p: &[f64; 10]) -> Self {
        Self::new(std::array::from_fn(|k| {
            Complex64::new(p[2 * k], p[2 * k + 1])
        }))
    }
}

impl Serialize for SiegelPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_pairs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SiegelPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Self::from_pairs(&<[f64; 10]>::deserialize(d)?))
    }
}

/// `Im z` positive definite, by leading principal minors.
pub fn in_domain(z: &SiegelPoint) -> bool {
    let [y1, y2, y3, y4, y5] = z.z.map(|c| c.im);
    let m1 = y1;
    let m2 = y1 * y2;
    let m3 = y1 * y2 * y3 - y2 * y4 * y4 - y1 * y5 * y5;
    m1 > 0.0 && m2 > 0.0 && m3 > 0.0
}

fn mat_mul(a: &C3, b: &C3) -> C3 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| a[i][k] * b[k][j]).sum()))
}

fn block(m: &FMatrix, r0: usize, c0: usize) -> C3 {
    std::array::from_fn(|i| std::array::from_fn(|j| Complex64::new(m.get(r0 + i, c0 + j), 0.0)))
}

fn add(a: &C3, b: &C3) -> C3 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][j] + b[i][j]))
}

fn det3(a: &C3) -> Complex64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Inverse by the adjugate.
fn inv3(a: &C3) -> Result<C3> {
    let det = det3(a);
    if det.norm() < ENTRY_TOL {
        return Err(Error::SingularDenominator(det.norm()));
    }
    let cof = |i: usize, j: usize| {
        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
        a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]
    };
    Ok(std::array::from_fn(|i| {
        std::array::from_fn(|j| cof(j, i) / det)
    }))
}

/// `(AZ + B)(CZ + D)⁻¹` for a 6×6 double matrix split into 3×3 blocks.
pub fn act_matrix(m: &FMatrix, z: &SiegelPoint) -> Result<SiegelPoint> {
    if !in_domain(z) {
        return Err(Error::OutsideDomain);
    }
    let zm = z.matrix();
    let num = add(&mat_mul(&block(m, 0, 0), &zm), &block(m, 0, 3));
    let den = add(&mat_mul(&block(m, 3, 0), &zm), &block(m, 3, 3));
    let w = mat_mul(&num, &inv3(&den)?);
    let leak = w[0][1].norm().max(w[1][0].norm());
    if leak > ENTRY_TOL {
        return Err(Error::PatternViolation(leak));
    }
    let image = SiegelPoint::new([w[0][0], w[1][1], w[2][2], w[0][2], w[1][2]]);
    if !in_domain(&image) {
        return Err(Error::OutsideDomain);
    }
    Ok(image)
}

pub fn act(g: &GroupElement, z: &SiegelPoint) -> Result<SiegelPoint> {
    act_matrix(&FMatrix::from_rational(g.matrix()), z)
}

/// `(aw + b)/(cw + d)` on the upper half-plane.
pub fn act_halfplane(s: &Sl2, w: Complex64) -> Result<Complex64> {
    let [a, b, c, d] = s.clone().map(|x| rational::to_f64(&x));
    let den = c * w + d;
    if den.norm() < ENTRY_TOL {
        return Err(Error::SingularDenominator(den.norm()));
    }
    Ok((a * w + b) / den)
}
