//! Double-precision matrix exponential for the 6×6 model.

use crate::canonical::basis::DIM;
use crate::linalg::{rational, RMatrix};

use super::generators::basis_matrices;

/// Dense square matrix of doubles, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct FMatrix {
    pub n: usize,
    pub data: Vec<f64>,
}

impl FMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_rational(m: &RMatrix) -> Self {
        assert!(m.is_square());
        let n = m.rows();
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = rational::to_f64(&m[(i, j)]);
            }
        }
        out
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &FMatrix) -> FMatrix {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn add_scaled(&self, other: &FMatrix, s: f64) -> FMatrix {
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + s * b)
            .collect();
        FMatrix { n: self.n, data }
    }

    pub fn scale(&self, s: f64) -> FMatrix {
        FMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// Maximum absolute column sum.
    pub fn norm1(&self) -> f64 {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &FMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Solves `self · X = rhs` by Gaussian elimination with partial pivoting.
    pub fn solve(&self, rhs: &FMatrix) -> Option<FMatrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut b = rhs.clone();
        for col in 0..n {
            let pivot =
                (col..n).max_by(|&r, &s| a.get(r, col).abs().total_cmp(&a.get(s, col).abs()))?;
            if a.get(pivot, col) == 0.0 {
                return None;
            }
            for j in 0..n {
                a.data.swap(col * n + j, pivot * n + j);
                b.data.swap(col * n + j, pivot * n + j);
            }
            let p = a.get(col, col);
            for r in col + 1..n {
                let f = a.get(r, col) / p;
                if f == 0.0 {
                    continue;
                }
                for j in 0..n {
                    a.data[r * n + j] -= f * a.get(col, j);
                    b.data[r * n + j] -= f * b.get(col, j);
                }
            }
        }
        for col in (0..n).rev() {
            let p = a.get(col, col);
            for j in 0..n {
                let mut v = b.get(col, j);
                for k in col + 1..n {
                    v -= a.get(col, k) * b.get(k, j);
                }
                b.set(col, j, v / p);
            }
        }
        Some(b)
    }
}

/// `exp(A)` by scaling and squaring around a degree-(6,6) Padé approximant.
pub fn expm(a: &FMatrix) -> FMatrix {
    const M: usize = 6;
    let norm = a.norm1();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let scaled = a.scale(0.5f64.powi(squarings));

    let mut c = 1.0;
    let mut num = FMatrix::identity(a.n);
    let mut den = FMatrix::identity(a.n);
    let mut power = FMatrix::identity(a.n);
    for k in 1..=M {
        c *= (M + 1 - k) as f64 / (k * (2 * M + 1 - k)) as f64;
        power = power.mul(&scaled);
        num = num.add_scaled(&power, c);
        den = den.add_scaled(&power, if k % 2 == 0 { c } else { -c });
    }
    let mut result = den
        .solve(&num)
        .expect("Padé denominator is invertible for small norm");
    for _ in 0..squarings {
        result = result.mul(&result);
    }
    result
}

/// `exp(Σ coeffs[k] X_k)` for the 6×6 basis matrices.
pub fn exp_algebra(coeffs: &[f64]) -> FMatrix {
    assert_eq!(coeffs.len(), DIM);
    let mut x = FMatrix::zeros(6);
    for (c, b) in coeffs.iter().zip(basis_matrices()) {
        if *c != 0.0 {
            x = x.add_scaled(&FMatrix::from_rational(&b), *c);
        }
    }
    expm(&x)
}

/// Membership up to `tol`: zero pattern, positivity, the `(6,6)` corner, both
/// determinants, and the row-3 constraints.
pub fn is_member_approx(m: &FMatrix, tol: f64) -> bool {
    if m.n != 6 {
        return false;
    }
    let g = |i: usize, j: usize| m.get(i - 1, j - 1);
    let zeros = [
        (1, 2),
        (1, 3),
        (1, 5),
        (2, 1),
        (2, 3),
        (2, 4),
        (4, 2),
        (4, 3),
        (4, 5),
        (5, 1),
        (5, 3),
        (5, 4),
        (6, 1),
        (6, 2),
        (6, 3),
        (6, 4),
        (6, 5),
    ];
    if zeros.iter().any(|&(i, j)| g(i, j).abs() > tol) {
        return false;
    }
    let a3 = g(3, 3);
    if a3 <= tol || (g(6, 6) - 1.0 / a3).abs() > tol {
        return false;
    }
    let (a1, b1, c1, d1) = (g(1, 1), g(1, 4), g(4, 1), g(4, 4));
    let (a2, b2, c2, d2) = (g(2, 2), g(2, 5), g(5, 2), g(5, 5));
    let (l1p, m1p, l2p, m2p) = (-g(4, 6), g(1, 6), -g(5, 6), g(2, 6));
    let residuals = [
        a1 * d1 - b1 * c1 - 1.0,
        a2 * d2 - b2 * c2 - 1.0,
        g(3, 1) - a3 * (a1 * l1p + c1 * m1p),
        g(3, 4) - a3 * (b1 * l1p + d1 * m1p),
        g(3, 2) - a3 * (a2 * l2p + c2 * m2p),
        g(3, 5) - a3 * (b2 * l2p + d2 * m2p),
    ];
    residuals.iter().all(|r| r.abs() <= tol)
}
