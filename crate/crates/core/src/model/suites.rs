//! Seeded verification suites over random group elements and points. Exact
//! suites count failures; floating suites report the largest residual.

use num_traits::Zero;
use serde::Serialize;

use crate::canonical::basis::*;
use crate::canonical::paper_algebra;
use crate::error::Result;
use crate::linalg::{rational, Rational};

use super::expm::{exp_algebra, is_member_approx};
use super::generators::{adjoint_coeffs, adjoint_map};
use super::group::{from_params, symplectic_check, GroupElement, GroupParams};
use super::multiplier::{
    intertwiner_residual, multiplier_m, multiplier_tilde, quotient_phi, BivariatePoly,
};
use super::sampling::{random_group_params, random_multiplier, random_siegel_point, sample_rng};
use super::siegel::{act, act_halfplane, act_matrix, SiegelPoint};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub exact: bool,
    pub samples: usize,
    /// Failed samples for exact suites; samples that raised an error otherwise.
    pub failures: usize,
    pub max_residual: f64,
    pub passed: bool,
}

impl SuiteReport {
    fn exact(name: &'static str, samples: usize, failures: usize) -> Self {
        Self {
            name,
            exact: true,
            samples,
            failures,
            max_residual: 0.0,
            passed: failures == 0,
        }
    }

    fn float(
        name: &'static str,
        samples: usize,
        failures: usize,
        max_residual: f64,
        tol: f64,
    ) -> Self {
        Self {
            name,
            exact: false,
            samples,
            failures,
            max_residual,
            passed: failures == 0 && max_residual < tol,
        }
    }
}

pub const SUITE_NAMES: [&str; 10] = [
    "symplectic",
    "ad-formulas",
    "adjoint-automorphism",
    "phi-homomorphism",
    "action-homomorphism",
    "cocycle",
    "multiplier-consistency",
    "coordinate-compatibility",
    "intertwiner",
    "isotropy",
];

/// Runs every suite with `samples` draws from a generator seeded by `seed`.
pub fn run_all(seed: u64, samples: usize, tol: f64) -> Result<Vec<SuiteReport>> {
    Ok(vec![
        symplectic(seed, samples)?,
        ad_formulas(seed, samples)?,
        adjoint_automorphism(seed, samples)?,
        phi_homomorphism(seed, samples)?,
        action_homomorphism(seed, samples, tol)?,
        cocycle(seed, samples, tol)?,
        multiplier_consistency(seed, samples, tol)?,
        coordinate_compatibility(seed, samples, tol)?,
        intertwiner(seed, samples, tol)?,
        isotropy(tol),
    ])
}

fn suite_rng(seed: u64, name: &str) -> rand_chacha::ChaCha8Rng {
    let salt = SUITE_NAMES.iter().position(|n| *n == name).unwrap_or(0) as u64;
    sample_rng(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(salt))
}

fn element<R: rand::Rng>(rng: &mut R) -> Result<GroupElement> {
    from_params(&random_group_params(rng))
}

pub fn symplectic(seed: u64, samples: usize) -> Result<SuiteReport> {
    let mut rng = suite_rng(seed, "symplectic");
    let mut failures = 0;
    for _ in 0..samples {
        let g = element(&mut rng)?;
        if !symplectic_check(g.matrix()) {
            failures += 1;
        }
    }
    Ok(SuiteReport::exact("symplectic", samples, failures))
}

/// Closed-form `Ad(g⁻¹)x` for `x ∈ {E₁, E₂, A₃,₁, A₃,₂, W₁, W₂}` in terms of
/// the parameters of `g`.
pub fn ad_inverse_formulas(p: &GroupParams) -> Vec<(usize, Vec<Rational>)> {
    let block = |i: usize| {
        let (q, lp, mp) = if i == 1 {
            (&p.sl2_1, &p.lambda1p, &p.mu1p)
        } else {
            (&p.sl2_2, &p.lambda2p, &p.mu2p)
        };
        let (e, e3i, a, a3i, w) = if i == 1 {
            (E1, E31, A1, A31, W1)
        } else {
            (E2, E32, A2, A32, W2)
        };
        let [a_, b, c, d] = q;
        let two = rational::int(2);
        let vec = |terms: Vec<(usize, Rational)>| {
            let mut v = vec![Rational::zero(); DIM];
            for (k, t) in terms {
                v[k] += t;
            }
            v
        };
        let ad_e = vec(vec![
            (e, d * d - c * c),
            (E3, lp * lp),
            (e3i, -(d * lp)),
            (a, &two * c * d),
            (a3i, -(c * lp)),
            (w, -(c * c)),
        ]);
        let ad_a3i = vec(vec![
            (E3, &two * mp / &p.a3),
            (e3i, b / &p.a3),
            (a3i, a_ / &p.a3),
        ]);
        let ad_w = vec(vec![
            (e, -(d * d) + c * c - b * b + a_ * a_),
            (E3, -(mp * mp) - lp * lp),
            (e3i, d * lp - b * mp),
            (a, -(&two * c * d) - &two * a_ * b),
            (a3i, c * lp - a_ * mp),
            (w, c * c + a_ * a_),
        ]);
        [(e, ad_e), (a3i, ad_a3i), (w, ad_w)]
    };
    block(1).into_iter().chain(block(2)).collect()
}

pub fn ad_formulas(seed: u64, samples: usize) -> Result<SuiteReport> {
    let mut rng = suite_rng(seed, "ad-formulas");
    let mut failures = 0;
    for _ in 0..samples {
        let g = element(&mut rng)?;
        let gi = g.inverse()?;
        for (k, expected) in ad_inverse_formulas(g.params()) {
            let mut x = vec![Rational::zero(); DIM];
            x[k] = rational::one();
            if adjoint_coeffs(&gi, &x)? != expected {
                failures += 1;
            }
        }
    }
    Ok(SuiteReport::exact("ad-formulas", samples, failures))
}

pub fn adjoint_automorphism(seed: u64, samples: usize) -> Result<SuiteReport> {
    let alg = paper_algebra();
    let mut rng = suite_rng(seed, "adjoint-automorphism");
    let mut failures = 0;
    for _ in 0..samples {
        let g = element(&mut rng)?;
        let h = element(&mut rng)?;
        let (ag, ah) = (adjoint_map(&g)?, adjoint_map(&h)?);
        let agh = adjoint_map(&g.mul(&h)?)?;
        if !alg.check_automorphism(&ag)? || agh != ag.compose(&ah)? {
            failures += 1;
        }
    }
    Ok(SuiteReport::exact(
        "adjoint-automorphism",
        samples,
        failures,
    ))
}

pub fn phi_homomorphism(seed: u64, samples: usize) -> Result<SuiteReport> {
    let mut rng = suite_rng(seed, "phi-homomorphism");
    let mut failures = 0;
    for _ in 0..samples {
        let g = element(&mut rng)?;
        let h = element(&mut rng)?;
        if quotient_phi(&g.mul(&h)?) != quotient_phi(&g).mul(&quotient_phi(&h)) {
            failures += 1;
        }
    }
    Ok(SuiteReport::exact("phi-homomorphism", samples, failures))
}

/// Folds per-sample residuals; errors count as failures.
fn float_suite(
    name: &'static str,
    samples: usize,
    tol: f64,
    mut residual: impl FnMut() -> Result<f64>,
) -> Result<SuiteReport> {
    let mut failures = 0;
    let mut worst = 0.0f64;
    for _ in 0..samples {
        match residual() {
            Ok(r) if r.is_finite() => worst = worst.max(r),
            _ => failures += 1,
        }
    }
    Ok(SuiteReport::float(name, samples, failures, worst, tol))
}

pub fn action_homomorphism(seed: u64, samples: usize, tol: f64) -> Result<SuiteReport> {
    let mut rng = suite_rng(seed, "action-homomorphism");
    float_suite("action-homomorphism", samples, tol, || {
        let g = element(&mut rng)?;
        let h = element(&mut rng)?;
        let z = random_siegel_point(&mut rng);
        let lhs = act(&g, &act(&h, &z)?)?;
        let rhs = act(&g.mul(&h)?, &z)?;
        Ok(lhs.max_abs_diff(&rhs))
    })
}

pub fn cocycle(seed: u64, samples: usize, tol: f64) -> Result<SuiteReport> {
    let mut rng = suite_rng(seed, "cocycle");
    float_suite("cocycle", samples, tol, || {
        let g = element(&mut rng)?;
        let h = element(&mut rng)?;
        let z = random_siegel_point(&mut rng);
        let p = random_multiplier(&mut rng);
        let lhs = multiplier_m(&g.mul(&h)?, &z, &p);
        let rhs = multiplier_m(&g, &act(&h, &z)?, &p) * multiplier_m(&h, &z, &p);
        Ok((lhs - rhs).norm())
    })
}

pub fn multiplier_consistency(seed: u64, samples: usize, tol: f64) -> Result<SuiteReport> {
    let mut rng = suite_rng(seed, "multiplier-consistency");
    float_suite("multiplier-consistency", samples, tol, || {
        let g = element(&mut rng)?;
        let z = random_siegel_point(&mut rng);
        let p = random_multiplier(&mut rng);
        let m = multiplier_m(&g, &z, &p);
        let mt = multiplier_tilde(&quotient_phi(&g), (z.z[0], z.z[1]), &p);
        Ok((m - mt).norm())
    })
}

pub fn coordinate_compatibility(seed: u64, samples: usize, tol: f64) -> Result<SuiteReport> {
    let mut rng = suite_rng(seed, "coordinate-compatibility");
    float_suite("coordinate-compatibility", samples, tol, || {
        let g = element(&mut rng)?;
        let z = random_siegel_point(&mut rng);
        let w = act(&g, &z)?;
        let p = g.params();
        let d1 = (w.z[0] - act_halfplane(&p.sl2_1, z.z[0])?).norm();
        let d2 = (w.z[1] - act_halfplane(&p.sl2_2, z.z[1])?).norm();
        Ok(d1.max(d2))
    })
}

pub fn intertwiner(seed: u64, samples: usize, tol: f64) -> Result<SuiteReport> {
    let mut rng = suite_rng(seed, "intertwiner");
    let f = BivariatePoly::monomial(1, 1)?;
    float_suite("intertwiner", samples, tol, || {
        let g = element(&mut rng)?;
        let z = random_siegel_point(&mut rng);
        let p = random_multiplier(&mut rng);
        intertwiner_residual(&f, &g, &z, &p)
    })
}

/// `exp(tW₁)` and `exp(tW₂)` fix `i·I₃` for `t ∈ {−2, …, 2}`.
pub fn isotropy(tol: f64) -> SuiteReport {
    let mut failures = 0;
    let mut worst = 0.0f64;
    let mut count = 0;
    for k in [W1, W2] {
        for t in -2..=2 {
            count += 1;
            let mut coeffs = [0.0; DIM];
            coeffs[k] = t as f64;
            let m = exp_algebra(&coeffs);
            if !is_member_approx(&m, 1e-10) {
                failures += 1;
                continue;
            }
            match act_matrix(&m, &SiegelPoint::base()) {
                Ok(w) => worst = worst.max(w.max_abs_diff(&SiegelPoint::base())),
                Err(_) => failures += 1,
            }
        }
    }
    SuiteReport::float("isotropy", count, failures, worst, tol)
}
