//! Seeded random group elements, points and multiplier parameters at desk
//! scale: small numerators and denominators keep `CZ + D` well conditioned.

use num_complex::Complex64;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{rational, Rational};

use super::group::{GroupParams, Sl2};
use super::multiplier::MultiplierParams;
use super::siegel::{in_domain, SiegelPoint};

pub fn sample_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `1 ≤ q ≤ 8` and `|p/q| ≤ bound`.
fn small_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let q = rng.gen_range(1..=8i64);
    let p = rng
        .gen_range(-bound * q..=bound * q)
        .clamp(-8 * bound, 8 * bound);
    rational::frac(p, q)
}

/// An `SL(2)` quadruple with entries of modulus at most 2.
fn sl2<R: Rng>(rng: &mut R) -> Sl2 {
    let two = rational::int(2);
    loop {
        if rng.gen_ratio(1, 10) {
            // a = 0 forces bc = −1
            let c = [1, 2, -1, -2]
                .map(rational::int)
                .choose(rng)
                .cloned()
                .unwrap_or_default();
            let c = if rng.gen_bool(0.5) { c } else { c.recip() };
            let b = -c.recip();
            if b.abs() > two {
                continue;
            }
            return [Rational::zero(), b, c, small_rational(rng, 2)];
        }
        let a = small_rational(rng, 2);
        if a.abs() < rational::frac(1, 2) {
            continue;
        }
        let b = small_rational(rng, 2);
        let c = small_rational(rng, 2);
        let d = (rational::one() + &b * &c) / &a;
        if d.abs() <= two {
            return [a, b, c, d];
        }
    }
}

pub fn random_group_params<R: Rng>(rng: &mut R) -> GroupParams {
    GroupParams {
        sl2_1: sl2(rng),
        sl2_2: sl2(rng),
        a3: rational::frac(rng.gen_range(1..=8), 2),
        lambda1p: small_rational(rng, 2),
        mu1p: small_rational(rng, 2),
        lambda2p: small_rational(rng, 2),
        mu2p: small_rational(rng, 2),
        kappa: small_rational(rng, 2),
    }
}

/// A point of the domain near `i·I₃`.
pub fn random_siegel_point<R: Rng>(rng: &mut R) -> SiegelPoint {
    loop {
        let re: [f64; 5] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let im = [
            rng.gen_range(0.5..1.5),
            rng.gen_range(0.5..1.5),
            rng.gen_range(0.5..1.5),
            rng.gen_range(-0.3..0.3),
            rng.gen_range(-0.3..0.3),
        ];
        let z = SiegelPoint::new(std::array::from_fn(|k| Complex64::new(re[k], im[k])));
        if in_domain(&z) {
            return z;
        }
    }
}

/// `n, n′ ≤ 3`, `|η₃| ≤ 2`.
pub fn random_multiplier<R: Rng>(rng: &mut R) -> MultiplierParams {
    MultiplierParams {
        n: rng.gen_range(0..=3),
        nprime: rng.gen_range(0..=3),
        eta3: rng.gen_range(-2.0..=2.0),
    }
}
