//! Univariate polynomials over ℚ (coefficients in increasing degree): just
//! enough to find rational eigenvalues of small matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;

/// Divisor enumeration is skipped past this bound.
const MAX_TRIAL: u64 = 1 << 40;

pub fn eval(p: &[Rational], t: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
}

pub fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Divides by `(t − root)`; the remainder is discarded.
pub fn deflate(p: &[Rational], root: &Rational) -> Vec<Rational> {
    let Some(deg) = degree(p) else {
        return Vec::new();
    };
    let mut out = vec![Rational::zero(); deg];
    let mut carry = Rational::zero();
    for i in (1..=deg).rev() {
        carry = &p[i] + carry * root;
        out[i - 1] = carry.clone();
    }
    out
}

/// Distinct rational roots, or `None` when the coefficients are too large
/// for exhaustive candidate enumeration.
pub fn rational_roots(p: &[Rational]) -> Option<Vec<Rational>> {
    let deg = degree(p)?;
    let mut roots = Vec::new();
    let low = p.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(Rational::zero());
    }
    let reduced = &p[low..=deg];
    if reduced.len() <= 1 {
        return Some(roots);
    }
    let lcm = reduced
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = reduced
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let a0 = divisors(&ints[0])?;
    let an = divisors(ints.last().unwrap())?;
    for num in &a0 {
        for den in &an {
            for sign in [1i64, -1] {
                let cand = Rational::new(BigInt::from(*num) * sign, BigInt::from(*den));
                if eval(reduced, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > MAX_TRIAL {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

/// Whether `p` has a real root that is not rational. `None` when undecidable
/// here (huge coefficients, or degree above 3 after removing rational roots).
pub fn has_irrational_real_root(p: &[Rational]) -> Option<bool> {
    let mut rest = p.to_vec();
    loop {
        let roots = rational_roots(&rest)?;
        if roots.is_empty() {
            break;
        }
        for r in &roots {
            rest = deflate(&rest, r);
        }
    }
    match degree(&rest) {
        None | Some(0) => Some(false),
        Some(1) => Some(false),
        Some(2) => {
            let disc = &rest[1] * &rest[1] - Rational::from_integer(4.into()) * &rest[2] * &rest[0];
            Some(!disc.is_negative())
        }
        Some(3) => Some(true),
        Some(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{frac, int};

    fn p(xs: &[Rational]) -> Vec<Rational> {
        xs.to_vec()
    }

    #[test]
    fn finds_rational_roots() {
        // (t - 1/2)(t + 3) t = t^3 + 5/2 t^2 - 3/2 t
        let poly = p(&[int(0), frac(-3, 2), frac(5, 2), int(1)]);
        assert_eq!(
            rational_roots(&poly).unwrap(),
            vec![int(-3), int(0), frac(1, 2)]
        );
        // t^2 + 1 has none
        assert!(rational_roots(&p(&[int(1), int(0), int(1)]))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn irrational_real_roots() {
        // t^2 - 2
        assert_eq!(
            has_irrational_real_root(&p(&[int(-2), int(0), int(1)])),
            Some(true)
        );
        // t^2 + 1
        assert_eq!(
            has_irrational_real_root(&p(&[int(1), int(0), int(1)])),
            Some(false)
        );
        // (t-1)^2 (t+2)
        let q = p(&[int(2), int(-3), int(0), int(1)]);
        assert_eq!(has_irrational_real_root(&q), Some(false));
    }

    #[test]
    fn deflation() {
        // (t-2)(t-3) / (t-2) = t - 3
        let q = deflate(&p(&[int(6), int(-5), int(1)]), &int(2));
        assert_eq!(q, vec![int(-3), int(1)]);
    }
}
