//! Linear forms on the algebra, the skew form `ξ([x, y])`, isotropy algebras,
//! and the classification of the parameter family `ξ(ξ₃, η₃, n, n′)`.

use std::fmt;

use num_traits::{Signed, Zero};
use serde_json::json;

use crate::canonical::basis::*;
use crate::canonical::paper_subspaces;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{kernel, rational, unit, RMatrix, Rational, Subspace};

/// Parameters of `ξ = ξ₃E₃* + η₃A₃* + (n/2)(2W₁* − E₁*) + (n′/2)(2W₂* − E₂*)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct XiParams {
    pub xi3: Rational,
    pub eta3: Rational,
    pub n: i64,
    pub nprime: i64,
}

impl XiParams {
    pub fn new(xi3: Rational, eta3: Rational, n: i64, nprime: i64) -> Self {
        Self {
            xi3,
            eta3,
            n,
            nprime,
        }
    }

    pub fn ints(xi3: i64, eta3: i64, n: i64, nprime: i64) -> Self {
        Self::new(rational::int(xi3), rational::int(eta3), n, nprime)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RepClass {
    NotUnitarizable,
    /// `ξ₃ = 0`, `n = n′ = 0`: a one-dimensional unitary character.
    Character,
    /// The class `Θ(n, n′)`; `ξ₃ < 0` and `η₃` are forgotten.
    GenericCS {
        n: i64,
        nprime: i64,
    },
    /// The singleton class `Θ(η₃, n, n′)` at `ξ₃ = 0`.
    NonGenericCS {
        eta3: Rational,
        n: i64,
        nprime: i64,
    },
}

impl RepClass {
    pub fn is_unitarizable(&self) -> bool {
        !matches!(self, RepClass::NotUnitarizable)
    }

    pub fn name(&self) -> &'static str {
        match self {
            RepClass::NotUnitarizable => "NotUnitarizable",
            RepClass::Character => "Character",
            RepClass::GenericCS { .. } => "GenericCS",
            RepClass::NonGenericCS { .. } => "NonGenericCS",
        }
    }
}

impl fmt::Display for RepClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepClass::GenericCS { n, nprime } => write!(f, "GenericCS({n},{nprime})"),
            RepClass::NonGenericCS { eta3, n, nprime } => {
                write!(f, "NonGenericCS({},{n},{nprime})", rational::format(eta3))
            }
            other => f.write_str(other.name()),
        }
    }
}

/// Coefficients of ξ in the dual basis, canonical order.
pub fn linear_form(p: &XiParams) -> Vec<Rational> {
    let half = rational::frac(1, 2);
    let n = rational::int(p.n);
    let np = rational::int(p.nprime);
    let mut xi = vec![Rational::zero(); DIM];
    xi[E1] = -(&n * &half);
    xi[E2] = -(&np * &half);
    xi[E3] = p.xi3.clone();
    xi[A3] = p.eta3.clone();
    xi[W1] = n;
    xi[W2] = np;
    xi
}

/// Entry `(i, j)` is `⟨ξ, [x_i, x_j]⟩`.
pub fn skew_form_matrix(algebra: &LieAlgebra, xi: &[Rational]) -> Result<RMatrix> {
    let n = algebra.dim();
    if xi.len() != n {
        return Err(Error::AmbientMismatch(n, xi.len()));
    }
    let pair = |i: usize, j: usize| {
        algebra
            .basis_bracket(i, j)
            .iter()
            .zip(xi)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    };
    Ok(RMatrix::from_fn(n, n, pair))
}

/// `g_ξ = {x : ξ([x, y]) = 0 for all y}`, checked to be a subalgebra.
pub fn isotropy_algebra(algebra: &LieAlgebra, xi: &[Rational]) -> Result<Subspace> {
    let k = kernel(&skew_form_matrix(algebra, xi)?);
    if !algebra.is_subalgebra(&k)? {
        return Err(Error::VerificationFailed(
            "isotropy kernel is not a subalgebra".into(),
        ));
    }
    Ok(k)
}

pub fn classify(p: &XiParams) -> RepClass {
    let (n, np) = (p.n, p.nprime);
    if p.xi3.is_negative() && n >= 1 && np >= 1 {
        RepClass::GenericCS { n, nprime: np }
    } else if p.xi3.is_zero() && n >= 0 && np >= 0 {
        if n == 0 && np == 0 {
            RepClass::Character
        } else {
            RepClass::NonGenericCS {
                eta3: p.eta3.clone(),
                n,
                nprime: np,
            }
        }
    } else {
        RepClass::NotUnitarizable
    }
}

/// Whether the two parameter points give unitarily equivalent representations.
pub fn equivalent(p: &XiParams, q: &XiParams) -> Result<bool> {
    let (a, b) = (classify(p), classify(q));
    if !a.is_unitarizable() || !b.is_unitarizable() {
        return Err(Error::NotUnitarizableInput);
    }
    // characters are singleton classes too, told apart by η₃
    if a == RepClass::Character && b == RepClass::Character {
        return Ok(p.eta3 == q.eta3);
    }
    Ok(a == b)
}

/// Checks that the closed-form verdict agrees with the isotropy kernel:
/// generic iff `g_ξ = ⟨W₁, W₂⟩`.
pub fn genericity_crosscheck(algebra: &LieAlgebra, p: &XiParams) -> Result<bool> {
    let generic_by_params = matches!(classify(p), RepClass::GenericCS { .. });
    let iso = isotropy_algebra(algebra, &linear_form(p))?;
    let generic_by_kernel = iso == paper_subspaces()["<W1,W2>"];
    Ok(generic_by_params == generic_by_kernel)
}

/// `b_α = {x ∈ b : [y, x] = α(y) x for all y ∈ ⟨A₁, A₂, A₃⟩}` where `alpha`
/// gives `α(A₁), α(A₂), α(A₃)`.
pub fn root_space(algebra: &LieAlgebra, alpha: &[Rational; 3]) -> Result<Subspace> {
    let b = paper_subspaces()["b"].clone();
    let mut space = b;
    for (idx, a) in [A1, A2, A3].into_iter().zip(alpha) {
        let mut shifted = algebra.ad_vec(&unit(algebra.dim(), idx));
        for i in 0..algebra.dim() {
            shifted[(i, i)] -= a;
        }
        space = space.intersect(&kernel(&shifted))?;
    }
    Ok(space)
}

/// `q_k = Σ_{3 ≥ l > k ≥ 1} dim b_{(A_l* − A_k*)/2}`.
pub fn root_spaces_q(algebra: &LieAlgebra) -> Result<[usize; 3]> {
    for name in ["A1", "A2", "A3"] {
        if algebra.index_of(name).is_none() {
            return Err(Error::Parse(format!("algebra has no basis element {name}")));
        }
    }
    let mut q = [0usize; 3];
    for (k, qk) in q.iter_mut().enumerate() {
        for l in k + 1..3 {
            *qk += root_space(algebra, &difference_weight(l, k))?.dim();
        }
    }
    Ok(q)
}

/// `(A_l* − A_k*)/2` evaluated on `A₁, A₂, A₃` (0-based `l`, `k`).
pub fn difference_weight(l: usize, k: usize) -> [Rational; 3] {
    std::array::from_fn(|i| {
        if i == l {
            rational::frac(1, 2)
        } else if i == k {
            rational::frac(-1, 2)
        } else {
            Rational::zero()
        }
    })
}

/// `Re s_k > q_k / 2` for `k = 1, 2, 3`.
pub fn satisfies_ishi_bound(s: &[Rational; 3], q: &[usize; 3]) -> bool {
    s.iter()
        .zip(q)
        .all(|(sk, qk)| sk > &rational::frac(*qk as i64, 2))
}

/// Machine-readable verdict, optionally with the isotropy data.
pub fn verdict_json(
    algebra: &LieAlgebra,
    p: &XiParams,
    with_kernel: bool,
) -> Result<serde_json::Value> {
    let class = classify(p);
    let (n, np, eta3) = match &class {
        RepClass::GenericCS { n, nprime } => (json!(n), json!(nprime), json!(null)),
        RepClass::NonGenericCS { eta3, n, nprime } => {
            (json!(n), json!(nprime), json!(rational::format(eta3)))
        }
        _ => (json!(null), json!(null), json!(null)),
    };
    let mut doc = json!({
        "verdict": class.name(),
        "n": n,
        "nprime": np,
        "eta3": eta3,
    });
    if with_kernel {
        let iso = isotropy_algebra(algebra, &linear_form(p))?;
        let basis: Vec<Vec<String>> = iso
            .basis_vectors()
            .iter()
            .map(|row| row.iter().map(rational::format).collect())
            .collect();
        doc["isotropy_dim"] = json!(iso.dim());
        doc["isotropy_basis"] = json!(basis);
        doc["isotropy"] = json!(algebra.format_subspace(&iso));
        doc["crosscheck"] = json!(genericity_crosscheck(algebra, p)?);
    }
    Ok(doc)
}
