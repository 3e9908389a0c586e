//! The 6×6 linear group realizing the automorphism group, built exactly from
//! its free parameters.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{rational, RMatrix, Rational};

/// An `SL(2)` quadruple `(a, b, c, d)` with `ad − bc = 1`.
pub type Sl2 = [Rational; 4];

/// Free parameters of a group element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupParams {
    #[serde(with = "quad_str")]
    pub sl2_1: Sl2,
    #[serde(with = "quad_str")]
    pub sl2_2: Sl2,
    #[serde(with = "rat_str")]
    pub a3: Rational,
    #[serde(with = "rat_str")]
    pub lambda1p: Rational,
    #[serde(with = "rat_str")]
    pub mu1p: Rational,
    #[serde(with = "rat_str")]
    pub lambda2p: Rational,
    #[serde(with = "rat_str")]
    pub mu2p: Rational,
    #[serde(with = "rat_str")]
    pub kappa: Rational,
}

impl GroupParams {
    pub fn identity() -> Self {
        Self {
            sl2_1: sl2_identity(),
            sl2_2: sl2_identity(),
            a3: Rational::one(),
            lambda1p: Rational::zero(),
            mu1p: Rational::zero(),
            lambda2p: Rational::zero(),
            mu2p: Rational::zero(),
            kappa: Rational::zero(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for q in [&self.sl2_1, &self.sl2_2] {
            let det = sl2_det(q);
            if !det.is_one() {
                return Err(Error::BadDeterminant(rational::format(&det)));
            }
        }
        if !self.a3.is_positive() {
            return Err(Error::NonPositiveA3(rational::format(&self.a3)));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain record")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

pub fn sl2_identity() -> Sl2 {
    [
        rational::one(),
        rational::zero(),
        rational::zero(),
        rational::one(),
    ]
}

pub fn sl2_det(q: &Sl2) -> Rational {
    &q[0] * &q[3] - &q[1] * &q[2]
}

pub fn sl2_mul(x: &Sl2, y: &Sl2) -> Sl2 {
    [
        &x[0] * &y[0] + &x[1] * &y[2],
        &x[0] * &y[1] + &x[1] * &y[3],
        &x[2] * &y[0] + &x[3] * &y[2],
        &x[2] * &y[1] + &x[3] * &y[3],
    ]
}

pub fn sl2_inverse(x: &Sl2) -> Sl2 {
    [x[3].clone(), -&x[1], -&x[2], x[0].clone()]
}

/// A member of the linear group together with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement {
    matrix: RMatrix,
    params: GroupParams,
}

impl GroupElement {
    pub fn identity() -> Self {
        from_params(&GroupParams::identity()).expect("identity parameters are valid")
    }

    pub fn matrix(&self) -> &RMatrix {
        &self.matrix
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    /// Reads the parameters back from a matrix, if it is a member.
    pub fn from_matrix(m: &RMatrix) -> Result<Self> {
        let params = params_of(m).ok_or_else(|| {
            Error::VerificationFailed("matrix is not a member of the group".into())
        })?;
        Ok(Self {
            matrix: m.clone(),
            params,
        })
    }

    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement> {
        Self::from_matrix(&self.matrix.mul(&other.matrix)?)
    }

    /// Exact inverse, revalidated as a member.
    pub fn inverse(&self) -> Result<GroupElement> {
        Self::from_matrix(&self.matrix.inverse()?)
    }
}

// 0-based positions of the entries carrying parameters
const FREE_ENTRIES: [(usize, usize); 19] = [
    (0, 0),
    (0, 3),
    (0, 5),
    (1, 1),
    (1, 4),
    (1, 5),
    (2, 0),
    (2, 1),
    (2, 2),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 0),
    (3, 3),
    (3, 5),
    (4, 1),
    (4, 4),
    (4, 5),
    (5, 5),
];

pub fn from_params(p: &GroupParams) -> Result<GroupElement> {
    p.validate()?;
    let [a1, b1, c1, d1] = &p.sl2_1;
    let [a2, b2, c2, d2] = &p.sl2_2;
    let a3 = &p.a3;
    let lambda1 = a3 * (a1 * &p.lambda1p + c1 * &p.mu1p);
    let mu1 = a3 * (b1 * &p.lambda1p + d1 * &p.mu1p);
    let lambda2 = a3 * (a2 * &p.lambda2p + c2 * &p.mu2p);
    let mu2 = a3 * (b2 * &p.lambda2p + d2 * &p.mu2p);

    let mut m = RMatrix::zeros(6, 6);
    m[(0, 0)] = a1.clone();
    m[(0, 3)] = b1.clone();
    m[(0, 5)] = p.mu1p.clone();
    m[(1, 1)] = a2.clone();
    m[(1, 4)] = b2.clone();
    m[(1, 5)] = p.mu2p.clone();
    m[(2, 0)] = lambda1;
    m[(2, 1)] = lambda2;
    m[(2, 2)] = a3.clone();
    m[(2, 3)] = mu1;
    m[(2, 4)] = mu2;
    m[(2, 5)] = p.kappa.clone();
    m[(3, 0)] = c1.clone();
    m[(3, 3)] = d1.clone();
    m[(3, 5)] = -&p.lambda1p;
    m[(4, 1)] = c2.clone();
    m[(4, 4)] = d2.clone();
    m[(4, 5)] = -&p.lambda2p;
    m[(5, 5)] = a3.recip();
    Ok(GroupElement {
        matrix: m,
        params: p.clone(),
    })
}

/// Parameters of `m` if it satisfies the zero pattern, `a₃ > 0`,
/// `(6,6) = 1/a₃`, both determinant conditions and the row-3 constraints.
pub fn params_of(m: &RMatrix) -> Option<GroupParams> {
    if m.rows() != 6 || m.cols() != 6 {
        return None;
    }
    for i in 0..6 {
        for j in 0..6 {
            if !FREE_ENTRIES.contains(&(i, j)) && !m[(i, j)].is_zero() {
                return None;
            }
        }
    }
    let a3 = m[(2, 2)].clone();
    if !a3.is_positive() || m[(5, 5)] != a3.recip() {
        return None;
    }
    let p = GroupParams {
        sl2_1: [
            m[(0, 0)].clone(),
            m[(0, 3)].clone(),
            m[(3, 0)].clone(),
            m[(3, 3)].clone(),
        ],
        sl2_2: [
            m[(1, 1)].clone(),
            m[(1, 4)].clone(),
            m[(4, 1)].clone(),
            m[(4, 4)].clone(),
        ],
        a3,
        lambda1p: -&m[(3, 5)],
        mu1p: m[(0, 5)].clone(),
        lambda2p: -&m[(4, 5)],
        mu2p: m[(1, 5)].clone(),
        kappa: m[(2, 5)].clone(),
    };
    let rebuilt = from_params(&p).ok()?;
    (rebuilt.matrix == *m).then_some(p)
}

pub fn is_member(m: &RMatrix) -> bool {
    params_of(m).is_some()
}

/// Blocks `(A, B, C, D)` of a 6×6 matrix, each 3×3.
pub fn blocks(m: &RMatrix) -> [RMatrix; 4] {
    let block = |r0: usize, c0: usize| RMatrix::from_fn(3, 3, |i, j| m[(r0 + i, c0 + j)].clone());
    [block(0, 0), block(0, 3), block(3, 0), block(3, 3)]
}

/// `AᵀC` and `BᵀD` symmetric and `AᵀD − CᵀB = I`, exactly.
pub fn symplectic_check(m: &RMatrix) -> bool {
    if m.rows() != 6 || m.cols() != 6 {
        return false;
    }
    let [a, b, c, d] = blocks(m);
    let prod = |x: &RMatrix, y: &RMatrix| x.transpose().mul(y).expect("3x3");
    let atc = prod(&a, &c);
    let btd = prod(&b, &d);
    let cross = prod(&a, &d).sub(&prod(&c, &b)).expect("3x3");
    atc == atc.transpose() && btd == btd.transpose() && cross == RMatrix::identity(3)
}

mod rat_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::linalg::{rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational::format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        rational::parse(&text).map_err(serde::de::Error::custom)
    }
}

mod quad_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::linalg::{rational, Rational};

    pub fn serialize<S: Serializer>(q: &[Rational; 4], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(q.iter().map(rational::format))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[Rational; 4], D::Error> {
        let text = <[String; 4]>::deserialize(d)?;
        let mut out: [Rational; 4] = Default::default();
        for (o, t) in out.iter_mut().zip(&text) {
            *o = rational::parse(t).map_err(serde::de::Error::custom)?;
        }
        Ok(out)
    }
}
