use std::fmt;

use num_traits::Zero;

use super::matrix::RMatrix;
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// A subspace of ℚⁿ stored by its reduced row-echelon basis.
///
/// Because the representation is canonical, two subspaces are equal as sets
/// exactly when they compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: RMatrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: RMatrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: RMatrix::identity(ambient),
        }
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &RMatrix) -> Self {
        let (r, rank) = m.rref();
        let rows: Vec<Vec<Rational>> = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Self {
            ambient: m.cols(),
            basis: RMatrix::from_rows(m.cols(), &rows).expect("rows share the ambient width"),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        Ok(Self::row_space(&RMatrix::from_rows(ambient, vectors)?))
    }

    /// Span of standard basis vectors `e_i`, `i ∈ indices`.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let rows: Vec<Vec<Rational>> = indices.iter().map(|&i| unit(ambient, i)).collect();
        Self::span(ambient, &rows).expect("unit vectors have the ambient width")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &RMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.pivots()
    }

    fn check(&self, other: usize) -> Result<()> {
        if self.ambient != other {
            return Err(Error::AmbientMismatch(self.ambient, other));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other.ambient)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// Intersection by Zassenhaus: reduce `[u | u]` over `[v | 0]`; rows with a
    /// vanishing left half span the intersection in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other.ambient)?;
        let n = self.ambient;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(n));
        }
        let rows = self.dim() + other.dim();
        let block = RMatrix::from_fn(rows, 2 * n, |i, j| {
            if i < self.dim() {
                self.basis[(i, j % n)].clone()
            } else if j < n {
                other.basis[(i - self.dim(), j)].clone()
            } else {
                Rational::zero()
            }
        });
        let (r, rank) = block.rref();
        let found: Vec<Vec<Rational>> = (0..rank)
            .map(|i| r.row(i))
            .filter(|row| row[..n].iter().all(Zero::is_zero))
            .map(|row| row[n..].to_vec())
            .collect();
        Self::span(n, &found)
    }

    pub fn contains(&self, w: &[Rational]) -> Result<bool> {
        self.check(w.len())?;
        if w.iter().all(Zero::is_zero) {
            return Ok(true);
        }
        // RREF basis: w ∈ U iff w equals Σ w[pivot_i]·row_i
        let residual = self.reduce(w);
        Ok(residual.iter().all(Zero::is_zero))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check(other.ambient)?;
        for v in other.basis_vectors() {
            if !self.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `w − Σ w[pivot_i]·row_i`: zero exactly when `w` lies in the subspace.
    /// The result vanishes on every pivot column.
    pub fn reduce(&self, w: &[Rational]) -> Vec<Rational> {
        let mut out = w.to_vec();
        for (i, p) in self.pivots().into_iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (o, b) in out.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *o -= &c * b;
                }
            }
        }
        out
    }

    /// Coordinates of `w` with respect to the stored basis, if `w` lies in it.
    pub fn coordinates(&self, w: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if !self.contains(w)? {
            return Ok(None);
        }
        Ok(Some(
            self.pivots().into_iter().map(|p| w[p].clone()).collect(),
        ))
    }

    /// `(dim, row-major basis entries)`: dimension first, then lexicographic.
    pub fn sort_key(&self) -> (usize, Vec<Rational>) {
        (self.dim(), self.basis.row_vecs().concat())
    }
}

/// Kernel `{v : m·v = 0}` in canonical form.
pub fn kernel(m: &RMatrix) -> Subspace {
    let n = m.cols();
    let (r, rank) = m.rref();
    let pivots: Vec<usize> = r.pivots();
    debug_assert_eq!(pivots.len(), rank);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let vectors: Vec<Vec<Rational>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            v
        })
        .collect();
    Subspace::span(n, &vectors).expect("kernel vectors have width n")
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = rational::one();
    v
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in ℚ^{}) ", self.dim(), self.ambient)?;
        f.debug_list()
            .entries(
                self.basis_vectors()
                    .iter()
                    .map(|r| r.iter().map(rational::format).collect::<Vec<_>>().join(" ")),
            )
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        assert_eq!(kernel(&RMatrix::zeros(3, 3)), Subspace::full(3));
        assert_eq!(kernel(&RMatrix::identity(3)), Subspace::zero(3));
        let k = kernel(&RMatrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(k, Subspace::span(2, &[v(&[-2, 1])]).unwrap());
    }

    #[test]
    fn sum_and_intersection() {
        let e1 = Subspace::coordinate(3, &[0]);
        let e2 = Subspace::coordinate(3, &[1]);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::coordinate(3, &[0, 1]));
        assert_eq!(e1.intersect(&e2).unwrap(), Subspace::zero(3));
        let u = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(u.intersect(&u).unwrap(), u);
        let w = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 0, 1])]).unwrap();
        // (1,1,0) - (0,1,1) = (1,0,-1) is the common line
        assert_eq!(
            u.intersect(&w).unwrap(),
            Subspace::span(3, &[v(&[1, 0, -1])]).unwrap()
        );
    }

    #[test]
    fn membership_and_mismatch() {
        let u = Subspace::span(3, &[v(&[1, 1, 0])]).unwrap();
        assert!(u.contains(&v(&[2, 2, 0])).unwrap());
        assert!(!u.contains(&v(&[1, 0, 0])).unwrap());
        assert_eq!(u.contains(&v(&[1, 1])), Err(Error::AmbientMismatch(3, 2)));
        assert!(u.sum(&Subspace::zero(4)).is_err());
        assert!(u.intersect(&Subspace::zero(4)).is_err());
    }

    #[test]
    fn coordinates_read_pivots() {
        let u = Subspace::span(3, &[v(&[1, 0, 2]), v(&[0, 1, 3])]).unwrap();
        let c = u.coordinates(&v(&[2, -1, 1])).unwrap().unwrap();
        assert_eq!(c, v(&[2, -1]));
        assert_eq!(u.coordinates(&v(&[0, 0, 1])).unwrap(), None);
    }
}
