//! Structural computations on a Lie algebra: ideals, series, Killing form,
//! radical, automorphisms and quotients.

use num_traits::Zero;

use super::algebra::{Element, LieAlgebra, LinearMap};
use crate::error::{Error, Result};
use crate::linalg::{kernel, unit, RMatrix, Rational, Subspace};

impl LieAlgebra {
    /// Matrix of `ad x` on an `ad x`-invariant subspace, in the canonical basis
    /// of that subspace.
    pub fn ad_restricted(&self, x: &Element<'_>, inv: &Subspace) -> Result<RMatrix> {
        self.check_ambient(inv)?;
        let basis = inv.basis_vectors();
        let mut cols = Vec::with_capacity(basis.len());
        for b in &basis {
            let image = self.bracket_vec(x.coeffs(), b);
            cols.push(inv.coordinates(&image)?.ok_or(Error::NotInvariant)?);
        }
        let d = basis.len();
        Ok(RMatrix::from_fn(d, d, |i, j| cols[j][i].clone()))
    }

    /// Smallest ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace) -> Result<Subspace> {
        self.check_ambient(s)?;
        let n = self.dim();
        let mut current = s.clone();
        loop {
            let mut vectors = current.basis_vectors();
            for v in current.basis_vectors() {
                for i in 0..n {
                    let w = self.bracket_vec(&unit(n, i), &v);
                    if !current.contains(&w)? {
                        vectors.push(w);
                    }
                }
            }
            let next = Subspace::span(n, &vectors)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        let b = self.bracket_subspaces(&self.whole(), s)?;
        s.contains_subspace(&b)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        let b = self.bracket_subspaces(s, s)?;
        s.contains_subspace(&b)
    }

    /// Common kernel of all `ad x_i`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut stacked = RMatrix::zeros(0, n);
        for i in 0..n {
            stacked = stacked
                .vstack(&self.ad_vec(&unit(n, i)))
                .expect("ad matrices share width");
        }
        kernel(&stacked)
    }

    pub fn derived_algebra(&self) -> Subspace {
        self.bracket_subspaces(&self.whole(), &self.whole())
            .expect("whole space has the right ambient")
    }

    /// `D_0 = g`, `D_{k+1} = [D_k, D_k]`, stopping once a term repeats.
    pub fn derived_series(&self) -> Vec<Subspace> {
        self.series(|d| self.bracket_subspaces(d, d))
    }

    /// `C_0 = g`, `C_{k+1} = [g, C_k]`, stopping once a term repeats.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let g = self.whole();
        self.series(|c| self.bracket_subspaces(&g, c))
    }

    fn series(&self, step: impl Fn(&Subspace) -> Result<Subspace>) -> Vec<Subspace> {
        let mut out = vec![self.whole()];
        loop {
            let next = step(out.last().unwrap()).expect("series terms share the ambient");
            if &next == out.last().unwrap() {
                return out;
            }
            out.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series()
            .last()
            .is_some_and(Subspace::is_zero)
    }

    /// Killing form `K(x_i, x_j) = tr(ad x_i ∘ ad x_j)`.
    pub fn killing_matrix(&self) -> RMatrix {
        let n = self.dim();
        let ads: Vec<RMatrix> = (0..n).map(|i| self.ad_vec(&unit(n, i))).collect();
        let mut k = RMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].mul(&ads[j]).expect("square").trace();
                k[(i, j)] = t.clone();
                k[(j, i)] = t;
            }
        }
        k
    }

    /// Killing form of the subalgebra `s` itself (its own adjoint action),
    /// in the canonical basis of `s`.
    pub fn killing_restricted(&self, s: &Subspace) -> Result<RMatrix> {
        if !self.is_subalgebra(s)? {
            return Err(Error::NotSubalgebra);
        }
        Ok(self.subalgebra(s)?.killing_matrix())
    }

    /// Killing form evaluated on two vectors.
    pub fn killing(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let k = self.killing_matrix();
        let ky = k.mul_vec(y).expect("dimension");
        x.iter()
            .zip(&ky)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Maximal solvable ideal, computed as `{x : K(x, [g,g]) = 0}` and then
    /// certified to be a solvable ideal.
    pub fn radical(&self) -> Result<Subspace> {
        let d = self.derived_algebra();
        let candidate = if d.is_zero() {
            self.whole()
        } else {
            kernel(&d.basis().mul(&self.killing_matrix())?)
        };
        if !self.is_ideal(&candidate)? {
            return Err(Error::VerificationFailed(
                "radical candidate is not an ideal".into(),
            ));
        }
        if !self.subalgebra(&candidate)?.is_solvable() {
            return Err(Error::VerificationFailed(
                "radical candidate is not solvable".into(),
            ));
        }
        Ok(candidate)
    }

    /// `true` iff `t` is an invertible map with `t[x_i,x_j] = [t x_i, t x_j]`.
    pub fn check_automorphism(&self, t: &LinearMap) -> Result<bool> {
        if t.dim() != self.dim() {
            return Err(Error::AmbientMismatch(self.dim(), t.dim()));
        }
        if t.matrix().det()?.is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = self.dim();
        let images: Vec<Vec<Rational>> = (0..n).map(|i| t.matrix().column(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = t.apply(&self.basis_bracket(i, j))?;
                let rhs = self.bracket_vec(&images[i], &images[j]);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Quotient `g / I` on the complement spanned by the non-pivot coordinates
    /// of `I`, together with the projection `g → g/I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, RMatrix)> {
        self.check_ambient(ideal)?;
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let n = self.dim();
        let pivots = ideal.pivots();
        let keep: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let project = |v: &[Rational]| -> Vec<Rational> {
            let r = ideal.reduce(v);
            keep.iter().map(|&c| r[c].clone()).collect()
        };
        let m = keep.len();
        let projection = {
            let cols: Vec<Vec<Rational>> = (0..n).map(|j| project(&unit(n, j))).collect();
            RMatrix::from_fn(m, n, |i, j| cols[j][i].clone())
        };
        let mut brackets = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                let c = project(&self.basis_bracket(keep[a], keep[b]));
                let terms: Vec<(usize, Rational)> = c
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect();
                if !terms.is_empty() {
                    brackets.push((a, b, terms));
                }
            }
        }
        let names = keep.iter().map(|&c| self.names()[c].clone()).collect();
        let q = LieAlgebra::from_brackets(names, &brackets)?;
        if !q.jacobi_violations().is_empty() {
            return Err(Error::VerificationFailed("quotient violates Jacobi".into()));
        }
        Ok((q, projection))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{frac, int};

    /// Standalone 3-dim Heisenberg algebra [X, Y] = Z.
    fn heisenberg() -> LieAlgebra {
        LieAlgebra::from_brackets(
            vec!["X".into(), "Y".into(), "Z".into()],
            &[(0, 1, vec![(2, int(1))])],
        )
        .unwrap()
    }

    /// sl(2) with [H,E]=2E, [H,F]=-2F, [E,F]=H.
    fn sl2() -> LieAlgebra {
        LieAlgebra::from_brackets(
            vec!["H".into(), "E".into(), "F".into()],
            &[
                (0, 1, vec![(1, int(2))]),
                (0, 2, vec![(2, int(-2))]),
                (1, 2, vec![(0, int(1))]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn heisenberg_center_and_series() {
        let h = heisenberg();
        assert_eq!(h.center(), Subspace::coordinate(3, &[2]));
        assert_eq!(
            h.derived_series(),
            vec![
                Subspace::full(3),
                Subspace::coordinate(3, &[2]),
                Subspace::zero(3)
            ]
        );
        assert!(h.is_nilpotent());
        assert_eq!(h.radical().unwrap(), Subspace::full(3));
    }

    #[test]
    fn abelian_degenerate_cases() {
        let a = LieAlgebra::abelian(2);
        assert_eq!(a.center(), Subspace::full(2));
        assert!(a.killing_matrix().is_zero());
        assert_eq!(a.radical().unwrap(), Subspace::full(2));
        assert_eq!(
            a.derived_series(),
            vec![Subspace::full(2), Subspace::zero(2)]
        );
        assert!(a.jacobi_violations().is_empty());
    }

    #[test]
    fn sl2_is_semisimple() {
        let s = sl2();
        let k = s.killing_matrix();
        // K(H,H) = 8, K(E,F) = 4
        assert_eq!(k[(0, 0)], int(8));
        assert_eq!(k[(1, 2)], int(4));
        assert_ne!(k.det().unwrap(), int(0));
        assert!(s.radical().unwrap().is_zero());
        assert!(s.center().is_zero());
    }

    #[test]
    fn quotient_of_heisenberg_by_center_is_abelian() {
        let h = heisenberg();
        let (q, p) = h.quotient(&h.center()).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.nonzero_pairs(), 0);
        assert_eq!(p.rows(), 2);
        assert_eq!(
            h.quotient(&Subspace::coordinate(3, &[0])).unwrap_err(),
            Error::NotAnIdeal
        );
        let (z, _) = h.quotient(&Subspace::full(3)).unwrap();
        assert_eq!(z.dim(), 0);
    }

    #[test]
    fn restricted_ad_requires_invariance() {
        let h = heisenberg();
        let x = h.basis_element(0);
        let inv = Subspace::coordinate(3, &[1, 2]);
        let m = h.ad_restricted(&x, &inv).unwrap();
        assert_eq!(m, RMatrix::from_i64(&[&[0, 0], &[1, 0]]));
        let not_inv = Subspace::coordinate(3, &[1]);
        assert_eq!(h.ad_restricted(&x, &not_inv), Err(Error::NotInvariant));
    }

    #[test]
    fn automorphism_check_rejects_singular_maps() {
        let s = sl2();
        let zero = LinearMap::new(RMatrix::zeros(3, 3)).unwrap();
        assert_eq!(s.check_automorphism(&zero), Err(Error::NotInvertible));
        // Chevalley involution H -> -H, E -> -F, F -> -E
        let theta = LinearMap::from_images(&[
            vec![int(-1), int(0), int(0)],
            vec![int(0), int(0), int(-1)],
            vec![int(0), int(-1), int(0)],
        ])
        .unwrap();
        assert!(s.check_automorphism(&theta).unwrap());
        let stretch = LinearMap::from_images(&[
            vec![frac(1, 2), int(0), int(0)],
            vec![int(0), int(1), int(0)],
            vec![int(0), int(0), int(1)],
        ])
        .unwrap();
        assert!(!s.check_automorphism(&stretch).unwrap());
    }
}
