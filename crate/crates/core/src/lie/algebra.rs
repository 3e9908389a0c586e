use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{rational, unit, RMatrix, Rational, Subspace};

/// A finite-dimensional Lie algebra over ℚ given by a named basis and
/// structure constants `[x_i, x_j] = Σ_k c[i][j][k] x_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    /// Sparse table indexed by `i * dim + j`.
    table: Vec<Vec<(usize, Rational)>>,
}

/// `(i, j, [(k, c_ij^k), …])`.
pub type BracketSpec = (usize, usize, Vec<(usize, Rational)>);

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        Self::from_brackets((0..dim).map(|i| format!("x{}", i + 1)).collect(), &[])
            .expect("no brackets to validate")
    }

    /// Builds an algebra from the listed brackets `[x_i, x_j]` (with `i ≠ j`);
    /// antisymmetric mirrors are implied and unlisted pairs are zero.
    pub fn from_brackets(names: Vec<String>, brackets: &[BracketSpec]) -> Result<Self> {
        let dim = names.len();
        let mut seen = BTreeMap::new();
        for (pos, n) in names.iter().enumerate() {
            if seen.insert(n.as_str(), pos).is_some() {
                return Err(Error::Parse(format!("duplicate basis name {n:?}")));
            }
        }
        let mut table = vec![Vec::new(); dim * dim];
        for (i, j, terms) in brackets {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim || terms.iter().any(|(k, _)| *k >= dim) {
                return Err(Error::Parse(format!(
                    "bracket index out of range for dim {dim}"
                )));
            }
            let terms: Vec<(usize, Rational)> = merge_terms(terms);
            if i == j {
                if !terms.is_empty() {
                    return Err(Error::Parse(format!("[{0},{0}] must vanish", names[i])));
                }
                continue;
            }
            if !table[i * dim + j].is_empty() || !table[j * dim + i].is_empty() {
                return Err(Error::Parse(format!(
                    "bracket [{},{}] listed twice",
                    names[i], names[j]
                )));
            }
            table[j * dim + i] = terms.iter().map(|(k, c)| (*k, -c.clone())).collect();
            table[i * dim + j] = terms;
        }
        Ok(Self { names, table })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Structure constant `c[i][j][k]`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.table[i * self.dim() + j]
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// `[x_i, x_j]` as a coefficient vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (k, c) in &self.table[i * self.dim() + j] {
            out[*k] = c.clone();
        }
        out
    }

    /// Number of unordered basis pairs with a nonzero bracket.
    pub fn nonzero_pairs(&self) -> usize {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.table[i * n + j].is_empty())
            .count()
    }

    /// Bilinear bracket on raw coefficient vectors.
    pub fn bracket_vec(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let terms = &self.table[i * n + j];
                if terms.is_empty() {
                    continue;
                }
                let s = xi * yj;
                for (k, c) in terms {
                    out[*k] += &s * c;
                }
            }
        }
        out
    }

    pub fn element(&self, coeffs: Vec<Rational>) -> Result<Element<'_>> {
        if coeffs.len() != self.dim() {
            return Err(Error::AmbientMismatch(self.dim(), coeffs.len()));
        }
        Ok(Element {
            algebra: self,
            coeffs,
        })
    }

    pub fn basis_element(&self, i: usize) -> Element<'_> {
        Element {
            algebra: self,
            coeffs: unit(self.dim(), i),
        }
    }

    /// Basis element by name; panics on an unknown name.
    pub fn named(&self, name: &str) -> Element<'_> {
        let i = self
            .index_of(name)
            .unwrap_or_else(|| panic!("no basis element named {name:?}"));
        self.basis_element(i)
    }

    pub fn zero_element(&self) -> Element<'_> {
        Element {
            algebra: self,
            coeffs: vec![Rational::zero(); self.dim()],
        }
    }

    /// Jacobi defects `[[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j]`
    /// over all triples `i < j < k`; empty iff the Jacobi identity holds.
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize, Vec<Rational>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let d = self.jacobi_defect(i, j, k);
                    if d.iter().any(|c| !c.is_zero()) {
                        out.push((i, j, k, d));
                    }
                }
            }
        }
        out
    }

    pub fn jacobi_defect(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let n = self.dim();
        let (xi, xj, xk) = (unit(n, i), unit(n, j), unit(n, k));
        let a = self.bracket_vec(&self.basis_bracket(i, j), &xk);
        let b = self.bracket_vec(&self.basis_bracket(j, k), &xi);
        let c = self.bracket_vec(&self.basis_bracket(k, i), &xj);
        a.into_iter()
            .zip(b)
            .zip(c)
            .map(|((a, b), c)| a + b + c)
            .collect()
    }

    /// Matrix of `ad x` in the basis: column `j` holds `[x, x_j]`.
    pub fn ad_vec(&self, x: &[Rational]) -> RMatrix {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| self.bracket_vec(x, &unit(n, j))).collect();
        RMatrix::from_fn(n, n, |i, j| cols[j][i].clone())
    }

    /// Brackets `[U, V]` of two subspaces (span of all basis brackets).
    pub fn bracket_subspaces(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_ambient(u)?;
        self.check_ambient(v)?;
        let mut vectors = Vec::new();
        for a in u.basis_vectors() {
            for b in v.basis_vectors() {
                let c = self.bracket_vec(&a, &b);
                if c.iter().any(|x| !x.is_zero()) {
                    vectors.push(c);
                }
            }
        }
        Subspace::span(self.dim(), &vectors)
    }

    pub(crate) fn check_ambient(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch(self.dim(), s.ambient_dim()));
        }
        Ok(())
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// The subalgebra `S` as a standalone Lie algebra on the canonical basis of
    /// `S`. Basis names come from the pivot coordinates.
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra> {
        self.check_ambient(s)?;
        let basis = s.basis_vectors();
        let names: Vec<String> = s.pivots().iter().map(|&p| self.names[p].clone()).collect();
        let mut brackets = Vec::new();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                let c = self.bracket_vec(&basis[a], &basis[b]);
                let coords = s.coordinates(&c)?.ok_or(Error::NotSubalgebra)?;
                let terms: Vec<(usize, Rational)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect();
                if !terms.is_empty() {
                    brackets.push((a, b, terms));
                }
            }
        }
        LieAlgebra::from_brackets(names, &brackets)
    }

    /// Canonical vector display such as `2*A1 - W1`.
    pub fn format_vec(&self, v: &[Rational]) -> String {
        let mut out = String::new();
        for (i, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let neg = rational::sign(c) < 0;
            let mag = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !num_traits::One::is_one(&mag) {
                out.push_str(&rational::format(&mag));
                out.push('*');
            }
            out.push_str(&self.names[i]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Display of a subspace by basis, e.g. `<W1,W2>`.
    pub fn format_subspace(&self, s: &Subspace) -> String {
        let parts: Vec<String> = s
            .basis_vectors()
            .iter()
            .map(|v| self.format_vec(v))
            .collect();
        format!("<{}>", parts.join(","))
    }

    pub fn to_file(&self) -> AlgebraFile {
        let n = self.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let terms = &self.table[i * n + j];
                if terms.is_empty() {
                    continue;
                }
                let map = terms
                    .iter()
                    .map(|(k, c)| (self.names[*k].clone(), rational::format(c)))
                    .collect();
                brackets.push((self.names[i].clone(), self.names[j].clone(), map));
            }
        }
        AlgebraFile {
            dim: n,
            names: self.names.clone(),
            brackets,
        }
    }

    pub fn from_file(file: &AlgebraFile) -> Result<Self> {
        if file.names.len() != file.dim {
            return Err(Error::Parse(format!(
                "dim is {} but {} names were given",
                file.dim,
                file.names.len()
            )));
        }
        let lookup = |name: &str| {
            file.names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::Parse(format!("unknown basis name {name:?}")))
        };
        let mut brackets = Vec::with_capacity(file.brackets.len());
        for (a, b, terms) in &file.brackets {
            let mut parsed = Vec::with_capacity(terms.len());
            for (name, value) in terms {
                parsed.push((lookup(name)?, rational::parse(value)?));
            }
            brackets.push((lookup(a)?, lookup(b)?, parsed));
        }
        Self::from_brackets(file.names.clone(), &brackets)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: AlgebraFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("algebra file: {e}")))?;
        Self::from_file(&file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("algebra file serializes")
    }
}

fn merge_terms(terms: &[(usize, Rational)]) -> Vec<(usize, Rational)> {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (k, c) in terms {
        *acc.entry(*k).or_insert_with(Rational::zero) += c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim {}, {:?})", self.dim(), self.names)
    }
}

/// On-disk algebra description: `dim`, `names`, and the nonzero brackets as
/// `[name_i, name_j, {name_k: "p/q", ...}]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub names: Vec<String>,
    pub brackets: Vec<(String, String, BTreeMap<String, String>)>,
}

/// An element of a specific Lie algebra.
#[derive(Clone)]
pub struct Element<'a> {
    algebra: &'a LieAlgebra,
    coeffs: Vec<Rational>,
}

impl<'a> Element<'a> {
    pub fn algebra(&self) -> &'a LieAlgebra {
        self.algebra
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    fn same_algebra(&self, other: &Element<'_>) -> Result<()> {
        if std::ptr::eq(self.algebra, other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn bracket(&self, other: &Element<'_>) -> Result<Element<'a>> {
        self.same_algebra(other)?;
        Ok(Element {
            algebra: self.algebra,
            coeffs: self.algebra.bracket_vec(&self.coeffs, &other.coeffs),
        })
    }

    pub fn add(&self, other: &Element<'_>) -> Result<Element<'a>> {
        self.same_algebra(other)?;
        Ok(Element {
            algebra: self.algebra,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> Element<'a> {
        Element {
            algebra: self.algebra,
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn ad(&self) -> LinearMap {
        LinearMap::new(self.algebra.ad_vec(&self.coeffs)).expect("ad x is square")
    }
}

impl PartialEq for Element<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other).is_ok() && self.coeffs == other.coeffs
    }
}

impl fmt::Debug for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.algebra.format_vec(&self.coeffs))
    }
}

impl fmt::Display for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.algebra.format_vec(&self.coeffs))
    }
}

/// A linear endomorphism of the algebra, as a square matrix in its basis
/// (column `j` is the image of `x_j`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap(RMatrix);

impl LinearMap {
    pub fn new(m: RMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::AmbientMismatch(m.rows(), m.cols()));
        }
        Ok(Self(m))
    }

    pub fn identity(n: usize) -> Self {
        Self(RMatrix::identity(n))
    }

    /// Map sending `x_j` to `images[j]`.
    pub fn from_images(images: &[Vec<Rational>]) -> Result<Self> {
        let n = images.len();
        if images.iter().any(|v| v.len() != n) {
            return Err(Error::AmbientMismatch(
                n,
                images.iter().map(Vec::len).max().unwrap_or(0),
            ));
        }
        Ok(Self(RMatrix::from_fn(n, n, |i, j| images[j][i].clone())))
    }

    pub fn matrix(&self) -> &RMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.0.mul_vec(v)
    }

    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(Self(self.0.mul(&other.0)?))
    }
}
