//! The 12-dimensional algebra of the automorphism group of the tube domain
//! over the dual Vinberg cone, its named subspaces, and its two outer
//! automorphisms.
//!
//! The structure constants live only in `data/g_vinberg_tube.json`; this
//! module loads them.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::lie::{LieAlgebra, LinearMap};
use crate::linalg::{rational, unit, Rational, Subspace};

/// The bundled algebra file.
pub const ALGEBRA_JSON: &str = include_str!("../data/g_vinberg_tube.json");

/// Basis indices in the canonical order
/// `E1, E2, E3, E31, E32, A1, A2, A3, A31, A32, W1, W2`.
pub mod basis {
    pub const E1: usize = 0;
    pub const E2: usize = 1;
    pub const E3: usize = 2;
    pub const E31: usize = 3;
    pub const E32: usize = 4;
    pub const A1: usize = 5;
    pub const A2: usize = 6;
    pub const A3: usize = 7;
    pub const A31: usize = 8;
    pub const A32: usize = 9;
    pub const W1: usize = 10;
    pub const W2: usize = 11;

    pub const DIM: usize = 12;
    pub const NAMES: [&str; DIM] = [
        "E1", "E2", "E3", "E31", "E32", "A1", "A2", "A3", "A31", "A32", "W1", "W2",
    ];
}

use basis::*;

pub fn paper_algebra() -> LieAlgebra {
    static ALGEBRA: OnceLock<LieAlgebra> = OnceLock::new();
    ALGEBRA
        .get_or_init(|| LieAlgebra::from_json(ALGEBRA_JSON).expect("bundled algebra file is valid"))
        .clone()
}

/// Keys: `h5`, `h3`, `h3'`, `a1`, `s3`, `s3'`, `b`, `<E3>`, `<W1,W2>`.
pub fn paper_subspaces() -> BTreeMap<&'static str, Subspace> {
    let c = |idx: &[usize]| Subspace::coordinate(DIM, idx);
    BTreeMap::from([
        ("h5", c(&[E3, E31, E32, A31, A32])),
        ("h3", c(&[E3, E31, A31])),
        ("h3'", c(&[E3, E32, A32])),
        ("a1", c(&[A3])),
        ("s3", c(&[E1, A1, W1])),
        ("s3'", c(&[E2, A2, W2])),
        ("b", c(&[E1, E2, E3, E31, E32, A1, A2, A3, A31, A32])),
        ("<E3>", c(&[E3])),
        ("<W1,W2>", c(&[W1, W2])),
    ])
}

/// Sum of named subspaces, e.g. `named_sum(&["h5", "s3"])`.
pub fn named_sum(parts: &[&str]) -> Subspace {
    let all = paper_subspaces();
    parts.iter().fold(Subspace::zero(DIM), |acc, p| {
        acc.sum(&all[p]).expect("named subspaces share the ambient")
    })
}

/// Building blocks for naming ideals, in display order.
pub fn ideal_components() -> Vec<(String, Subspace)> {
    let all = paper_subspaces();
    ["h5", "h3", "h3'", "<E3>", "a1", "s3", "s3'"]
        .iter()
        .map(|k| (k.to_string(), all[k].clone()))
        .collect()
}

/// The swap `1 ↔ 2`: `E1↔E2`, `E31↔E32`, `A1↔A2`, `A31↔A32`, `W1↔W2`,
/// fixing `E3` and `A3`.
pub fn psi() -> LinearMap {
    let swap = |i: usize| match i {
        E1 => E2,
        E2 => E1,
        E31 => E32,
        E32 => E31,
        A1 => A2,
        A2 => A1,
        A31 => A32,
        A32 => A31,
        W1 => W2,
        W2 => W1,
        other => other,
    };
    let images: Vec<Vec<Rational>> = (0..DIM).map(|j| unit(DIM, swap(j))).collect();
    LinearMap::from_images(&images).expect("square")
}

/// `−1` on every `E` and `W`, `+1` on every `A`.
pub fn sigma() -> LinearMap {
    let images: Vec<Vec<Rational>> = (0..DIM)
        .map(|j| {
            let s = if matches!(j, A1 | A2 | A3 | A31 | A32) {
                1
            } else {
                -1
            };
            let mut v = unit(DIM, j);
            v[j] = rational::int(s);
            v
        })
        .collect();
    LinearMap::from_images(&images).expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_file_matches_canonical_names() {
        let g = paper_algebra();
        assert_eq!(g.dim(), DIM);
        let names: Vec<&str> = g.names().iter().map(String::as_str).collect();
        assert_eq!(names, NAMES);
    }

    #[test]
    fn named_subspace_dimensions() {
        let s = paper_subspaces();
        assert_eq!(s["h5"].dim(), 5);
        assert_eq!(s["s3"].dim(), 3);
        assert_eq!(s["b"].dim(), 10);
        assert!(s["h5"].contains_subspace(&s["h3"]).unwrap());
        assert!(s["s3"].intersect(&s["s3'"]).unwrap().is_zero());
    }
}
