//! Ideal lattices of finite-dimensional Lie algebras: closure-based
//! enumeration, covering relations, completeness certificates, and export.

mod certify;
mod export;

use std::collections::HashSet;

pub use certify::{
    certify, CertStatus, Certificate, GapCheck, GapVerdict, SiblingCheck, SiblingVerdict,
};
pub use export::{label_for, to_dot, to_json};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{unit, Subspace};

pub const DEFAULT_MAX_COUNT: usize = 512;

#[derive(Debug, Clone)]
pub struct IdealLattice {
    /// Sorted by dimension, then lexicographically by canonical basis.
    pub ideals: Vec<Subspace>,
    /// `(i, j)` with `ideals[i] ⊂ ideals[j]` a covering.
    pub coverings: Vec<(usize, usize)>,
    pub certificate: Certificate,
}

impl IdealLattice {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn position(&self, s: &Subspace) -> Option<usize> {
        self.ideals.iter().position(|i| i == s)
    }
}

/// Enumerates the ideals of `algebra` and certifies the result.
///
/// Candidates start from `0`, `g` and the ideal closures of the basis lines,
/// closed under sums and intersections. Any missing ideal the certificate
/// exposes as a single invariant line in a covering gap is added and the
/// closure rerun.
pub fn enumerate_ideals(algebra: &LieAlgebra, max_count: usize) -> Result<IdealLattice> {
    let n = algebra.dim();
    let mut seeds = vec![Subspace::zero(n), Subspace::full(n)];
    for i in 0..n {
        let line = Subspace::span(n, &[unit(n, i)])?;
        seeds.push(algebra.ideal_closure(&line)?);
    }
    loop {
        let ideals = close(seeds.clone(), max_count)?;
        let coverings = covering_relations(&ideals);
        let certificate = certify(algebra, &ideals, &coverings)?;
        match certificate.status {
            CertStatus::InfiniteFamilyDetected => {
                return Err(Error::InfiniteFamilyDetected(
                    certificate.describe_failure(),
                ));
            }
            CertStatus::Incomplete => {
                let missing = certificate.missing_ideals();
                debug_assert!(!missing.is_empty());
                seeds = ideals;
                seeds.extend(missing);
            }
            _ => {
                return Ok(IdealLattice {
                    ideals,
                    coverings,
                    certificate,
                })
            }
        }
    }
}

fn close(seeds: Vec<Subspace>, max_count: usize) -> Result<Vec<Subspace>> {
    let mut seen: HashSet<Subspace> = HashSet::new();
    let mut all: Vec<Subspace> = Vec::new();
    let mut push = |s: Subspace, all: &mut Vec<Subspace>| -> Result<()> {
        if seen.insert(s.clone()) {
            all.push(s);
            if all.len() > max_count {
                return Err(Error::IdealCountExceeded(max_count));
            }
        }
        Ok(())
    };
    for s in seeds {
        push(s, &mut all)?;
    }
    let mut done = 0;
    while done < all.len() {
        let end = all.len();
        for i in done..end {
            for j in 0..end {
                let sum = all[i].sum(&all[j])?;
                let meet = all[i].intersect(&all[j])?;
                push(sum, &mut all)?;
                push(meet, &mut all)?;
            }
        }
        done = end;
    }
    all.sort_by_key(Subspace::sort_key);
    Ok(all)
}

/// Covering pairs of the inclusion order: `(i, j)` iff `I_i ⊊ I_j` with
/// nothing strictly between.
pub fn covering_relations(ideals: &[Subspace]) -> Vec<(usize, usize)> {
    let m = ideals.len();
    let below: Vec<Vec<bool>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    i != j
                        && ideals[i].dim() < ideals[j].dim()
                        && ideals[j].contains_subspace(&ideals[i]).unwrap_or(false)
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if below[i][j] && !(0..m).any(|k| below[i][k] && below[k][j]) {
                out.push((i, j));
            }
        }
    }
    out
}
