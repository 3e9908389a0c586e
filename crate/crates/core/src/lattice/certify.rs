//! Completeness certificate for a closure-generated ideal lattice.
//!
//! Every covering gap `J/I` is checked for irreducibility as a module over the
//! algebra, and every pair of atoms above a common ideal is checked for
//! non-isomorphism. Together these rule out both missed intermediate ideals
//! and continuous families of them.

use std::collections::HashSet;

use num_traits::Zero;

use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::linalg::poly::{has_irrational_real_root, rational_roots};
use crate::linalg::{kernel, unit, RMatrix, Rational, Subspace};

/// Largest gap dimension whose irreducibility is decided exactly.
pub const MAX_DECIDABLE_GAP: usize = 3;

/// Grids larger than this make the invertibility probe give up.
const MAX_PROBES: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub enum GapVerdict {
    Irreducible,
    /// The gap contains finitely many invariant subspaces; these ideals are
    /// missing from the lattice.
    Reducible {
        missing: Vec<Subspace>,
    },
    /// A whole family of invariant lines lives in the gap.
    Continuum,
    /// Real irrational eigenvalues block an exact decision.
    Undecided,
    /// Gap dimension above [`MAX_DECIDABLE_GAP`].
    TooLarge,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapCheck {
    pub lower: usize,
    pub upper: usize,
    pub dim: usize,
    pub verdict: GapVerdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SiblingVerdict {
    NonIsomorphic,
    Isomorphic,
    Undecided,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SiblingCheck {
    pub base: usize,
    pub left: usize,
    pub right: usize,
    pub verdict: SiblingVerdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertStatus {
    Certified,
    /// Sound except for gaps above the given dimension (or undecidable ones).
    CertifiedUpToDim(usize),
    /// Some gap is reducible with finitely many new ideals.
    Incomplete,
    InfiniteFamilyDetected,
}

impl CertStatus {
    pub fn label(&self) -> String {
        match self {
            CertStatus::Certified => "Certified".into(),
            CertStatus::CertifiedUpToDim(d) => format!("CertifiedUpToDim({d})"),
            CertStatus::Incomplete => "Incomplete".into(),
            CertStatus::InfiniteFamilyDetected => "InfiniteFamilyDetected".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub gap_checks: Vec<GapCheck>,
    pub sibling_checks: Vec<SiblingCheck>,
    pub status: CertStatus,
}

impl Certificate {
    pub fn missing_ideals(&self) -> Vec<Subspace> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in &self.gap_checks {
            if let GapVerdict::Reducible { missing } = &g.verdict {
                for m in missing {
                    if seen.insert(m.clone()) {
                        out.push(m.clone());
                    }
                }
            }
        }
        out
    }

    pub fn describe_failure(&self) -> String {
        let mut parts = Vec::new();
        for g in &self.gap_checks {
            if g.verdict == GapVerdict::Continuum {
                parts.push(format!(
                    "gap {}->{} (dim {}) carries a family of invariant lines",
                    g.lower, g.upper, g.dim
                ));
            }
        }
        for s in &self.sibling_checks {
            if s.verdict == SiblingVerdict::Isomorphic {
                parts.push(format!(
                    "atoms {} and {} over {} have isomorphic quotients",
                    s.left, s.right, s.base
                ));
            }
        }
        parts.join("; ")
    }
}

/// The quotient module `J/I` with one action matrix per basis element.
struct QuotientModule {
    dim: usize,
    ops: Vec<RMatrix>,
}

impl QuotientModule {
    fn new(
        algebra: &LieAlgebra,
        lower: &Subspace,
        upper: &Subspace,
    ) -> Result<(Self, Vec<Vec<Rational>>)> {
        let n = algebra.dim();
        let reduced: Vec<Vec<Rational>> = upper
            .basis_vectors()
            .iter()
            .map(|v| lower.reduce(v))
            .collect();
        let complement = Subspace::span(n, &reduced)?;
        let basis = complement.basis_vectors();
        let d = basis.len();
        let mut ops = Vec::with_capacity(n);
        for k in 0..n {
            let x = unit(n, k);
            let mut cols = Vec::with_capacity(d);
            for b in &basis {
                let image = lower.reduce(&algebra.bracket_vec(&x, b));
                let coords = complement
                    .coordinates(&image)?
                    .expect("upper is an ideal containing lower");
                cols.push(coords);
            }
            ops.push(RMatrix::from_fn(d, d, |i, j| cols[j][i].clone()));
        }
        Ok((Self { dim: d, ops }, basis))
    }

    fn combine(&self, coeffs: &[Rational]) -> RMatrix {
        let mut m = RMatrix::zeros(self.dim, self.dim);
        for (c, op) in coeffs.iter().zip(&self.ops) {
            if !c.is_zero() {
                m = m.add(&op.scale(c)).expect("same shape");
            }
        }
        m
    }
}

enum LineSearch {
    Lines(Vec<Vec<Rational>>),
    Continuum,
    Undecided,
}

/// Common eigenvectors of `ops`. A common eigenvector spans a 1-dim
/// representation, which kills the derived algebra, so the search runs
/// inside the joint kernel of `derived`, where the remaining ops commute.
fn invariant_lines(d: usize, ops: &[RMatrix], derived: &[RMatrix]) -> LineSearch {
    let mut stacked = RMatrix::zeros(0, d);
    for m in derived {
        stacked = stacked.vstack(m).expect("same width");
    }
    let joint = kernel(&stacked);
    if joint.is_zero() {
        return LineSearch::Lines(Vec::new());
    }
    let mut spaces = vec![joint];
    for op in ops {
        let mut next = Vec::new();
        for s in &spaces {
            let basis = s.basis_vectors();
            let cols: Vec<Vec<Rational>> = basis
                .iter()
                .map(|b| {
                    let image = op.mul_vec(b).expect("width");
                    s.coordinates(&image)
                        .expect("width")
                        .expect("space is invariant")
                })
                .collect();
            let k = basis.len();
            let restricted = RMatrix::from_fn(k, k, |i, j| cols[j][i].clone());
            let cp = restricted.char_poly().expect("square");
            if has_irrational_real_root(&cp) != Some(false) {
                return LineSearch::Undecided;
            }
            let Some(roots) = rational_roots(&cp) else {
                return LineSearch::Undecided;
            };
            for r in roots {
                let mut shifted = op.clone();
                for i in 0..d {
                    shifted[(i, i)] -= &r;
                }
                let e = kernel(&shifted).intersect(s).expect("width");
                if !e.is_zero() {
                    next.push(e);
                }
            }
        }
        if next.is_empty() {
            return LineSearch::Lines(Vec::new());
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.dim() >= 2) {
        return LineSearch::Continuum;
    }
    LineSearch::Lines(spaces.iter().map(|s| s.basis().row(0).to_vec()).collect())
}

fn check_gap(
    algebra: &LieAlgebra,
    derived: &Subspace,
    lower: &Subspace,
    upper: &Subspace,
) -> Result<GapVerdict> {
    let d = upper.dim() - lower.dim();
    if d == 1 {
        return Ok(GapVerdict::Irreducible);
    }
    if d > MAX_DECIDABLE_GAP {
        return Ok(GapVerdict::TooLarge);
    }
    let (module, basis) = QuotientModule::new(algebra, lower, upper)?;
    let derived_ops: Vec<RMatrix> = derived
        .basis_vectors()
        .iter()
        .map(|v| module.combine(v))
        .collect();
    let lift = |coords: &[Rational]| -> Vec<Rational> {
        let mut w = vec![Rational::zero(); algebra.dim()];
        for (c, b) in coords.iter().zip(&basis) {
            for (wi, bi) in w.iter_mut().zip(b) {
                *wi += c * bi;
            }
        }
        w
    };

    let mut undecided = false;
    let mut missing = Vec::new();

    match invariant_lines(d, &module.ops, &derived_ops) {
        LineSearch::Continuum => return Ok(GapVerdict::Continuum),
        LineSearch::Undecided => undecided = true,
        LineSearch::Lines(lines) => {
            for v in lines {
                missing.push(lower.sum(&Subspace::span(algebra.dim(), &[lift(&v)])?)?);
            }
        }
    }
    // invariant hyperplanes are invariant lines of the dual action
    let dual_ops: Vec<RMatrix> = module.ops.iter().map(RMatrix::transpose).collect();
    let dual_derived: Vec<RMatrix> = derived_ops.iter().map(RMatrix::transpose).collect();
    match invariant_lines(d, &dual_ops, &dual_derived) {
        LineSearch::Continuum => return Ok(GapVerdict::Continuum),
        LineSearch::Undecided => undecided = true,
        LineSearch::Lines(functionals) => {
            for f in functionals {
                let f_row = RMatrix::from_rows(d, &[f])?;
                let plane: Vec<Vec<Rational>> = kernel(&f_row)
                    .basis_vectors()
                    .iter()
                    .map(|c| lift(c))
                    .collect();
                missing.push(lower.sum(&Subspace::span(algebra.dim(), &plane)?)?);
            }
        }
    }
    missing.sort_by_key(Subspace::sort_key);
    missing.dedup();
    Ok(if !missing.is_empty() {
        GapVerdict::Reducible { missing }
    } else if undecided {
        GapVerdict::Undecided
    } else {
        GapVerdict::Irreducible
    })
}

/// Decides whether the two quotient modules admit an invertible intertwiner.
fn modules_isomorphic(a: &QuotientModule, b: &QuotientModule) -> SiblingVerdict {
    if a.dim != b.dim {
        return SiblingVerdict::NonIsomorphic;
    }
    let d = a.dim;
    // unknown X[r][c] at index r*d + c; equations X·A_k − B_k·X = 0
    let mut rows = Vec::new();
    for (ak, bk) in a.ops.iter().zip(&b.ops) {
        for r in 0..d {
            for c in 0..d {
                let mut eq = vec![Rational::zero(); d * d];
                for m in 0..d {
                    eq[r * d + m] += &ak[(m, c)];
                    eq[m * d + c] -= &bk[(r, m)];
                }
                rows.push(eq);
            }
        }
    }
    let system = RMatrix::from_rows(d * d, &rows).expect("uniform width");
    let space = kernel(&system).basis_vectors();
    if space.is_empty() {
        return SiblingVerdict::NonIsomorphic;
    }
    // det(Σ t_i X_i) has degree ≤ d in each t_i, so it vanishes on the grid
    // {0..d}^m only if it vanishes identically
    let m = space.len();
    let Some(total) = (d + 1).checked_pow(m as u32).filter(|&t| t <= MAX_PROBES) else {
        return SiblingVerdict::Undecided;
    };
    for idx in 0..total {
        let mut rest = idx;
        let mut x = vec![Rational::zero(); d * d];
        for basis in &space {
            let t = Rational::from_integer(((rest % (d + 1)) as i64).into());
            rest /= d + 1;
            if t.is_zero() {
                continue;
            }
            for (xi, bi) in x.iter_mut().zip(basis) {
                *xi += &t * bi;
            }
        }
        let mat = RMatrix::from_fn(d, d, |r, c| x[r * d + c].clone());
        if !mat.det().expect("square").is_zero() {
            return SiblingVerdict::Isomorphic;
        }
    }
    SiblingVerdict::NonIsomorphic
}

/// Certifies a sum/intersection-closed list of ideals with its coverings.
pub fn certify(
    algebra: &LieAlgebra,
    ideals: &[Subspace],
    coverings: &[(usize, usize)],
) -> Result<Certificate> {
    let derived = algebra.derived_algebra();
    let mut gap_checks = Vec::with_capacity(coverings.len());
    for &(i, j) in coverings {
        let verdict = check_gap(algebra, &derived, &ideals[i], &ideals[j])?;
        gap_checks.push(GapCheck {
            lower: i,
            upper: j,
            dim: ideals[j].dim() - ideals[i].dim(),
            verdict,
        });
    }

    let mut sibling_checks = Vec::new();
    for base in 0..ideals.len() {
        let atoms: Vec<usize> = coverings
            .iter()
            .filter(|c| c.0 == base)
            .map(|c| c.1)
            .collect();
        if atoms.len() < 2 {
            continue;
        }
        let modules: Vec<QuotientModule> = atoms
            .iter()
            .map(|&a| QuotientModule::new(algebra, &ideals[base], &ideals[a]).map(|m| m.0))
            .collect::<Result<_>>()?;
        for x in 0..atoms.len() {
            for y in x + 1..atoms.len() {
                sibling_checks.push(SiblingCheck {
                    base,
                    left: atoms[x],
                    right: atoms[y],
                    verdict: modules_isomorphic(&modules[x], &modules[y]),
                });
            }
        }
    }

    let status = if gap_checks
        .iter()
        .any(|g| g.verdict == GapVerdict::Continuum)
        || sibling_checks
            .iter()
            .any(|s| s.verdict == SiblingVerdict::Isomorphic)
    {
        CertStatus::InfiniteFamilyDetected
    } else if gap_checks
        .iter()
        .any(|g| matches!(g.verdict, GapVerdict::Reducible { .. }))
    {
        CertStatus::Incomplete
    } else if gap_checks
        .iter()
        .any(|g| matches!(g.verdict, GapVerdict::TooLarge | GapVerdict::Undecided))
        || sibling_checks
            .iter()
            .any(|s| s.verdict == SiblingVerdict::Undecided)
    {
        CertStatus::CertifiedUpToDim(MAX_DECIDABLE_GAP)
    } else {
        CertStatus::Certified
    };
    Ok(Certificate {
        gap_checks,
        sibling_checks,
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::covering_relations;
    use crate::linalg::rational::int;

    #[test]
    fn trivial_two_dim_gap_is_a_continuum() {
        let a = LieAlgebra::abelian(2);
        let ideals = vec![Subspace::zero(2), Subspace::full(2)];
        let cert = certify(&a, &ideals, &covering_relations(&ideals)).unwrap();
        assert_eq!(cert.gap_checks[0].verdict, GapVerdict::Continuum);
        assert_eq!(cert.status, CertStatus::InfiniteFamilyDetected);
    }

    #[test]
    fn one_dim_gap_is_irreducible() {
        let a = LieAlgebra::abelian(1);
        let ideals = vec![Subspace::zero(1), Subspace::full(1)];
        let cert = certify(&a, &ideals, &covering_relations(&ideals)).unwrap();
        assert_eq!(cert.gap_checks[0].verdict, GapVerdict::Irreducible);
        assert_eq!(cert.status, CertStatus::Certified);
    }

    #[test]
    fn large_gap_degrades_status() {
        // a 4-dim gap is beyond the exact decision
        let a = LieAlgebra::abelian(4);
        let ideals = vec![Subspace::zero(4), Subspace::full(4)];
        let cert = certify(&a, &ideals, &covering_relations(&ideals)).unwrap();
        assert_eq!(cert.gap_checks[0].verdict, GapVerdict::TooLarge);
        assert_eq!(cert.status, CertStatus::CertifiedUpToDim(3));
    }

    #[test]
    fn rotation_gap_without_real_lines_is_irreducible() {
        // [T, X] = Y, [T, Y] = -X: the plane <X,Y> has no invariant real line
        let a = LieAlgebra::from_brackets(
            vec!["T".into(), "X".into(), "Y".into()],
            &[(0, 1, vec![(2, int(1))]), (0, 2, vec![(1, int(-1))])],
        )
        .unwrap();
        let ideals = vec![
            Subspace::zero(3),
            Subspace::coordinate(3, &[1, 2]),
            Subspace::full(3),
        ];
        let cert = certify(&a, &ideals, &covering_relations(&ideals)).unwrap();
        assert_eq!(cert.gap_checks[0].dim, 2);
        assert_eq!(cert.gap_checks[0].verdict, GapVerdict::Irreducible);
        assert_eq!(cert.status, CertStatus::Certified);
    }

    #[test]
    fn hyperbolic_gap_with_irrational_lines_is_undecided() {
        // [T, X] = 2Y, [T, Y] = X: eigenvalues ±√2
        let a = LieAlgebra::from_brackets(
            vec!["T".into(), "X".into(), "Y".into()],
            &[(0, 1, vec![(2, int(2))]), (0, 2, vec![(1, int(1))])],
        )
        .unwrap();
        let ideals = vec![
            Subspace::zero(3),
            Subspace::coordinate(3, &[1, 2]),
            Subspace::full(3),
        ];
        let cert = certify(&a, &ideals, &covering_relations(&ideals)).unwrap();
        assert_eq!(cert.gap_checks[0].dim, 2);
        assert_eq!(cert.gap_checks[0].verdict, GapVerdict::Undecided);
        assert_eq!(cert.status, CertStatus::CertifiedUpToDim(3));
    }
}
