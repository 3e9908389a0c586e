//! Acceptance gate: twelve criteria, one PASS/FAIL line each. Runs as a plain
//! binary so the lines always reach the test log.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use vinberg::canonical::basis::*;
use vinberg::canonical::{ideal_components, named_sum, paper_algebra, paper_subspaces, psi, sigma};
use vinberg::coadjoint::{
    classify, equivalent, genericity_crosscheck, isotropy_algebra, linear_form, root_spaces_q,
    skew_form_matrix, RepClass, XiParams,
};
use vinberg::lattice::{enumerate_ideals, label_for, CertStatus, DEFAULT_MAX_COUNT};
use vinberg::lie::LinearMap;
use vinberg::linalg::rational::{frac, int};
use vinberg::linalg::{RMatrix, Rational};
use vinberg::model::suites::{self, SuiteReport};
use vinberg::model::{
    adjoint_coeffs, basis_matrices, expand, from_params, random_group_params, sample_rng,
    verify_model, GroupParams,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T: std::fmt::Debug>(x: T) -> String {
    format!("{x:?}")
}

fn unit_vec(k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); DIM];
    v[k] = Rational::one();
    v
}

fn vec_of(terms: &[(usize, Rational)]) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); DIM];
    for (k, c) in terms {
        v[*k] += c;
    }
    v
}

/// Jacobi identity from a dense copy of the structure constants.
fn c1_jacobi() -> Check {
    let g = paper_algebra();
    let c: Vec<Vec<Vec<Rational>>> = (0..DIM)
        .map(|i| (0..DIM).map(|j| g.basis_bracket(i, j)).collect())
        .collect();
    let br = |x: &[Rational], y: &[Rational]| {
        let mut out = vec![Rational::zero(); DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                let s = &x[i] * &y[j];
                if s.is_zero() {
                    continue;
                }
                for (o, ck) in out.iter_mut().zip(&c[i][j]) {
                    *o += &s * ck;
                }
            }
        }
        out
    };
    let mut triples = 0;
    let mut bad = 0;
    for i in 0..DIM {
        for j in i + 1..DIM {
            for k in j + 1..DIM {
                triples += 1;
                let (x, y, z) = (unit_vec(i), unit_vec(j), unit_vec(k));
                let t1 = br(&x, &br(&y, &z));
                let t2 = br(&y, &br(&z, &x));
                let t3 = br(&z, &br(&x, &y));
                if t1
                    .iter()
                    .zip(&t2)
                    .zip(&t3)
                    .any(|((a, b), c)| !(a + b + c).is_zero())
                {
                    bad += 1;
                }
            }
        }
    }
    ensure(triples == 220, format!("{triples} triples"))?;
    ensure(bad == 0, format!("{bad} Jacobi failures (dense check)"))?;
    let lib = g.jacobi_violations().len();
    ensure(lib == 0, format!("library reports {lib} violations"))?;
    Ok(format!("{triples} triples, 0 violations"))
}

fn c2_model() -> Check {
    let g = paper_algebra();
    let mismatches = verify_model(&g).map_err(e)?;
    ensure(
        mismatches.is_empty(),
        format!("{} mismatched pairs", mismatches.len()),
    )?;
    // independent sweep: commutators computed here, compared pair by pair
    let b = basis_matrices();
    let mut nonzero = 0;
    for i in 0..DIM {
        for j in i + 1..DIM {
            let prod = b[i]
                .mul(&b[j])
                .map_err(e)?
                .sub(&b[j].mul(&b[i]).map_err(e)?)
                .map_err(e)?;
            let coeffs = expand(&prod).map_err(e)?;
            ensure(coeffs == g.basis_bracket(i, j), format!("pair ({i},{j})"))?;
            if !prod.is_zero() {
                nonzero += 1;
            }
        }
    }
    Ok(format!(
        "66 pairs agree exactly ({nonzero} nonzero brackets)"
    ))
}

fn c3_lattice() -> Check {
    let g = paper_algebra();
    let start = Instant::now();
    let lattice = enumerate_ideals(&g, DEFAULT_MAX_COUNT).map_err(e)?;
    let elapsed = start.elapsed();
    ensure(lattice.len() == 14, format!("{} ideals", lattice.len()))?;
    ensure(
        lattice.certificate.status == CertStatus::Certified,
        lattice.certificate.status.label(),
    )?;
    ensure(
        elapsed < Duration::from_secs(10),
        format!("took {elapsed:?}"),
    )?;

    let parts = ideal_components();
    let mut got: Vec<(String, String)> = lattice
        .coverings
        .iter()
        .map(|&(i, j)| {
            (
                label_for(&lattice.ideals[i], &parts),
                label_for(&lattice.ideals[j], &parts),
            )
        })
        .collect();
    got.sort();
    // the drawn diagram, plus 0 below <E3> and the three maximal ideals below g
    let mut expected: Vec<(String, String)> = [
        ("h5+s3", "h5+s3+s3'"),
        ("h5+s3'", "h5+s3+s3'"),
        ("h5+s3", "h5+a1+s3"),
        ("h5+a1", "h5+a1+s3"),
        ("h5+a1", "h5+a1+s3'"),
        ("h5+s3'", "h5+a1+s3'"),
        ("h3+s3", "h5+s3"),
        ("h5", "h5+s3"),
        ("h5", "h5+a1"),
        ("h5", "h5+s3'"),
        ("h3'+s3'", "h5+s3'"),
        ("h3'", "h5"),
        ("h3", "h5"),
        ("h3", "h3+s3"),
        ("h3'", "h3'+s3'"),
        ("<E3>", "h3"),
        ("<E3>", "h3'"),
        ("0", "<E3>"),
        ("h5+s3+s3'", "g"),
        ("h5+a1+s3", "g"),
        ("h5+a1+s3'", "g"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    expected.sort();
    ensure(got == expected, format!("coverings differ: {got:?}"))?;
    Ok(format!(
        "14 ideals, Certified, 21 coverings match, {elapsed:.2?}"
    ))
}

/// The displayed skew-form matrix with `(ξ₃, n, n′)` substituted.
fn skew_display(xi3: &Rational, n: i64, np: i64) -> RMatrix {
    let mut m = RMatrix::zeros(DIM, DIM);
    let mut put = |i: usize, j: usize, v: Rational| {
        m[(j, i)] = -v.clone();
        m[(i, j)] = v;
    };
    put(E1, A1, frac(n, 2));
    put(E2, A2, frac(np, 2));
    put(E3, A3, -xi3.clone());
    put(E31, A31, int(-2) * xi3);
    put(E32, A32, int(-2) * xi3);
    m
}

fn c4_skew_form() -> Check {
    let g = paper_algebra();
    let mut count = 0;
    for (xi3, n, np) in [(-1, 1, 1), (-2, 3, 5)] {
        for eta3 in [int(0), frac(7, 3)] {
            let p = XiParams::new(int(xi3), eta3, n, np);
            let got = skew_form_matrix(&g, &linear_form(&p)).map_err(e)?;
            ensure(
                got == skew_display(&int(xi3), n, np),
                format!("mismatch at {p:?}"),
            )?;
            count += 1;
        }
    }
    Ok(format!("{count} parameter points match entry for entry"))
}

fn c5_isotropy() -> Check {
    let g = paper_algebra();
    let spaces = paper_subspaces();
    let generic = isotropy_algebra(&g, &linear_form(&XiParams::ints(-1, 0, 1, 1))).map_err(e)?;
    ensure(generic == spaces["<W1,W2>"], g.format_subspace(&generic))?;
    let degenerate = isotropy_algebra(&g, &linear_form(&XiParams::ints(0, 0, 1, 1))).map_err(e)?;
    ensure(degenerate.dim() == 8, format!("dim {}", degenerate.dim()))?;
    ensure(degenerate.contains(&unit_vec(E3)).map_err(e)?, "E3 missing")?;
    let mut swept = 0;
    for xi3 in [-2, -1, 0] {
        for n in 0..=3 {
            for np in 0..=3 {
                let p = XiParams::ints(xi3, 0, n, np);
                if !classify(&p).is_unitarizable() {
                    continue;
                }
                ensure(
                    genericity_crosscheck(&g, &p).map_err(e)?,
                    format!("crosscheck at {p:?}"),
                )?;
                swept += 1;
            }
        }
    }
    Ok(format!(
        "<W1,W2>, dim-8 kernel with E3, crosscheck on {swept} points"
    ))
}

fn c6_classification() -> Check {
    let mut checked = 0;
    for xi3 in [-2, -1, 0] {
        for n in 0..=3 {
            for np in 0..=3 {
                for eta3 in [frac(-3, 2), int(0), int(2)] {
                    let p = XiParams::new(int(xi3), eta3.clone(), n, np);
                    let expected = if xi3 < 0 && n >= 1 && np >= 1 {
                        RepClass::GenericCS { n, nprime: np }
                    } else if xi3 == 0 && (n, np) == (0, 0) {
                        RepClass::Character
                    } else if xi3 == 0 {
                        RepClass::NonGenericCS {
                            eta3: eta3.clone(),
                            n,
                            nprime: np,
                        }
                    } else {
                        RepClass::NotUnitarizable
                    };
                    ensure(classify(&p) == expected, format!("classify {p:?}"))?;
                    checked += 1;
                }
            }
        }
    }
    // generic classes forget ξ₃ and η₃; singleton classes remember η₃
    for n in 1..=3 {
        for np in 1..=3 {
            let a = XiParams::new(int(-1), int(0), n, np);
            let b = XiParams::new(frac(-7, 3), int(5), n, np);
            ensure(
                equivalent(&a, &b).map_err(e)?,
                "generic classes should merge",
            )?;
        }
    }
    for (n, np) in [(0, 1), (2, 0), (1, 1), (0, 0)] {
        let a = XiParams::new(int(0), int(1), n, np);
        let b = XiParams::new(int(0), int(2), n, np);
        ensure(
            !equivalent(&a, &b).map_err(e)?,
            "η₃ must separate singleton classes",
        )?;
        ensure(equivalent(&a, &a).map_err(e)?, "reflexivity")?;
    }
    ensure(
        !equivalent(&XiParams::ints(-1, 0, 1, 2), &XiParams::ints(-1, 0, 2, 1)).map_err(e)?,
        "(n, n′) must separate generic classes",
    )?;
    ensure(
        equivalent(&XiParams::ints(1, 0, 1, 1), &XiParams::ints(-1, 0, 1, 1)).is_err(),
        "non-unitarizable input must be rejected",
    )?;
    Ok(format!("{checked} verdicts and equivalences agree"))
}

fn c7_q_values() -> Check {
    let q = root_spaces_q(&paper_algebra()).map_err(e)?;
    ensure(q == [1, 1, 0], format!("{q:?}"))?;
    Ok("q = (1, 1, 0)".into())
}

/// The six closed forms for `Ad(g⁻¹)`, transcribed independently of the
/// library's suite.
fn ad_oracle(p: &GroupParams, i: usize) -> [(usize, Vec<Rational>); 3] {
    let (q, lp, mp) = if i == 1 {
        (&p.sl2_1, &p.lambda1p, &p.mu1p)
    } else {
        (&p.sl2_2, &p.lambda2p, &p.mu2p)
    };
    let (ei, e3i, ai, a3i, wi) = if i == 1 {
        (E1, E31, A1, A31, W1)
    } else {
        (E2, E32, A2, A32, W2)
    };
    let [a, b, c, d] = q.clone();
    let a3 = p.a3.clone();
    let two = int(2);
    [
        (
            ei,
            vec_of(&[
                (ei, &d * &d - &c * &c),
                (E3, lp * lp),
                (e3i, -(&d * lp)),
                (ai, &two * &c * &d),
                (a3i, -(&c * lp)),
                (wi, -(&c * &c)),
            ]),
        ),
        (
            a3i,
            vec_of(&[(E3, &two * mp / &a3), (e3i, &b / &a3), (a3i, &a / &a3)]),
        ),
        (
            wi,
            vec_of(&[
                (ei, -(&d * &d) + &c * &c - &b * &b + &a * &a),
                (E3, -(mp * mp) - lp * lp),
                (e3i, &d * lp - &b * mp),
                (ai, -(&two * &c * &d) - &two * &a * &b),
                (a3i, &c * lp - &a * mp),
                (wi, &c * &c + &a * &a),
            ]),
        ),
    ]
}

fn c8_ad_oracles() -> Check {
    let mut rng = sample_rng(42);
    let mut checks = 0;
    for _ in 0..50 {
        let g = from_params(&random_group_params(&mut rng)).map_err(e)?;
        let gi = g.inverse().map_err(e)?;
        for i in [1, 2] {
            for (k, expected) in ad_oracle(g.params(), i) {
                let got = adjoint_coeffs(&gi, &unit_vec(k)).map_err(e)?;
                ensure(
                    got == expected,
                    format!("{} differs for {:?}", NAMES[k], g.params()),
                )?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} exact formula checks on 50 elements"))
}

fn c9_restricted_ad_matrix() -> Check {
    let g = paper_algebra();
    let target = named_sum(&["h5", "a1"]);
    let mut rng = sample_rng(42);
    let half = frac(1, 2);
    for _ in 0..20 {
        use rand::Rng;
        let x: Vec<Rational> = (0..DIM)
            .map(|_| frac(rng.gen_range(-12..=12), rng.gen_range(1..=6)))
            .collect();
        let c = |k: usize| x[k].clone();
        let z = Rational::zero;
        let expected = RMatrix::from_rows(
            6,
            &[
                vec![
                    c(A3),
                    int(2) * c(A31),
                    int(2) * c(A32),
                    -c(E3),
                    int(-2) * c(E31),
                    int(-2) * c(E32),
                ],
                vec![
                    z(),
                    (c(A3) + c(A1)) * &half,
                    z(),
                    -c(E31) * &half,
                    c(W1) - c(E1),
                    z(),
                ],
                vec![
                    z(),
                    z(),
                    (c(A3) + c(A2)) * &half,
                    -c(E32) * &half,
                    z(),
                    c(W2) - c(E2),
                ],
                vec![z(), z(), z(), z(), z(), z()],
                vec![
                    z(),
                    -c(W1),
                    z(),
                    -c(A31) * &half,
                    (c(A3) - c(A1)) * &half,
                    z(),
                ],
                vec![
                    z(),
                    z(),
                    -c(W2),
                    -c(A32) * &half,
                    z(),
                    (c(A3) - c(A2)) * &half,
                ],
            ],
        )
        .map_err(e)?;
        let elem = g.element(x.clone()).map_err(e)?;
        let got = g.ad_restricted(&elem, &target).map_err(e)?;
        ensure(got == expected, format!("mismatch at {}", g.format_vec(&x)))?;
    }
    Ok("20 random elements match".into())
}

fn c10_structure() -> Check {
    let g = paper_algebra();
    ensure(g.center().is_zero(), "center is nonzero")?;
    let derived = g.derived_algebra();
    ensure(
        derived == named_sum(&["h5", "s3", "s3'"]),
        g.format_subspace(&derived),
    )?;
    ensure(derived.dim() == 11, "derived dim")?;
    let radical = g.radical().map_err(e)?;
    ensure(
        radical == named_sum(&["h5", "a1"]),
        g.format_subspace(&radical),
    )?;
    ensure(radical.dim() == 6, "radical dim")?;
    let k = g
        .killing_restricted(&named_sum(&["s3", "s3'"]))
        .map_err(e)?;
    let det = k.det().map_err(e)?;
    ensure(!det.is_zero(), "Killing form on s3+s3' is degenerate")?;
    Ok(format!(
        "center 0, derived dim 11, radical dim 6, det K = {det}"
    ))
}

fn c11_analytic() -> Check {
    let tol = 1e-9;
    let reports: Vec<SuiteReport> = suites::run_all(42, 100, tol).map_err(e)?;
    let mut worst = 0.0f64;
    for r in &reports {
        ensure(r.passed, format!("{} failed: {r:?}", r.name))?;
        if r.exact {
            ensure(r.failures == 0, format!("{} not exact", r.name))?;
        } else {
            ensure(
                r.max_residual < tol,
                format!("{} residual {:e}", r.name, r.max_residual),
            )?;
            worst = worst.max(r.max_residual);
        }
    }
    let iso = suites::isotropy(1e-10);
    ensure(
        iso.passed,
        format!("isotropy residual {:e}", iso.max_residual),
    )?;
    Ok(format!(
        "{} suites pass, max float residual {worst:.2e}",
        reports.len()
    ))
}

fn c12_automorphisms() -> Check {
    let g = paper_algebra();
    let (p, s) = (psi(), sigma());
    ensure(
        g.check_automorphism(&p).map_err(e)?,
        "psi is not an automorphism",
    )?;
    ensure(
        g.check_automorphism(&s).map_err(e)?,
        "sigma is not an automorphism",
    )?;
    let id = LinearMap::identity(DIM);
    ensure(p.compose(&p).map_err(e)? == id, "psi^2 != id")?;
    ensure(s.compose(&s).map_err(e)? == id, "sigma^2 != id")?;
    ensure(
        p.compose(&s).map_err(e)? == s.compose(&p).map_err(e)?,
        "psi and sigma do not commute",
    )?;
    ensure(p != id && s != id && p != s, "maps are not distinct")?;
    Ok("psi, sigma involutive, commuting automorphisms".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("structure-constant integrity", c1_jacobi),
        ("model agreement", c2_model),
        ("ideal lattice", c3_lattice),
        ("skew form", c4_skew_form),
        ("isotropy", c5_isotropy),
        ("classification table", c6_classification),
        ("q-values", c7_q_values),
        ("adjoint oracles", c8_ad_oracles),
        ("restricted ad matrix", c9_restricted_ad_matrix),
        ("structural facts", c10_structure),
        ("analytic suite", c11_analytic),
        ("automorphisms", c12_automorphisms),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        match result {
            Ok(detail) => println!("criterion {:2} PASS  {name}: {detail} [{took:.2?}]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:2} FAIL  {name}: {why} [{took:.2?}]", k + 1);
            }
        }
    }
    println!("acceptance: {} of 12 criteria pass", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
